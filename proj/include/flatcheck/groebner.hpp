#ifndef FLATCHECK_GROEBNER_HPP
#define FLATCHECK_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "flatcheck/poly.hpp"

namespace flatcheck {

struct Budget {
    long max_pairs = 50000;
    int max_degree = 40;
};

/// Process-wide default budget; the CLI overrides it from flags.
Budget& default_budget();

/// Element of a free module R^rank; entries share one ring. Position-over-term
/// order throughout: lower component index has strictly higher priority.
using Vec = std::vector<Polynomial>;

Vec vec_zero(const RingPtr& r, int rank);
Vec vec_unit(const RingPtr& r, int rank, int i);
bool vec_is_zero(const Vec& v);
int vec_lead_comp(const Vec& v);  // -1 if zero
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_term_mul(const Vec& v, const Monomial& m, const FVal& c);
Vec vec_poly_mul(const Vec& v, const Polynomial& p);
Vec vec_scaled(const Vec& v, const FVal& c);
bool vec_eq(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

// -- engine over the ambient polynomial ring ----------------------------------
// The quotient-ring layer augments inputs with modulus rows; everything below
// this line works over a plain PolyRing.

namespace engine {

/// Buchberger with full auto-reduction. Output is the unique reduced module
/// Groebner basis: monic leads, mutually reduced, sorted descending by lead
/// term; independent of generator order.
std::vector<Vec> reduced_gb(std::vector<Vec> gens, const Budget& budget);

/// Canonical remainder: no term of the result is divisible by any lead term
/// of gb. gb must consist of monic-lead vectors (as produced by reduced_gb).
Vec normal_form(Vec f, const std::vector<Vec>& gb, const Budget& budget = default_budget());

/// Generators of { (a_1..a_s) : sum a_i gens_i = 0 } in R^s, via a
/// position-over-term elimination basis of span{(gens_i, e_i)}.
std::vector<Vec> syzygies(const std::vector<Vec>& gens, int rank, const Budget& budget);

/// Generators of { v in R^r : sum v_j cols_j in span(target) }.
/// cols has r columns, each a vector in R^k.
std::vector<Vec> preimage(const std::vector<Vec>& cols, int k,
                          const std::vector<Vec>& target, const Budget& budget);

}  // namespace engine

/// Moves a polynomial into another ring by matching variable names; the
/// coefficient fields must agree. Variables absent from the destination must
/// not occur.
Polynomial transport(const Polynomial& p, const RingPtr& dst);
Vec transport_vec(const Vec& v, const RingPtr& dst);

/// R[x..]/J with a fixed reduced Groebner basis of J. A plain polynomial ring
/// is the J = (0) case. Value type; cheap to copy.
class QuotientRing {
public:
    QuotientRing() = default;
    static QuotientRing poly_ring(RingPtr ambient);
    static QuotientRing make(RingPtr ambient, std::vector<Polynomial> modulus_gens,
                             const Budget& budget = default_budget());

    const RingPtr& ambient() const;
    const std::vector<Polynomial>& modulus_gens() const;
    const std::vector<Polynomial>& modulus_gb() const;
    bool has_modulus() const;
    bool is_trivial() const;  // 1 lies in the modulus
    /// Canonical representative mod the modulus.
    Polynomial nf(const Polynomial& f) const;
    Vec nf_vec(const Vec& v) const;
    bool same(const QuotientRing& o) const;
    std::string describe() const;
    /// Rows j*e_c for j in modulus GB, c < rank; the standard augmentation.
    std::vector<Vec> modulus_rows(int rank) const;

private:
    struct Rep {
        RingPtr ambient;
        std::vector<Polynomial> gens;
        std::vector<Polynomial> gb;
    };
    std::shared_ptr<const Rep> rep_;
};

/// Ideal of a quotient ring, canonically represented by the reduced Groebner
/// basis of its full preimage in the ambient ring (modulus included).
class Ideal {
public:
    Ideal() = default;
    Ideal(QuotientRing ring, std::vector<Polynomial> gens);

    const QuotientRing& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::vector<Polynomial>& reduced_gb(const Budget& budget = default_budget()) const;
    /// GB elements that are nonzero in the quotient; presents the ideal of A.
    std::vector<Polynomial> quotient_gb(const Budget& budget = default_budget()) const;
    Polynomial nf(const Polynomial& f, const Budget& budget = default_budget()) const;
    bool contains(const Polynomial& f, const Budget& budget = default_budget()) const;
    bool is_unit(const Budget& budget = default_budget()) const;
    bool is_zero(const Budget& budget = default_budget()) const;  // equals the modulus ideal
    bool equals(const Ideal& o, const Budget& budget = default_budget()) const;
    std::string to_string() const;

private:
    QuotientRing ring_;
    std::vector<Polynomial> gens_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int n);
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Budget& budget = default_budget());
Ideal ideal_colon_poly(const Ideal& a, const Polynomial& f, const Budget& budget = default_budget());
Ideal ideal_colon(const Ideal& a, const Ideal& b, const Budget& budget = default_budget());
Ideal ideal_saturation(const Ideal& a, const Polynomial& f, const Budget& budget = default_budget());
/// Generators of a's preimage not involving the named variables (computed in a
/// scratch ring under a lex-block order), returned as an ideal of the same ring.
Ideal ideal_eliminate(const Ideal& a, const std::vector<std::string>& vars,
                      const Budget& budget = default_budget());

/// Finitely generated submodule of A^rank for a quotient ring A, canonically
/// represented by the augmented reduced module GB over the ambient ring.
class SubmoduleGens {
public:
    SubmoduleGens() = default;
    SubmoduleGens(QuotientRing ring, int rank, std::vector<Vec> gens);

    const QuotientRing& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<Vec>& gens() const { return gens_; }
    const std::vector<Vec>& reduced_gb(const Budget& budget = default_budget()) const;
    /// GB rows that are nonzero in (A)^rank; presents the submodule itself.
    std::vector<Vec> quotient_gb(const Budget& budget = default_budget()) const;
    Vec nf(const Vec& v, const Budget& budget = default_budget()) const;
    bool contains(const Vec& v, const Budget& budget = default_budget()) const;
    bool equals(const SubmoduleGens& o, const Budget& budget = default_budget()) const;
    /// True when the submodule is zero in A^rank (all gens lie in the modulus part).
    bool is_zero_submodule(const Budget& budget = default_budget()) const;
    /// True when the submodule is all of A^rank.
    bool is_full(const Budget& budget = default_budget()) const;

private:
    QuotientRing ring_;
    int rank_ = 0;
    std::vector<Vec> gens_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

SubmoduleGens module_sum(const SubmoduleGens& u, const SubmoduleGens& v);
SubmoduleGens module_intersection(const SubmoduleGens& u, const SubmoduleGens& v,
                                  const Budget& budget = default_budget());
SubmoduleGens module_colon_ideal(const SubmoduleGens& u, const Ideal& a,
                                 const Budget& budget = default_budget());
SubmoduleGens module_saturation_elt(const SubmoduleGens& u, const Polynomial& f,
                                    const Budget& budget = default_budget());

/// Syzygies over the quotient ring A of the given generator list.
std::vector<Vec> module_syzygies(const QuotientRing& ring, int rank,
                                 const std::vector<Vec>& gens,
                                 const Budget& budget = default_budget());
/// { v in A^r : sum v_j cols_j in U } for U given by target generators in A^k.
std::vector<Vec> module_preimage(const QuotientRing& ring, const std::vector<Vec>& cols,
                                 int k, const std::vector<Vec>& target,
                                 const Budget& budget = default_budget());

}  // namespace flatcheck

#endif
