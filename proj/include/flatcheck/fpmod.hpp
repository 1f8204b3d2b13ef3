#ifndef FLATCHECK_FPMOD_HPP
#define FLATCHECK_FPMOD_HPP

#include <functional>
#include <optional>

#include "flatcheck/groebner.hpp"

namespace flatcheck {

/// A finitely presented module A^rank / <relations> over a quotient ring A.
class PresentedModule {
public:
    PresentedModule() = default;
    PresentedModule(QuotientRing ring, int rank, std::vector<Vec> relations);
    static PresentedModule free_module(QuotientRing ring, int rank);
    static PresentedModule ring_module(QuotientRing ring);  // A^1
    static PresentedModule cyclic(QuotientRing ring, std::vector<Polynomial> annihilator);

    const QuotientRing& ring() const { return ring_; }
    int rank() const { return rank_; }
    const SubmoduleGens& relations() const { return rels_; }
    const std::vector<Vec>& relation_gens() const { return rels_.gens(); }
    bool is_zero(const Budget& budget = default_budget()) const;
    std::string describe() const;

private:
    QuotientRing ring_;
    int rank_ = 0;
    SubmoduleGens rels_;
};

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n);

/// A-linear map between presented modules, given by a matrix of ambient
/// representatives. Well-definedness (matrix carries source relations into
/// target relations) is certified at construction.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(PresentedModule source, PresentedModule target, std::vector<Vec> columns,
              const Budget& budget = default_budget());
    static ModuleMap identity(const PresentedModule& m);
    static ModuleMap multiplication(const PresentedModule& m, const Polynomial& f);
    /// Does not check well-definedness; for internal constructions that are
    /// well defined by design.
    static ModuleMap unchecked(PresentedModule source, PresentedModule target,
                               std::vector<Vec> columns);

    const PresentedModule& source() const { return source_; }
    const PresentedModule& target() const { return target_; }
    const std::vector<Vec>& columns() const { return cols_; }
    Vec apply(const Vec& v) const;  // ambient level

private:
    PresentedModule source_, target_;
    std::vector<Vec> cols_;  // cols_[j] = image of e_j, length target rank
};

using CoeffEmbed = std::function<Polynomial(const FVal&)>;

/// Substitutes variable images (and optionally embeds coefficients), reducing
/// into the target; the workhorse behind RingMap::apply.
Polynomial apply_images(const Polynomial& f, const QuotientRing& target,
                        const std::vector<Polynomial>& images, const CoeffEmbed& embed);

/// Ring homomorphism between quotient rings, given by generator images and an
/// optional coefficient embedding (identity-field constants by default).
class RingMap {
public:
    RingMap() = default;
    RingMap(QuotientRing source, QuotientRing target, std::vector<Polynomial> images,
            CoeffEmbed embed = nullptr, const Budget& budget = default_budget());
    static RingMap identity(const QuotientRing& r);
    static RingMap compose(const RingMap& g, const RingMap& f);  // g after f

    const QuotientRing& source() const { return source_; }
    const QuotientRing& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }
    bool is_identity_shape() const;
    Polynomial apply(const Polynomial& f) const;
    Vec apply_vec(const Vec& v) const;

private:
    QuotientRing source_, target_;
    std::vector<Polynomial> images_;
    CoeffEmbed embed_;
};

struct KernelResult {
    PresentedModule module;
    ModuleMap inclusion;  // into the source of the mapped-out arrow
};

KernelResult kernel(const ModuleMap& f, const Budget& budget = default_budget());

/// Decides injectivity without assembling the kernel presentation.
bool kernel_is_zero(const ModuleMap& f, const Budget& budget = default_budget());

struct CokerImage {
    PresentedModule cokernel;
    PresentedModule image;
};

CokerImage coker_image(const ModuleMap& f, const Budget& budget = default_budget());

PresentedModule tensor(const PresentedModule& m, const PresentedModule& n,
                       const Budget& budget = default_budget());

PresentedModule base_change(const PresentedModule& m, const RingMap& f,
                            const Budget& budget = default_budget());

/// Tensors a map with the identity of n (Kronecker with the presentation).
ModuleMap tensor_map(const ModuleMap& f, const PresentedModule& n,
                     const Budget& budget = default_budget());

/// Chain F_L -> ... -> F_1 -> F_0 with F_0 = A^rank, d_1 the relation matrix,
/// d_{i+1} generators of the syzygies of d_i.
struct Resolution {
    PresentedModule m;
    std::vector<int> ranks;               // ranks[i] = rank of F_i
    std::vector<std::vector<Vec>> maps;   // maps[i] = columns of d_{i+1}
};

Resolution free_resolution(const PresentedModule& m, int length,
                           const Budget& budget = default_budget());
bool resolution_composes_to_zero(const Resolution& r, const Budget& budget = default_budget());
bool resolution_exact_at(const Resolution& r, int i, const Budget& budget = default_budget());

/// (<num> + <den>) / <den> inside A^ambient_rank, presented on the images of
/// num; the inclusion realizes generators as ambient vectors.
PresentedModule subquotient(const QuotientRing& ring, int ambient_rank,
                            const std::vector<Vec>& num, const std::vector<Vec>& den,
                            const Budget& budget = default_budget());
bool subquotient_is_zero(const QuotientRing& ring, int ambient_rank,
                         const std::vector<Vec>& num, const std::vector<Vec>& den,
                         const Budget& budget = default_budget());

/// M/aM over the same ring.
PresentedModule quotient_by_ideal(const PresentedModule& m, const Ideal& a);

/// Dimension of the module as a vector space over the coefficient field;
/// nullopt when infinite (or past cap).
std::optional<long> k_dimension(const PresentedModule& m, long cap = 1000000,
                                const Budget& budget = default_budget());

/// Restricted equivalence test: same ring, equal rank, equal relation
/// submodules (canonical GB comparison). Cyclic modules thus compare by
/// annihilator. Not a general isomorphism test.
bool presentations_equivalent(const PresentedModule& a, const PresentedModule& b,
                              const Budget& budget = default_budget());

}  // namespace flatcheck

#endif
