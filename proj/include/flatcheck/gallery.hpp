#ifndef FLATCHECK_GALLERY_HPP
#define FLATCHECK_GALLERY_HPP

#include "flatcheck/criteria.hpp"

namespace flatcheck {

/// Truncation at level d of the chain-ideal example over k[t]:
///   B = k[t, x_1..x_d]
///   H = (t^i x_i - t^(i+1) x_(i+1) : i < d) + (x_j - t^2 x_(j+2) : j < d-1)
///   I = (x_i - t x_(i+1) : i < d)
///   A = B/H, M = B/I as an A-module.
/// H is contained in I (membership-checked at construction).
struct ChainExample {
    int d = 0;
    QuotientRing B;   // plain polynomial ring
    QuotientRing A;   // B / H
    QuotientRing R;   // k[t]
    Ideal H_in_B;
    Ideal I_in_B;
    Ideal I_in_A;
    RingMap base;     // R -> A, t to t
    PresentedModule M;      // over A
    PresentedModule A_mod;  // A over itself
};

ChainExample make_chain_example(int d, std::uint64_t p = 101,
                                const Budget& budget = default_budget());

struct ClaimResult {
    bool holds = false;
    std::string detail;
};

/// (I : t) = I in B, equivalently the module is torsion-free at t over k[t].
ClaimResult check_colon_stability(const ChainExample& ex, const Budget& budget = default_budget());

/// The torsion of A over k[t] is exactly I/H (mutual membership), with the
/// per-generator annihilation sanity checks.
ClaimResult check_torsion_identification(const ChainExample& ex,
                                         const Budget& budget = default_budget());

/// At finite level the two sides of "I + (t) = H + (t)" differ by exactly the
/// top-index variable; the report records the discrepancy.
struct BoundaryResult {
    bool as_expected = false;
    std::vector<std::string> h_side;  // reduced GB of H + (t)
    std::vector<std::string> i_side;  // reduced GB of I + (t)
    std::vector<std::string> discrepancy;
    std::string detail;
};

BoundaryResult check_mod_t_collapse(const ChainExample& ex,
                                    const Budget& budget = default_budget());

/// x_1 - t x_2 lies in I but not in I^2 + H, so Tor_1(M, M) = T/T^2 is
/// nonzero; computed both as the ideal-theoretic quotient and through the
/// resolution route, which must agree.
ClaimResult check_tor_obstruction(const ChainExample& ex,
                                  const Budget& budget = default_budget());

/// Assembled audit of the flatness package at level d: base flatness
/// surrogates, per-prime Tor vanishing, fiber flatness (expected to fail only
/// at (t), a truncation boundary effect), and the flatness oracle.
CriterionReport audit_flatness_package(const ChainExample& ex, const PrimeList& primes,
                                       const Budget& budget = default_budget());

// -- diagonalizable group schemes --------------------------------------------------

/// Finitely generated abelian group Z^free_rank + sum Z/torsion_orders[i].
struct DiagGroup {
    int free_rank = 0;
    std::vector<int> torsion_orders;
};

/// Group algebra of a DiagGroup: unit-inverse variable pairs per free
/// generator, one variable with s^n = 1 per torsion generator.
QuotientRing group_algebra(const FieldPtr& k, const DiagGroup& g, const std::string& prefix,
                           const Budget& budget = default_budget());

/// Monomial of a group element given by exponents on the generators
/// (free exponents may be negative).
Polynomial group_element(const QuotientRing& ring, const DiagGroup& g,
                         const std::vector<long>& exponents);

/// The algebra map induced by a homomorphism source_group -> target_group
/// described columnwise: column j is the image of the j-th source generator.
RingMap diag_morphism(const FieldPtr& k, const DiagGroup& source_group,
                      const DiagGroup& target_group,
                      const std::vector<std::vector<long>>& matrix,
                      const Budget& budget = default_budget());

struct GroupDemo {
    RingMap map;
    std::optional<GroupAlgebraModel> model;
    PrimeList base_primes;
};

GroupDemo demo_double_cover(std::uint64_t p = 101, const Budget& budget = default_budget());
GroupDemo demo_quotient_to_order2(std::uint64_t p = 101, const Budget& budget = default_budget());
GroupDemo demo_identity_torsion(std::uint64_t p = 101, int n = 3,
                                const Budget& budget = default_budget());

}  // namespace flatcheck

#endif
