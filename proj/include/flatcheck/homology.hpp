#ifndef FLATCHECK_HOMOLOGY_HPP
#define FLATCHECK_HOMOLOGY_HPP

#include "flatcheck/fpmod.hpp"

namespace flatcheck {

struct TorResult {
    int index = 0;
    PresentedModule module;
    bool zero = true;
};

/// Tor_i^A(m, n) as homology of (free resolution of m) tensor n. Passing
/// with_presentation = false skips assembling the subquotient presentation
/// and only decides vanishing (the module field is then a placeholder).
TorResult tor(int i, const PresentedModule& m, const PresentedModule& n,
              const Budget& budget = default_budget(), bool with_presentation = true);

/// a^n m / a^(n+1) m, presented on the generators f_j e_c of a^n A^rank in
/// (f outer, component inner) order.
PresentedModule graded_piece(const Ideal& a, int n, const PresentedModule& m,
                             const Budget& budget = default_budget());

struct TorsionDecomposition {
    PresentedModule torsion;      // t(N), presented on the numerator generators
    PresentedModule torsionfree;  // N / t(N)
    std::vector<Vec> torsion_numerator;  // generators of the preimage of t(N) in A^rank
    Polynomial witness;           // nonzero base element with witness * t(N) = 0
};

/// Torsion submodule of n relative to the base domain reached through f.
/// Supported base shapes: a field (torsion is zero), k[t] with the base
/// variable mapping to an ambient variable of the target. The saturation of
/// the relation submodule with respect to R\{0} is computed exactly: a module
/// GB under a base-variable-last product order is simultaneously a GB over
/// Frac(R), and saturating by the product of its x-leading coefficients
/// realizes the contraction.
TorsionDecomposition torsion_decompose(const PresentedModule& n, const RingMap& f,
                                       const Budget& budget = default_budget());

/// Tor_1^R(R/p, x) for a principal prime p = (g) of the base ring R, computed
/// on the A-side as a kernel (domain base) or kernel/image subquotient
/// (artinian k[t]/(m) base).
TorResult tor1_over_base(const RingMap& f, const Polynomial& base_elt,
                         const PresentedModule& x, const Budget& budget = default_budget(),
                         bool with_presentation = true);

}  // namespace flatcheck

#endif
