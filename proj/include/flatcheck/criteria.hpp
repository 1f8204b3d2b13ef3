#ifndef FLATCHECK_CRITERIA_HPP
#define FLATCHECK_CRITERIA_HPP

#include <optional>

#include "flatcheck/homology.hpp"
#include "flatcheck/spectra.hpp"

namespace flatcheck {

// -- flatness oracle ------------------------------------------------------------

/// Decision by Fitting-ideal idempotence: a finitely presented module is flat
/// iff it is projective iff every Fitting ideal of a presentation matrix is
/// idempotent.
struct FlatnessResult {
    bool flat = false;
    int failing_index = -1;  // least i with Fitt_i not idempotent
    std::string witness;     // printable failing ideal
};

FlatnessResult is_flat(const PresentedModule& m, const Budget& budget = default_budget());

struct FaithfulResult {
    bool flat = false;
    bool faithfully_flat = false;
    std::string reason;
};

/// Flat plus Fitt_0 contained in the nilradical (Jacobson-ring bases).
FaithfulResult is_faithfully_flat(const PresentedModule& m, const Budget& budget = default_budget());

struct PurityResult {
    bool injective = false;
    bool pure = false;
    std::string witness;  // kernel generator or failing Fitting data
};

/// For maps into flat modules: pure iff injective with flat cokernel.
/// Throws UnsupportedError when the target is not flat.
PurityResult is_pure_into_flat(const ModuleMap& phi, bool check_injective = true,
                               const Budget& budget = default_budget());

// -- criterion reports ------------------------------------------------------------

enum class Verdict { Holds, Fails, NotCheckable };

std::string verdict_name(Verdict v);

struct ConditionReport {
    std::string name;
    Verdict verdict = Verdict::NotCheckable;
    std::string witness;  // attached when the verdict is Fails
    std::string note;
    bool bounded = false;             // truncated or surrogate check
    bool necessary_for_flat = false;  // condition follows from the conclusion
    int prime_index = -1;             // index into the report's prime list
};

struct PrimeEntry {
    std::string ideal_text;
    std::string certificate;
};

struct CriterionReport {
    std::string id;
    std::vector<ConditionReport> conditions;
    std::vector<PrimeEntry> primes;
    bool primes_complete = false;
    std::string conclusion;       // oracle verdict of the consequent
    bool conclusion_flag = false;
    std::string consistency;      // consistent / not applicable note
    bool all_conditions_hold() const;
    bool any_condition_fails() const;
};

/// Raised when a complete, exact run contradicts the theorem it validates;
/// carries the offending report.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& msg) : Error("consistency violation: " + msg) {}
};

// -- fibers ------------------------------------------------------------------------

struct Fiber {
    QuotientRing ring;  // A tensored with the residue field of the prime
    RingMap to_fiber;   // A -> fiber ring
};

/// Base change of the target of f to the residue field at p. The base ring
/// must be a field, k[t], or k[t]/(m) with the base variable mapping to an
/// ambient variable of the target.
Fiber fiber_of(const RingMap& f, const PrimeIdeal& p, const Budget& budget = default_budget());

/// Index of the target variable the base variable maps to; -1 when the base
/// is a field, throws UnsupportedError otherwise.
int base_variable_index(const RingMap& f);

/// Generators of the kernel ideal of a ring map, by elimination on the graph.
Ideal kernel_of_ring_map(const RingMap& f, const Budget& budget = default_budget());

// -- checkers ------------------------------------------------------------------------

/// Local criterion for flatness at an ideal a: oracle flatness, Tor and
/// quotient flatness, power quotients up to n_max, and injectivity of the
/// graded multiplication maps up to degree n_max.
CriterionReport check_local_criterion(const Ideal& a, const PresentedModule& m, int n_max,
                                      const Budget& budget = default_budget());

/// Consequences of the local criterion hypotheses: power quotient flatness
/// for n <= n_max and Tor_1(m, N) = 0 for samples annihilated by a power of a.
CriterionReport check_local_powers(const Ideal& a, const PresentedModule& m, int n_max,
                                   const std::vector<PresentedModule>& sample_modules,
                                   const Budget& budget = default_budget());

/// Flat base + flat module over base + flatness of every fiber implies
/// flatness. The base-flatness hypotheses use exact restriction when
/// available (identity map, field base, or an explicit base-side model),
/// otherwise a per-prime Tor surrogate flagged as bounded.
CriterionReport check_flat_base_fibers(const RingMap& f, const PresentedModule& m,
                                       const PrimeList& primes,
                                       const std::optional<PresentedModule>& m_over_base = std::nullopt,
                                       const Budget& budget = default_budget());

/// Per-prime Tor vanishing, Tor vanishing against the torsionfree quotient,
/// and fiber flatness; an equivalence on complete prime lists.
CriterionReport check_tor_fibers(const RingMap& f, const PresentedModule& m,
                                 const PrimeList& primes,
                                 const Budget& budget = default_budget());

/// The strong form quantified over arbitrary ideals, checked on a finite
/// ideal corpus (bounded), plus fibers; optional torsionfree clause.
CriterionReport check_ideal_tor_fibers(const RingMap& f, const PresentedModule& m,
                                       const std::vector<Ideal>& ideal_corpus,
                                       const PrimeList& primes, bool with_torsionfree,
                                       const Budget& budget = default_budget());

/// Hypersurface slice: Tor_1(m, A/z) = 0 and m/zm flat over A/z imply
/// Tor_i(m, N) = 0 for all N killed by z.
CriterionReport check_element_slice(const Polynomial& z, const PresentedModule& m,
                                    const std::vector<PresentedModule>& sample_modules,
                                    int tor_index_max = 2,
                                    const Budget& budget = default_budget());

/// Fiber criterion for purity of a map into a flat module.
CriterionReport check_pure_fibers(const RingMap& f, const ModuleMap& phi,
                                  const PrimeList& primes,
                                  const Budget& budget = default_budget());

/// Purity over the base ring itself: torsionfree quotients plus injective
/// fiber maps.
CriterionReport check_pure_over_base(const ModuleMap& phi, const PrimeList& primes,
                                     const Budget& budget = default_budget());

/// User-supplied model of the target algebra as a module over the source,
/// with the unit map picking out 1.
struct GroupAlgebraModel {
    PresentedModule algebra_as_module;
    ModuleMap unit;
};

/// Equivalence of faithful flatness, fiberwise faithful flatness, and purity
/// for a map of group-algebra style rings. Clauses (1) and (3) need the
/// module model; clause (2) reduces to fiber injectivity over field bases.
CriterionReport check_group_purity(const RingMap& f_sharp,
                                   const std::optional<GroupAlgebraModel>& model,
                                   const PrimeList& base_primes,
                                   const Budget& budget = default_budget());

}  // namespace flatcheck

#endif
