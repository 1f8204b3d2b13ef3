#ifndef FLATCHECK_SPECTRA_HPP
#define FLATCHECK_SPECTRA_HPP

#include "flatcheck/fpmod.hpp"

namespace flatcheck {

enum class PrimeCert { ZeroIdealOfDomain, PrincipalIrreducible, MaximalLinear, UserAsserted };

std::string cert_name(PrimeCert c);

/// Prime ideal of a base ring, carrying a machine-checked certificate
/// (UserAsserted is accepted unchecked and flagged downstream).
struct PrimeIdeal {
    Ideal ideal;
    PrimeCert cert = PrimeCert::UserAsserted;

    static PrimeIdeal zero_of_domain(const QuotientRing& r);
    static PrimeIdeal principal_irreducible(const QuotientRing& r, Polynomial f);
    static PrimeIdeal maximal_linear(const QuotientRing& r, const std::vector<FVal>& point);
    static PrimeIdeal user_asserted(Ideal i);

    bool is_zero_ideal() const;
    /// Re-runs the certificate check.
    bool verify(const Budget& budget = default_budget()) const;
    std::string to_string() const;
};

struct ResidueField {
    PrimeIdeal prime;
    FieldPtr field;
    QuotientRing field_ring;  // zero-variable ring over the residue field
    RingMap projection;       // base ring -> field_ring
};

/// Residue field at a certified prime. Supported base shapes: a field, k[t],
/// k[t]/(m).
ResidueField residue_field(const PrimeIdeal& p, const Budget& budget = default_budget());

struct PrimeList {
    std::vector<PrimeIdeal> primes;
    bool complete = false;  // the list is all of Spec
};

/// Every prime of R up to the degree bound. Complete for fields and artinian
/// k[t]/(m); for k[t] the list is the zero ideal plus all monic irreducibles
/// of degree <= bound (complete per degree, Spec itself is infinite).
PrimeList enumerate_primes(const QuotientRing& r, int degree_bound,
                           const Budget& budget = default_budget());

/// Monic irreducibles of exactly the given degree over F_p, sorted.
std::vector<Polynomial> monic_irreducibles(const QuotientRing& r, int degree);

/// Shape checks on base rings: a field (zero variables, or k[t] modulo an
/// irreducible), and rings certified to be domains by shape.
bool ring_is_field(const QuotientRing& r);
bool ring_is_domain_shape(const QuotientRing& r);

}  // namespace flatcheck

#endif
