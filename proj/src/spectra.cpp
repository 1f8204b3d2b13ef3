#include "flatcheck/spectra.hpp"

#include <algorithm>

namespace flatcheck {

std::string cert_name(PrimeCert c) {
    switch (c) {
        case PrimeCert::ZeroIdealOfDomain: return "zero-ideal-of-domain";
        case PrimeCert::PrincipalIrreducible: return "principal-irreducible";
        case PrimeCert::MaximalLinear: return "maximal-linear";
        case PrimeCert::UserAsserted: return "user-asserted";
    }
    return "?";
}

namespace {

UniPoly to_unipoly(const Polynomial& f) {
    const Field& F = *f.ring()->field();
    if (f.is_zero()) return {};
    UniPoly u((size_t)f.lead().m.e[0] + 1, F.zero());
    for (const auto& t : f.terms()) u[(size_t)t.m.e[0]] = t.c;
    return u;
}

Polynomial from_unipoly(const RingPtr& ring, const UniPoly& u) {
    std::vector<Term> ts;
    for (size_t i = 0; i < u.size(); ++i)
        if (!ring->field()->is_zero(u[i]))
            ts.push_back(Term{mono_var(ring->nvars(), 0, (int)i), u[i]});
    return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace

bool ring_is_field(const QuotientRing& r) {
    if (r.ambient()->nvars() == 0 && !r.has_modulus()) return true;
    if (r.ambient()->nvars() == 1 && r.has_modulus() && r.modulus_gb().size() == 1) {
        try {
            return is_irreducible(*r.ambient()->field(), to_unipoly(r.modulus_gb()[0]));
        } catch (const UnsupportedError&) {
            return false;
        }
    }
    return false;
}

bool ring_is_domain_shape(const QuotientRing& r) {
    if (!r.has_modulus()) return true;  // polynomial ring over a field
    return ring_is_field(r);
}

PrimeIdeal PrimeIdeal::zero_of_domain(const QuotientRing& r) {
    if (!ring_is_domain_shape(r))
        throw Error("zero ideal certificate: the ring is not a certified domain");
    return PrimeIdeal{Ideal(r, {}), PrimeCert::ZeroIdealOfDomain};
}

PrimeIdeal PrimeIdeal::principal_irreducible(const QuotientRing& r, Polynomial f) {
    if (r.ambient()->nvars() != 1)
        throw UnsupportedError("principal irreducible certificates need a univariate base");
    const Field& k = *r.ambient()->field();
    UniPoly u = to_unipoly(f);
    if (!is_irreducible(k, u))
        throw Error("certificate failure: " + f.to_string() + " is reducible");
    if (r.has_modulus()) {
        // (f) is prime in k[t]/(m) only when f divides m
        UniPoly m = to_unipoly(r.modulus_gb()[0]);
        if (!upoly::is_zero(upoly::rem(k, m, u)))
            throw Error("certificate failure: " + f.to_string() +
                        " does not divide the ring modulus");
    }
    return PrimeIdeal{Ideal(r, {std::move(f)}), PrimeCert::PrincipalIrreducible};
}

PrimeIdeal PrimeIdeal::maximal_linear(const QuotientRing& r, const std::vector<FVal>& point) {
    if (point.size() != r.ambient()->nvars())
        throw Error("point length does not match the variable count");
    const RingPtr& ring = r.ambient();
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < point.size(); ++i)
        gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, point[i]));
    Ideal ideal(r, gens);
    for (const auto& j : r.modulus_gb())
        if (!ideal.contains(j))
            throw Error("certificate failure: the point does not satisfy the ring's modulus");
    return PrimeIdeal{std::move(ideal), PrimeCert::MaximalLinear};
}

PrimeIdeal PrimeIdeal::user_asserted(Ideal i) {
    return PrimeIdeal{std::move(i), PrimeCert::UserAsserted};
}

bool PrimeIdeal::is_zero_ideal() const {
    for (const auto& g : ideal.gens())
        if (!ideal.ring().nf(g).is_zero()) return false;
    return true;
}

bool PrimeIdeal::verify(const Budget& budget) const {
    (void)budget;
    try {
        switch (cert) {
            case PrimeCert::ZeroIdealOfDomain:
                return ring_is_domain_shape(ideal.ring()) && is_zero_ideal();
            case PrimeCert::PrincipalIrreducible: {
                if (ideal.gens().size() != 1) return false;
                const Field& k = *ideal.ring().ambient()->field();
                UniPoly u = to_unipoly(ideal.gens()[0]);
                if (!is_irreducible(k, u)) return false;
                if (ideal.ring().has_modulus()) {
                    UniPoly m = to_unipoly(ideal.ring().modulus_gb()[0]);
                    if (!upoly::is_zero(upoly::rem(k, m, u))) return false;
                }
                return true;
            }
            case PrimeCert::MaximalLinear: {
                for (const auto& g : ideal.gens())
                    if (g.degree() > 1) return false;
                for (const auto& j : ideal.ring().modulus_gb())
                    if (!ideal.contains(j)) return false;
                return true;
            }
            case PrimeCert::UserAsserted:
                return true;
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

std::string PrimeIdeal::to_string() const {
    if (is_zero_ideal()) return "(0)";
    std::string s = "(";
    bool first = true;
    for (const auto& g : ideal.gens()) {
        if (!first) s += ", ";
        s += g.to_string();
        first = false;
    }
    return s + ")";
}

ResidueField residue_field(const PrimeIdeal& p, const Budget& budget) {
    (void)budget;
    const QuotientRing& R = p.ideal.ring();
    const FieldPtr& k = R.ambient()->field();
    auto field_ring_of = [](const FieldPtr& f) {
        return QuotientRing::poly_ring(PolyRing::make(f, {}, MonomialOrder::grevlex()));
    };
    auto embed_into = [](const FieldPtr& K, const QuotientRing& fr) -> CoeffEmbed {
        return [K, fr](const FVal& c) {
            return Polynomial::constant(fr.ambient(), K->embed_base(c));
        };
    };

    if (R.ambient()->nvars() == 0) {
        QuotientRing fr = field_ring_of(k);
        return ResidueField{p, k, fr, RingMap(R, fr, {})};
    }
    if (R.ambient()->nvars() != 1)
        throw UnsupportedError("residue fields are supported over fields, k[t], and k[t]/(m)");

    const std::string& tname = R.ambient()->vars()[0];

    if (p.is_zero_ideal()) {
        if (R.has_modulus()) {
            if (!ring_is_field(R)) throw Error("zero ideal of a non-domain base");
            FieldPtr K = Field::simple_extension(k, tname, to_unipoly(R.modulus_gb()[0]));
            QuotientRing fr = field_ring_of(K);
            return ResidueField{p, K, fr,
                                RingMap(R, fr, {Polynomial::constant(fr.ambient(), K->generator())},
                                        embed_into(K, fr))};
        }
        FieldPtr K = Field::rational_functions(k, tname);
        QuotientRing fr = field_ring_of(K);
        return ResidueField{p, K, fr,
                            RingMap(R, fr, {Polynomial::constant(fr.ambient(), K->generator())},
                                    embed_into(K, fr))};
    }

    if (p.ideal.gens().size() != 1)
        throw UnsupportedError("non-principal prime of a univariate base");
    UniPoly g = upoly::monic(*k, to_unipoly(p.ideal.gens()[0]));
    if (upoly::deg(g) == 1) {
        FVal root = k->neg(g[0]);
        QuotientRing fr = field_ring_of(k);
        return ResidueField{p, k, fr, RingMap(R, fr, {Polynomial::constant(fr.ambient(), root)})};
    }
    FieldPtr K = Field::simple_extension(k, tname, g);
    QuotientRing fr = field_ring_of(K);
    return ResidueField{p, K, fr,
                        RingMap(R, fr, {Polynomial::constant(fr.ambient(), K->generator())},
                                embed_into(K, fr))};
}

std::vector<Polynomial> monic_irreducibles(const QuotientRing& r, int degree) {
    const RingPtr& ring = r.ambient();
    const FieldPtr& k = ring->field();
    if (k->kind() != FieldKind::PrimeField)
        throw UnsupportedError("irreducible enumeration needs a prime field");
    std::uint64_t p = k->prime();
    double count = 1;
    for (int i = 0; i < degree; ++i) count *= (double)p;
    if (count > 2.5e6) throw BudgetError("irreducible enumeration size");

    std::vector<Polynomial> out;
    std::vector<std::uint64_t> coeffs((size_t)degree, 0);
    for (;;) {
        UniPoly u;
        for (int i = 0; i < degree; ++i) u.push_back(FVal(coeffs[(size_t)i]));
        u.push_back(k->one());  // monic
        if (is_irreducible(*k, u)) out.push_back(from_unipoly(ring, u));
        int pos = 0;
        while (pos < degree && ++coeffs[(size_t)pos] == p) coeffs[(size_t)pos++] = 0;
        if (pos == degree) break;
    }
    return out;
}

PrimeList enumerate_primes(const QuotientRing& r, int degree_bound, const Budget& budget) {
    (void)budget;
    PrimeList out;
    if (r.ambient()->nvars() == 0 || ring_is_field(r)) {
        out.primes.push_back(PrimeIdeal::zero_of_domain(r));
        out.complete = true;
        return out;
    }
    if (r.ambient()->nvars() != 1)
        throw UnsupportedError("prime enumeration needs a univariate or field base");

    if (!r.has_modulus()) {
        out.primes.push_back(PrimeIdeal::zero_of_domain(r));
        for (int d = 1; d <= degree_bound; ++d)
            for (auto& g : monic_irreducibles(r, d))
                out.primes.push_back(PrimeIdeal::principal_irreducible(r, std::move(g)));
        out.complete = false;  // Spec of k[t] is infinite
        return out;
    }

    // k[t]/(m): the primes correspond to the irreducible factors of m
    const Field& k = *r.ambient()->field();
    UniPoly m = to_unipoly(r.modulus_gb()[0]);
    int dm = upoly::deg(m);
    for (int d = 1; d <= dm; ++d)
        for (auto& g : monic_irreducibles(r, d))
            if (upoly::is_zero(upoly::rem(k, m, to_unipoly(g))))
                out.primes.push_back(PrimeIdeal::principal_irreducible(r, std::move(g)));
    out.complete = true;
    return out;
}

}  // namespace flatcheck
