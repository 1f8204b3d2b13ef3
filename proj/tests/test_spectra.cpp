#include <doctest.h>

#include "flatcheck/spectra.hpp"

using namespace flatcheck;

namespace {

QuotientRing base_ring(std::uint64_t p, const std::string& var) {
    return QuotientRing::poly_ring(
        PolyRing::make(Field::prime_field(p), {var}, MonomialOrder::grevlex()));
}

// number of monic irreducibles of degree k over F_p by Moebius counting
long necklace_count(long p, int k) {
    auto mu = [](int n) {
        int m = 1;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                n /= d;
                if (n % d == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    long total = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        long pw = 1;
        for (int i = 0; i < k / d; ++i) pw *= p;
        total += mu(d) * pw;
    }
    return total / k;
}

}  // namespace

TEST_CASE("complete enumeration over F_2 up to degree 2") {
    QuotientRing R = base_ring(2, "t");
    PrimeList ps = enumerate_primes(R, 2);
    REQUIRE(ps.primes.size() == 4);
    CHECK(ps.primes[0].to_string() == "(0)");
    CHECK(ps.primes[1].to_string() == "(t)");
    CHECK(ps.primes[2].to_string() == "(t + 1)");
    CHECK(ps.primes[3].to_string() == "(t^2 + t + 1)");
    CHECK_FALSE(ps.complete);
    for (const auto& p : ps.primes) CHECK(p.verify());
}

TEST_CASE("irreducible counts match the necklace formula") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        QuotientRing R = base_ring(p, "t");
        for (int k = 1; k <= 3; ++k)
            CHECK((long)monic_irreducibles(R, k).size() == necklace_count((long)p, k));
    }
    QuotientRing R101 = base_ring(101, "t");
    CHECK((long)monic_irreducibles(R101, 1).size() == 101);
    CHECK((long)monic_irreducibles(R101, 2).size() == necklace_count(101, 2));
}

TEST_CASE("artinian and field bases have complete spectra") {
    RingPtr re = PolyRing::make(Field::prime_field(101), {"e"}, MonomialOrder::grevlex());
    QuotientRing Re = QuotientRing::make(re, {parse_polynomial(re, "e^2")});
    PrimeList ps = enumerate_primes(Re, 3);
    REQUIRE(ps.primes.size() == 1);
    CHECK(ps.primes[0].to_string() == "(e)");
    CHECK(ps.complete);

    QuotientRing K = QuotientRing::poly_ring(
        PolyRing::make(Field::prime_field(101), {}, MonomialOrder::grevlex()));
    PrimeList pk = enumerate_primes(K, 5);
    CHECK(pk.complete);
    REQUIRE(pk.primes.size() == 1);
    CHECK(pk.primes[0].is_zero_ideal());

    // split quotient: both linear factors appear
    QuotientRing Rsplit = QuotientRing::make(re, {parse_polynomial(re, "e^2 - 1")});
    PrimeList pspl = enumerate_primes(Rsplit, 2);
    CHECK(pspl.complete);
    CHECK(pspl.primes.size() == 2);
}

TEST_CASE("residue fields by shape") {
    QuotientRing R = base_ring(101, "t");
    SUBCASE("generic point gives rational functions") {
        ResidueField rf = residue_field(PrimeIdeal::zero_of_domain(R));
        CHECK(rf.field->kind() == FieldKind::RationalFunctions);
        // projection sends t to the generator
        Polynomial t = Polynomial::variable(R.ambient(), 0);
        Polynomial img = rf.projection.apply(t);
        CHECK(rf.field->eq(img.lead().c, rf.field->generator()));
    }
    SUBCASE("linear primes evaluate") {
        Polynomial g = parse_polynomial(R.ambient(), "t - 3");
        ResidueField rf = residue_field(PrimeIdeal::principal_irreducible(R, g));
        CHECK(rf.field->kind() == FieldKind::PrimeField);
        Polynomial img = rf.projection.apply(Polynomial::variable(R.ambient(), 0));
        CHECK(rf.field->eq(img.lead().c, rf.field->from_int(3)));
        // the projection kills exactly the prime
        CHECK(rf.projection.apply(g).is_zero());
        CHECK_FALSE(rf.projection.apply(parse_polynomial(R.ambient(), "t - 4")).is_zero());
    }
    SUBCASE("quadratic primes build the nine-element field") {
        QuotientRing R3 = base_ring(3, "t");
        Polynomial g = parse_polynomial(R3.ambient(), "t^2 + 1");
        ResidueField rf = residue_field(PrimeIdeal::principal_irreducible(R3, g));
        CHECK(rf.field->kind() == FieldKind::SimpleExtension);
        CHECK(rf.field->cardinality() == 9);
        CHECK(rf.projection.apply(g).is_zero());
    }
}

TEST_CASE("certificates are machine checked") {
    QuotientRing R = base_ring(101, "t");
    CHECK_THROWS_AS(PrimeIdeal::principal_irreducible(R, parse_polynomial(R.ambient(), "t^2 - 1")),
                    Error);
    RingPtr re = PolyRing::make(Field::prime_field(101), {"e"}, MonomialOrder::grevlex());
    QuotientRing Re = QuotientRing::make(re, {parse_polynomial(re, "e^2")});
    CHECK_THROWS_AS(PrimeIdeal::zero_of_domain(Re), Error);
    // user assertions pass but stay flagged
    PrimeIdeal ua = PrimeIdeal::user_asserted(Ideal(R, {parse_polynomial(R.ambient(), "t^2 - 1")}));
    CHECK(ua.cert == PrimeCert::UserAsserted);
    CHECK(cert_name(ua.cert) == "user-asserted");
}
