#include <doctest.h>

#include <algorithm>
#include <random>

#include "flatcheck/groebner.hpp"

using namespace flatcheck;

namespace {

RingPtr ring101(std::vector<std::string> vars, MonomialOrder ord = MonomialOrder::grevlex()) {
    return PolyRing::make(Field::prime_field(101), std::move(vars), std::move(ord));
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

Polynomial rnd_poly(const RingPtr& r, std::mt19937_64& rng, int terms = 3, int maxdeg = 2) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m = mono_one(r->nvars());
        for (size_t v = 0; v < r->nvars(); ++v) m.e[v] = (std::uint16_t)(rng() % (maxdeg + 1));
        ts.push_back(Term{m, r->field()->from_int((long long)(rng() % 101))});
    }
    return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("reduced basis of the lex staircase example") {
    RingPtr r = ring101({"x", "y"}, MonomialOrder::lex());
    QuotientRing B = QuotientRing::poly_ring(r);
    Ideal I(B, {P(r, "x - y^2"), P(r, "y^3")});
    const auto& gb = I.reduced_gb();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P(r, "x - y^2"));
    CHECK(gb[1] == P(r, "y^3"));
    CHECK(I.nf(P(r, "y^5")).is_zero());
    CHECK(I.contains(P(r, "y^5")));
}

TEST_CASE("unit and zero ideals") {
    RingPtr r = ring101({"x"});
    QuotientRing B = QuotientRing::poly_ring(r);
    Ideal unit(B, {P(r, "x"), P(r, "x - 1")});
    CHECK(unit.is_unit());
    CHECK(unit.reduced_gb().size() == 1);
    CHECK(unit.reduced_gb()[0] == Polynomial::from_int(r, 1));
    Ideal zero(B, {});
    CHECK(zero.reduced_gb().empty());
    CHECK(zero.is_zero());
    Ideal principal(B, {P(r, "x")});
    CHECK(principal.nf(Polynomial::from_int(r, 1)) == Polynomial::from_int(r, 1));
}

TEST_CASE("reduced basis is independent of generator order") {
    std::mt19937_64 rng(3);
    RingPtr r = ring101({"x", "y", "z"});
    QuotientRing B = QuotientRing::poly_ring(r);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 4; ++i) gens.push_back(rnd_poly(r, rng));
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Ideal a(B, gens), b(B, shuffled);
        CHECK(a.equals(b));
    }
}

TEST_CASE("membership soundness on random combinations") {
    std::mt19937_64 rng(5);
    RingPtr r = ring101({"x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    Ideal I(B, {P(r, "x^2 + y"), P(r, "x*y - 1")});
    for (int i = 0; i < 25; ++i) {
        Polynomial f = rnd_poly(r, rng) * I.gens()[0] + rnd_poly(r, rng) * I.gens()[1];
        CHECK(I.contains(f));
    }
    CHECK_FALSE(I.contains(P(r, "x")));
}

TEST_CASE("normal forms against a quotient ring") {
    // F_101[t,x1,x2,x3] with the level-3 chain relations
    RingPtr r = ring101({"t", "x1", "x2", "x3"});
    std::vector<Polynomial> h = {P(r, "t*x1 - t^2*x2"), P(r, "t^2*x2 - t^3*x3"),
                                 P(r, "x1 - t^2*x3")};
    QuotientRing A = QuotientRing::make(r, h);
    CHECK_FALSE(A.nf(P(r, "x1 - t*x2")).is_zero());
    CHECK(A.nf(P(r, "t*x1 - t^2*x2")).is_zero());
}

TEST_CASE("colon, saturation, intersection") {
    RingPtr r = ring101({"x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    SUBCASE("colon strips a factor") {
        Ideal I(B, {P(r, "x*y")});
        Ideal c = ideal_colon_poly(I, P(r, "x"));
        CHECK(c.equals(Ideal(B, {P(r, "y")})));
        // both inclusions by brute membership
        CHECK(I.contains(P(r, "x") * P(r, "y")));
        for (const auto& g : c.reduced_gb()) CHECK(I.contains(g * P(r, "x")));
    }
    SUBCASE("saturation stabilizes after two colon steps") {
        Ideal I(B, {P(r, "x*y^2")});
        Ideal s = ideal_saturation(I, P(r, "y"));
        CHECK(s.equals(Ideal(B, {P(r, "x")})));
        Ideal once = ideal_colon_poly(I, P(r, "y"));
        CHECK_FALSE(once.equals(s));
        CHECK(ideal_colon_poly(s, P(r, "y")).equals(s));
    }
    SUBCASE("intersection of coordinate ideals") {
        Ideal a(B, {P(r, "x")}), b(B, {P(r, "y")});
        CHECK(ideal_intersection(a, b).equals(Ideal(B, {P(r, "x*y")})));
    }
    SUBCASE("colon respects f*(a : f) inside a") {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 10; ++i) {
            Ideal a(B, {rnd_poly(r, rng), rnd_poly(r, rng)});
            Polynomial f = rnd_poly(r, rng);
            if (f.is_zero()) continue;
            Ideal c = ideal_colon_poly(a, f);
            for (const auto& g : c.reduced_gb()) CHECK(a.contains(g * f));
        }
    }
}

TEST_CASE("elimination recovers a subring ideal") {
    RingPtr r = ring101({"w", "x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    // w is a root relation: eliminating w from (w - x^2, w - y) forces x^2 - y
    Ideal I(B, {P(r, "w - x^2"), P(r, "w - y")});
    Ideal e = ideal_eliminate(I, {"w"});
    CHECK(e.contains(P(r, "x^2 - y")));
    for (const auto& g : e.reduced_gb()) {
        CHECK(g.lead().m.e[0] == 0);
        CHECK(I.contains(g));
    }
}

TEST_CASE("module operations over a free module") {
    RingPtr r = ring101({"x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    SUBCASE("syzygy of a regular pair is the Koszul relation") {
        std::vector<Vec> gens = {Vec{P(r, "x")}, Vec{P(r, "y")}};
        auto syz = module_syzygies(B, 1, gens);
        REQUIRE(syz.size() == 1);
        // y*e1 - x*e2 up to the monic normalization
        CHECK(syz[0][0] == P(r, "y"));
        CHECK(syz[0][1] == P(r, "-x"));
    }
    SUBCASE("syzygies of a single nonzerodivisor vanish") {
        auto syz = module_syzygies(B, 1, {Vec{P(r, "x")}});
        CHECK(syz.empty());
    }
    SUBCASE("module intersection of coordinate lines") {
        SubmoduleGens u(B, 1, {Vec{P(r, "x")}});
        SubmoduleGens v(B, 1, {Vec{P(r, "y")}});
        SubmoduleGens w = module_intersection(u, v);
        SubmoduleGens expected(B, 1, {Vec{P(r, "x*y")}});
        CHECK(w.equals(expected));
    }
    SUBCASE("colon by the unit ideal is the module itself") {
        SubmoduleGens zero(B, 1, {});
        Ideal unit(B, {Polynomial::from_int(r, 1)});
        SubmoduleGens c = module_colon_ideal(zero, unit);
        CHECK(c.is_zero_submodule());
    }
}

TEST_CASE("syzygies over a quotient ring catch the modulus") {
    RingPtr r = ring101({"x"});
    QuotientRing A = QuotientRing::make(r, {P(r, "x^2")});
    auto syz = module_syzygies(A, 1, {Vec{P(r, "x")}});
    // x * x = 0 in A, so (x) generates the syzygies
    REQUIRE(!syz.empty());
    SubmoduleGens s(A, 1, syz);
    CHECK(s.contains(Vec{P(r, "x")}));
    SubmoduleGens expected(A, 1, {Vec{P(r, "x")}});
    CHECK(s.equals(expected));
}

TEST_CASE("syzygy exactness on random inputs") {
    std::mt19937_64 rng(17);
    RingPtr r = ring101({"x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(Vec{rnd_poly(r, rng), rnd_poly(r, rng)});
        auto syz = module_syzygies(B, 2, gens);
        for (const auto& s : syz) {
            Vec img = vec_zero(r, 2);
            for (size_t j = 0; j < gens.size(); ++j)
                img = vec_add(img, vec_poly_mul(gens[j], s[j]));
            CHECK(vec_is_zero(img));
        }
    }
}

TEST_CASE("saturation of the chain relations by t recovers the larger ideal") {
    RingPtr r = ring101({"t", "x1", "x2", "x3"});
    std::vector<Polynomial> h = {P(r, "t*x1 - t^2*x2"), P(r, "t^2*x2 - t^3*x3"),
                                 P(r, "x1 - t^2*x3")};
    QuotientRing B = QuotientRing::poly_ring(r);
    SubmoduleGens rel(B, 1, {Vec{h[0]}, Vec{h[1]}, Vec{h[2]}});
    SubmoduleGens sat = module_saturation_elt(rel, P(r, "t"));
    SubmoduleGens expected(B, 1, {Vec{P(r, "x1 - t*x2")}, Vec{P(r, "x2 - t*x3")},
                                  Vec{P(r, "x1 - t^2*x3")}});
    CHECK(sat.equals(expected));
}

TEST_CASE("budget errors are explicit, never wrong answers") {
    RingPtr r = ring101({"x", "y", "z"});
    QuotientRing B = QuotientRing::poly_ring(r);
    Budget tiny{2, 40};
    Ideal I(B, {P(r, "x^2*y - z"), P(r, "y^2*z - x"), P(r, "z^2*x - y")});
    CHECK_THROWS_AS(I.reduced_gb(tiny), BudgetError);
    Budget small_deg{50000, 2};
    Ideal J(B, {P(r, "x^3*y^2 - z"), P(r, "y^3*z^3 - x")});
    CHECK_THROWS_AS((void)J.reduced_gb(small_deg), BudgetError);
}

TEST_CASE("budget cache does not poison later calls") {
    RingPtr r = ring101({"x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    Ideal I(B, {P(r, "x^2 + y"), P(r, "x*y - 1")});
    Budget tiny{1, 40};
    CHECK_THROWS_AS(I.reduced_gb(tiny), BudgetError);
    // a fresh value computes fine
    Ideal J(B, {P(r, "x^2 + y"), P(r, "x*y - 1")});
    CHECK_NOTHROW(J.reduced_gb());
}
