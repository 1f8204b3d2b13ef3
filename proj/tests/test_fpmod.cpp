#include <doctest.h>

#include <random>

#include "flatcheck/fpmod.hpp"

using namespace flatcheck;

namespace {

RingPtr ring101(std::vector<std::string> vars) {
    return PolyRing::make(Field::prime_field(101), std::move(vars), MonomialOrder::grevlex());
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

}  // namespace

TEST_CASE("kernels of multiplication maps") {
    RingPtr r = ring101({"x"});
    SUBCASE("nonzerodivisor on a domain") {
        QuotientRing B = QuotientRing::poly_ring(r);
        PresentedModule free1 = PresentedModule::ring_module(B);
        KernelResult k = kernel(ModuleMap::multiplication(free1, P(r, "x")));
        CHECK(k.module.is_zero());
    }
    SUBCASE("zero divisor in a quotient") {
        QuotientRing A = QuotientRing::make(r, {P(r, "x^2")});
        PresentedModule free1 = PresentedModule::ring_module(A);
        KernelResult k = kernel(ModuleMap::multiplication(free1, P(r, "x")));
        CHECK_FALSE(k.module.is_zero());
        // the kernel is (x), realized by its inclusion column
        SubmoduleGens incl(A, 1, k.inclusion.columns());
        CHECK(incl.contains(Vec{P(r, "x")}));
        CHECK_FALSE(incl.contains(Vec{Polynomial::from_int(r, 1)}));
    }
    SUBCASE("identity has zero kernel") {
        QuotientRing B = QuotientRing::poly_ring(r);
        PresentedModule m(B, 2, {Vec{P(r, "x"), P(r, "x^2")}});
        KernelResult k = kernel(ModuleMap::identity(m));
        CHECK(k.module.is_zero());
    }
}

TEST_CASE("cokernel and image") {
    RingPtr r = ring101({"t"});
    QuotientRing B = QuotientRing::poly_ring(r);
    PresentedModule free1 = PresentedModule::ring_module(B);
    ModuleMap mult = ModuleMap::multiplication(free1, P(r, "t"));
    CokerImage ci = coker_image(mult);
    CHECK(presentations_equivalent(ci.cokernel, PresentedModule::cyclic(B, {P(r, "t")})));
    CHECK_FALSE(ci.cokernel.is_zero());
    // image of the zero map is zero
    ModuleMap zero = ModuleMap::multiplication(free1, Polynomial::zero(r));
    CokerImage zi = coker_image(zero);
    CHECK(zi.image.is_zero());
    CHECK(presentations_equivalent(zi.cokernel, free1));
}

TEST_CASE("module map well-definedness is certified") {
    RingPtr r = ring101({"x"});
    QuotientRing B = QuotientRing::poly_ring(r);
    PresentedModule mod_x = PresentedModule::cyclic(B, {P(r, "x")});
    PresentedModule free1 = PresentedModule::ring_module(B);
    // A/(x) -> A by the identity matrix is not well defined
    CHECK_THROWS_AS(ModuleMap(mod_x, free1, {vec_unit(r, 1, 0)}), Error);
    // but multiplication by x is fine: x * x = x^2 lands in (x)
    CHECK_NOTHROW(ModuleMap(mod_x, mod_x, {Vec{P(r, "x")}}));
}

TEST_CASE("tensor products") {
    RingPtr r = ring101({"x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    SUBCASE("unit of the tensor") {
        PresentedModule n(B, 2, {Vec{P(r, "x"), P(r, "y")}});
        PresentedModule t = tensor(PresentedModule::ring_module(B), n);
        CHECK(presentations_equivalent(t, n));
    }
    SUBCASE("cyclic against cyclic joins the annihilators") {
        PresentedModule a = PresentedModule::cyclic(B, {P(r, "x")});
        PresentedModule b = PresentedModule::cyclic(B, {P(r, "y")});
        PresentedModule t = tensor(a, b);
        CHECK(presentations_equivalent(t, PresentedModule::cyclic(B, {P(r, "x"), P(r, "y")})));
    }
    SUBCASE("idempotent cyclic quotient") {
        RingPtr r1 = ring101({"x"});
        QuotientRing B1 = QuotientRing::poly_ring(r1);
        PresentedModule a = PresentedModule::cyclic(B1, {parse_polynomial(r1, "x")});
        CHECK(presentations_equivalent(tensor(a, a), a));
    }
}

TEST_CASE("base change") {
    RingPtr rt = ring101({"t"});
    QuotientRing R = QuotientRing::poly_ring(rt);
    SUBCASE("to the quotient by t") {
        QuotientRing R0 = QuotientRing::make(rt, {P(rt, "t")});
        RingMap q(R, R0, {P(rt, "t")});
        PresentedModule m = PresentedModule::ring_module(R);
        PresentedModule out = base_change(m, q);
        CHECK(out.rank() == 1);
        CHECK(out.ring().same(R0));
    }
    SUBCASE("identity base change is structural") {
        PresentedModule m(R, 2, {Vec{P(rt, "t"), P(rt, "t^2")}});
        PresentedModule out = base_change(m, RingMap::identity(R));
        CHECK(presentations_equivalent(out, m));
    }
    SUBCASE("functoriality on a random composable pair") {
        RingPtr rx = ring101({"x"});
        QuotientRing Rx = QuotientRing::poly_ring(rx);
        RingMap f(R, Rx, {parse_polynomial(rx, "x^2")});
        RingPtr ry = ring101({"y"});
        QuotientRing Ry = QuotientRing::poly_ring(ry);
        RingMap g(Rx, Ry, {parse_polynomial(ry, "y + 1")});
        PresentedModule m(R, 1, {Vec{P(rt, "t^2 - t")}});
        PresentedModule two_step = base_change(base_change(m, f), g);
        PresentedModule one_step = base_change(m, RingMap::compose(g, f));
        CHECK(presentations_equivalent(two_step, one_step));
    }
}

TEST_CASE("free resolutions") {
    RingPtr r = ring101({"x"});
    SUBCASE("koszul resolution of the coordinate quotient") {
        QuotientRing B = QuotientRing::poly_ring(r);
        PresentedModule m = PresentedModule::cyclic(B, {P(r, "x")});
        Resolution res = free_resolution(m, 3);
        CHECK(res.ranks == std::vector<int>{1, 1, 0, 0});
        CHECK(resolution_composes_to_zero(res));
        CHECK(resolution_exact_at(res, 1));
        CHECK(resolution_exact_at(res, 2));
    }
    SUBCASE("periodic resolution over the dual numbers") {
        QuotientRing A = QuotientRing::make(r, {P(r, "x^2")});
        PresentedModule k = PresentedModule::cyclic(A, {P(r, "x")});
        Resolution res = free_resolution(k, 3);
        CHECK(res.ranks == std::vector<int>{1, 1, 1, 1});
        for (const auto& cols : res.maps) {
            REQUIRE(cols.size() == 1);
            CHECK(cols[0][0] == P(r, "x"));
        }
        CHECK(resolution_composes_to_zero(res));
        CHECK(resolution_exact_at(res, 1));
    }
    SUBCASE("free modules resolve instantly") {
        QuotientRing B = QuotientRing::poly_ring(r);
        Resolution res = free_resolution(PresentedModule::free_module(B, 2), 2);
        CHECK(res.ranks == std::vector<int>{2, 0, 0});
        CHECK(res.maps[0].empty());
    }
}

TEST_CASE("subquotients and dimension counting") {
    RingPtr r = ring101({"x"});
    QuotientRing B = QuotientRing::poly_ring(r);
    // (x)/(x^2) is one-dimensional
    std::vector<Vec> num = {Vec{P(r, "x")}};
    std::vector<Vec> den = {Vec{P(r, "x^2")}};
    PresentedModule sq = subquotient(B, 1, num, den);
    CHECK_FALSE(subquotient_is_zero(B, 1, num, den));
    CHECK(k_dimension(sq) == 1);
    CHECK(k_dimension(PresentedModule::cyclic(B, {P(r, "x^3")})) == 3);
    CHECK_FALSE(k_dimension(PresentedModule::ring_module(B)).has_value());
}

TEST_CASE("quotient by an ideal") {
    RingPtr r = ring101({"x", "y"});
    QuotientRing B = QuotientRing::poly_ring(r);
    PresentedModule m = PresentedModule::free_module(B, 2);
    Ideal a(B, {P(r, "x")});
    PresentedModule q = quotient_by_ideal(m, a);
    CHECK(k_dimension(q) == std::nullopt);
    Vec v = vec_zero(r, 2);
    v[0] = P(r, "x*y^3");
    CHECK(q.relations().contains(v));
}
