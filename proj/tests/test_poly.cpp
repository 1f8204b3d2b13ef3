#include <doctest.h>

#include <random>

#include "flatcheck/poly.hpp"

using namespace flatcheck;

namespace {

RingPtr ring101(std::vector<std::string> vars, MonomialOrder ord = MonomialOrder::grevlex()) {
    return PolyRing::make(Field::prime_field(101), std::move(vars), std::move(ord));
}

Polynomial rnd_poly(const RingPtr& r, std::mt19937_64& rng, int terms = 4, int maxdeg = 3) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m = mono_one(r->nvars());
        for (size_t v = 0; v < r->nvars(); ++v) m.e[v] = (std::uint16_t)(rng() % (maxdeg + 1));
        ts.push_back(Term{m, r->field()->from_int((long long)(rng() % 100))});
    }
    return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("basic arithmetic and cancellation") {
    RingPtr r = ring101({"x", "y"});
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    CHECK((x + y) + (x - y) == x + x);
    CHECK((x + y) + (x - y) == Polynomial::from_int(r, 2) * x);
    Polynomial p = x * x + y;
    CHECK(poly_arith(p, Polynomial::zero(r), PolyOp::Mul).is_zero());
}

TEST_CASE("hand expansion over three variables") {
    RingPtr r = ring101({"t", "x1", "x2"});
    Polynomial t = Polynomial::variable(r, 0), x1 = Polynomial::variable(r, 1),
               x2 = Polynomial::variable(r, 2);
    // (x1 - t*x2)*t = t*x1 - t^2*x2
    CHECK((x1 - t * x2) * t == t * x1 - t * t * x2);
    CHECK(((x1 - t * x2) * t).to_string() == "100*t^2*x2 + t*x1");
}

TEST_CASE("canonical form: p + q - q == p structurally") {
    std::mt19937_64 rng(7);
    RingPtr r = ring101({"x", "y", "z"});
    for (int i = 0; i < 100; ++i) {
        Polynomial p = rnd_poly(r, rng), q = rnd_poly(r, rng);
        CHECK((p + q) - q == p);
    }
}

TEST_CASE("monomial orders are total and multiplicative") {
    std::mt19937_64 rng(11);
    for (MonomialOrder ord : {MonomialOrder::lex(), MonomialOrder::grevlex(),
                              MonomialOrder::block({2, 2})}) {
        auto rnd_mono = [&]() {
            Monomial m = mono_one(4);
            for (size_t v = 0; v < 4; ++v) m.e[v] = (std::uint16_t)(rng() % 5);
            return m;
        };
        for (int i = 0; i < 200; ++i) {
            Monomial a = rnd_mono(), b = rnd_mono(), c = rnd_mono();
            int ab = ord.cmp(a, b);
            CHECK(ab == -ord.cmp(b, a));
            if (ab == 0) CHECK(a == b);
            // multiplicative: a < b implies ac < bc
            if (ab < 0) CHECK(ord.cmp(mono_mul(a, c), mono_mul(b, c)) < 0);
            // transitivity spot check
            if (ab < 0 && ord.cmp(b, c) < 0) CHECK(ord.cmp(a, c) < 0);
            // one is the minimum among degree-positive monomials times anything
            CHECK(ord.cmp(mono_mul(a, c), c) >= 0);
        }
    }
}

TEST_CASE("order kinds differ where expected") {
    RingPtr lex = ring101({"x", "y"}, MonomialOrder::lex());
    Polynomial p = parse_polynomial(lex, "x + y^3");
    CHECK(p.lead().m == mono_var(2, 0));  // lex: x beats y^3
    RingPtr grev = ring101({"x", "y"});
    Polynomial q = parse_polynomial(grev, "x + y^3");
    CHECK(q.lead().m == mono_var(2, 1, 3));  // grevlex: degree wins
}

TEST_CASE("parser round trip on the shared grammar") {
    RingPtr r = ring101({"t", "x1", "x2"});
    for (const char* s : {"t^2*x1 - 3*x2", "x1 - t*x2", "(t + 1)^2*x1", "-x1 + 2",
                          "t*x1*x2 + 100"}) {
        Polynomial p = parse_polynomial(r, s);
        CHECK(parse_polynomial(r, p.to_string()) == p);
    }
}

TEST_CASE("parser rejects bad input with a column") {
    RingPtr r = ring101({"x", "y"});
    CHECK_THROWS_AS(parse_polynomial(r, "x + z"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(r, "x y"), ParseError);      // implicit multiplication
    CHECK_THROWS_AS(parse_polynomial(r, "2x"), ParseError);       // implicit multiplication
    CHECK_THROWS_AS(parse_polynomial(r, "x + "), ParseError);
    CHECK_THROWS_AS(parse_polynomial(r, "x ^ y"), ParseError);
    try {
        parse_polynomial(r, "x + z");
    } catch (const ParseError& e) {
        CHECK(e.col == 5);
    }
}

TEST_CASE("coefficient-field generator resolves in the grammar") {
    FieldPtr kt = Field::rational_functions(Field::prime_field(101), "t");
    RingPtr r = PolyRing::make(kt, {"x"}, MonomialOrder::grevlex());
    Polynomial p = parse_polynomial(r, "t*x - 1");
    CHECK(kt->eq(p.lead().c, kt->generator()));
}

TEST_CASE("ring mismatch raises") {
    RingPtr a = ring101({"x"}), b = ring101({"y"});
    CHECK_THROWS_AS(Polynomial::variable(a, 0) + Polynomial::variable(b, 0), RingMismatchError);
}
