#include <doctest.h>

#include <random>

#include "flatcheck/field.hpp"

using namespace flatcheck;

TEST_CASE("prime field arithmetic") {
    FieldPtr F7 = Field::prime_field(7);
    // 3 / 5 = 2 since 5 * 2 = 10 = 3 mod 7
    FieldElem a{F7, F7->from_int(3)}, b{F7, F7->from_int(5)};
    CHECK(F7->eq(field_arith(a, b, FieldOp::Div).v, F7->from_int(2)));
    CHECK(F7->eq(F7->add(F7->from_int(4), F7->from_int(5)), F7->from_int(2)));
    CHECK(F7->eq(F7->neg(F7->from_int(0)), F7->zero()));
    CHECK_THROWS_AS(F7->inv(F7->zero()), DivisionByZeroError);
    CHECK_THROWS_AS(Field::prime_field(10), Error);
}

TEST_CASE("rationals are exact and canonical") {
    FieldPtr Q = Field::rationals();
    FVal x = Q->div(Q->from_int(1), Q->from_int(3));
    FVal y = Q->div(Q->from_int(1), Q->from_int(6));
    CHECK(Q->eq(Q->add(x, y), Q->div(Q->from_int(1), Q->from_int(2))));
    CHECK(Q->to_string(Q->from_int(-5)) == "-5");
}

TEST_CASE("rational function field normalizes") {
    FieldPtr k = Field::rationals();
    FieldPtr Kt = Field::rational_functions(k, "t");
    // (t^2 - 1) / (t - 1) = t + 1
    FVal t = Kt->generator();
    FVal num = Kt->sub(Kt->mul(t, t), Kt->one());
    FVal den = Kt->sub(t, Kt->one());
    FVal q = Kt->div(num, den);
    CHECK(Kt->eq(q, Kt->add(t, Kt->one())));
    // canonical form: monic denominator, coprime parts
    FVal half = Kt->div(Kt->one(), Kt->add(t, t));
    CHECK(Kt->to_string(half) == "(1/2)/(t)");
}

TEST_CASE("simple extension arithmetic reduces by the modulus") {
    FieldPtr F5 = Field::prime_field(5);
    // t^2 + 2 is irreducible over F_5 (no roots)
    UniPoly mod = upoly::from_ints(*F5, {2, 0, 1});
    FieldPtr F25 = Field::simple_extension(F5, "t", mod);
    FVal t = F25->generator();
    CHECK(F25->eq(F25->mul(t, t), F25->from_int(3)));  // t^2 = -2 = 3
    // inverses via extended euclid
    FVal it = F25->inv(t);
    CHECK(F25->is_one(F25->mul(t, it)));
}

TEST_CASE("extension construction rejects reducible moduli") {
    FieldPtr F5 = Field::prime_field(5);
    CHECK_THROWS_AS(Field::simple_extension(F5, "t", upoly::from_ints(*F5, {-1, 0, 1})), Error);
    FieldPtr F3 = Field::prime_field(3);
    // t^2 + 1: -1 is not a square mod 3
    CHECK_NOTHROW(Field::simple_extension(F3, "t", upoly::from_ints(*F3, {1, 0, 1})));
}

TEST_CASE("irreducibility testing") {
    FieldPtr F2 = Field::prime_field(2);
    CHECK(is_irreducible(*F2, upoly::from_ints(*F2, {1, 1, 1})));        // t^2+t+1
    CHECK_FALSE(is_irreducible(*F2, upoly::from_ints(*F2, {1, 0, 1})));  // t^2+1 = (t+1)^2
    // degree 5 goes through the large-degree path
    CHECK(is_irreducible(*F2, upoly::from_ints(*F2, {1, 0, 1, 0, 0, 1})));  // t^5+t^2+1
    CHECK_FALSE(is_irreducible(*F2, upoly::from_ints(*F2, {1, 1, 1, 1, 1, 1})));

    FieldPtr Q = Field::rationals();
    CHECK(is_irreducible(*Q, upoly::from_ints(*Q, {-2, 0, 1})));       // t^2 - 2
    CHECK_FALSE(is_irreducible(*Q, upoly::from_ints(*Q, {-1, 0, 1})));  // t^2 - 1
    CHECK(is_irreducible(*Q, upoly::from_ints(*Q, {2, 2, 0, 1})));     // t^3 + 2t + 2
    CHECK_THROWS_AS(is_irreducible(*Q, upoly::from_ints(*Q, {1, 1, 0, 0, 1})), UnsupportedError);
}

TEST_CASE("field axioms hold on random elements") {
    std::mt19937_64 rng(42);
    auto check_field = [&](const FieldPtr& F) {
        auto rnd = [&]() { return F->from_int((long long)(rng() % 19) - 9); };
        for (int i = 0; i < 50; ++i) {
            FVal a = rnd(), b = rnd(), c = rnd();
            CHECK(F->eq(F->add(a, b), F->add(b, a)));
            CHECK(F->eq(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c))));
            CHECK(F->eq(F->sub(F->add(a, b), b), a));
            if (!F->is_zero(b)) CHECK(F->eq(F->mul(F->div(a, b), b), a));
        }
    };
    check_field(Field::prime_field(101));
    check_field(Field::rationals());
    check_field(Field::rational_functions(Field::prime_field(101), "t"));
    FieldPtr F3 = Field::prime_field(3);
    check_field(Field::simple_extension(F3, "t", upoly::from_ints(*F3, {1, 0, 1})));
}

TEST_CASE("tower depth is capped") {
    FieldPtr k = Field::prime_field(101);
    FieldPtr kt = Field::rational_functions(k, "t");
    CHECK_THROWS_AS(Field::rational_functions(kt, "s"), UnsupportedError);
}

TEST_CASE("field element mismatch is rejected") {
    FieldPtr a = Field::prime_field(7), b = Field::prime_field(11);
    FieldElem x{a, a->one()}, y{b, b->one()};
    CHECK_THROWS_AS(field_arith(x, y, FieldOp::Add), RingMismatchError);
}
