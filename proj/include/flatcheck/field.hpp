#ifndef FLATCHECK_FIELD_HPP
#define FLATCHECK_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "flatcheck/error.hpp"

namespace flatcheck {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct RatFuncRep;
struct ExtElemRep;

// Payload of a field element. The meaning of the alternative is fixed by the
// owning Field: PrimeField -> uint64_t in [0,p), Rationals -> mpq_class in
// canonical form, RationalFunctions -> RatFuncRep, SimpleExtension -> ExtElemRep.
using FVal = std::variant<std::uint64_t, mpq_class,
                          std::shared_ptr<const RatFuncRep>,
                          std::shared_ptr<const ExtElemRep>>;

// Dense univariate polynomial over the base field; coefficients ascending,
// no trailing zeros (the zero polynomial is the empty vector).
using UniPoly = std::vector<FVal>;

struct RatFuncRep {
    UniPoly num;
    UniPoly den;  // monic, gcd(num, den) = 1
};

struct ExtElemRep {
    UniPoly rep;  // degree < degree of the field modulus
};

enum class FieldKind { Rationals, PrimeField, RationalFunctions, SimpleExtension };

/// An exact coefficient field. Immutable; shared freely across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime_field(std::uint64_t p);  // checks primality, p < 2^31
    static FieldPtr rational_functions(FieldPtr base, std::string variable);
    // Checks the modulus irreducible over the base.
    static FieldPtr simple_extension(FieldPtr base, std::string variable, UniPoly modulus);

    FieldKind kind() const { return kind_; }
    std::uint64_t prime() const { return p_; }
    const FieldPtr& base() const { return base_; }
    const std::string& variable() const { return var_; }
    const UniPoly& modulus() const { return modulus_; }
    int extension_degree() const;  // degree of modulus (SimpleExtension only)

    bool same(const Field& other) const;  // structural equality

    FVal zero() const;
    FVal one() const;
    FVal from_int(long long n) const;
    FVal from_mpz(const mpz_class& n) const;
    FVal generator() const;  // the adjoined variable, for RationalFunctions/SimpleExtension
    // Lifts an element of base() into this field.
    FVal embed_base(const FVal& b) const;

    bool is_zero(const FVal& a) const;
    bool is_one(const FVal& a) const;
    bool eq(const FVal& a, const FVal& b) const;
    FVal add(const FVal& a, const FVal& b) const;
    FVal sub(const FVal& a, const FVal& b) const;
    FVal mul(const FVal& a, const FVal& b) const;
    FVal div(const FVal& a, const FVal& b) const;  // throws DivisionByZeroError
    FVal neg(const FVal& a) const;
    FVal inv(const FVal& a) const;

    // 0 for characteristic 0, else p.
    mpz_class characteristic() const;
    // Number of elements for finite fields (PrimeField or SimpleExtension over
    // one); throws UnsupportedError otherwise.
    mpz_class cardinality() const;

    std::string to_string(const FVal& a) const;
    std::string name() const;  // e.g. "F_101", "QQ", "F_101(t)", "F_3[t]/(t^2+1)"

private:
    Field() = default;
    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
    FieldPtr base_;
    std::string var_;
    UniPoly modulus_;
};

/// A field element that knows its field; the user-facing value for field_arith.
struct FieldElem {
    FieldPtr field;
    FVal v;
};

enum class FieldOp { Add, Sub, Mul, Div };

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op);

// -- univariate helpers over an explicit base field ---------------------------

namespace upoly {

UniPoly trimmed(UniPoly p, const Field& F);
bool is_zero(const UniPoly& p);
int deg(const UniPoly& p);  // -1 for the zero polynomial
UniPoly constant(const Field& F, const FVal& c);
UniPoly from_ints(const Field& F, const std::vector<long long>& coeffs);
UniPoly add(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly sub(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly mul(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly neg(const Field& F, const UniPoly& a);
UniPoly scale(const Field& F, const UniPoly& a, const FVal& c);
void divrem(const Field& F, const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly rem(const Field& F, const UniPoly& a, const UniPoly& b);
UniPoly monic(const Field& F, const UniPoly& a);
UniPoly gcd(const Field& F, UniPoly a, UniPoly b);  // monic gcd
UniPoly derivative(const Field& F, const UniPoly& a);
UniPoly mulmod(const Field& F, const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly powmod(const Field& F, UniPoly a, mpz_class e, const UniPoly& m);
FVal eval(const Field& F, const UniPoly& a, const FVal& x);
bool eq(const Field& F, const UniPoly& a, const UniPoly& b);
std::string to_string(const Field& F, const UniPoly& a, const std::string& var);

}  // namespace upoly

// Exact irreducibility test over the base field of the coefficients.
// PrimeField / finite SimpleExtension bases: complete (small-degree factor
// search, Rabin's test beyond). Rationals: degree <= 3 only (rational root
// test); larger degrees raise UnsupportedError.
bool is_irreducible(const Field& base, const UniPoly& f);

bool is_prime_u64(std::uint64_t n);

}  // namespace flatcheck

#endif
