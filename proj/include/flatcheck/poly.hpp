#ifndef FLATCHECK_POLY_HPP
#define FLATCHECK_POLY_HPP

#include <string>
#include <vector>

#include "flatcheck/ring.hpp"

namespace flatcheck {

struct Term {
    Monomial m;
    FVal c;  // nonzero
};

/// Sparse multivariate polynomial in canonical form: terms strictly
/// descending in the ring's monomial order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero(RingPtr r);
    static Polynomial constant(RingPtr r, FVal c);
    static Polynomial from_int(RingPtr r, long long n);
    static Polynomial variable(RingPtr r, size_t i, int exp = 1);
    static Polynomial term(RingPtr r, Monomial m, FVal c);
    // Terms in any order, possibly with repeats and zeros; normalizes.
    static Polynomial from_terms(RingPtr r, std::vector<Term> ts);
    // Trusted: strictly descending distinct terms with nonzero coefficients.
    static Polynomial from_sorted_terms(RingPtr r, std::vector<Term> ts);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
    size_t size() const { return terms_.size(); }
    int degree() const;  // total degree, -1 for zero
    const Term& lead() const;
    Polynomial tail() const;  // everything below the lead term

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const FVal& c) const;
    Polynomial term_mul(const Monomial& m, const FVal& c) const;
    Polynomial monic() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

/// a - c * x^q * b in a single merge pass; the reduction workhorse.
Polynomial sub_term_mul(const Polynomial& a, const Polynomial& b, const Monomial& q,
                        const FVal& c);

/// Parses the shared text grammar: integer literals, variable names
/// [A-Za-z][A-Za-z0-9_]*, operators + - * ^, parentheses; implicit
/// multiplication is a parse error. Names that match the coefficient field's
/// adjoined generator resolve to that constant.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace flatcheck

#endif
