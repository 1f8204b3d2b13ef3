#include "flatcheck/poly.hpp"

#include <algorithm>

namespace flatcheck {

Polynomial Polynomial::zero(RingPtr r) {
    Polynomial p;
    p.ring_ = std::move(r);
    return p;
}

Polynomial Polynomial::constant(RingPtr r, FVal c) {
    Polynomial p;
    if (!r->field()->is_zero(c))
        p.terms_.push_back(Term{mono_one(r->nvars()), std::move(c)});
    p.ring_ = std::move(r);
    return p;
}

Polynomial Polynomial::from_int(RingPtr r, long long n) {
    FVal c = r->field()->from_int(n);
    return constant(std::move(r), std::move(c));
}

Polynomial Polynomial::variable(RingPtr r, size_t i, int exp) {
    Polynomial p;
    if (exp == 0) return from_int(std::move(r), 1);
    p.terms_.push_back(Term{mono_var(r->nvars(), i, exp), r->field()->one()});
    p.ring_ = std::move(r);
    return p;
}

Polynomial Polynomial::term(RingPtr r, Monomial m, FVal c) {
    Polynomial p;
    if (!r->field()->is_zero(c)) p.terms_.push_back(Term{std::move(m), std::move(c)});
    p.ring_ = std::move(r);
    return p;
}

Polynomial Polynomial::from_terms(RingPtr r, std::vector<Term> ts) {
    const auto& ord = r->order();
    const Field& F = *r->field();
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    Polynomial p;
    for (auto& t : ts) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c = F.add(p.terms_.back().c, t.c);
            if (F.is_zero(p.terms_.back().c)) p.terms_.pop_back();
        } else if (!F.is_zero(t.c)) {
            p.terms_.push_back(std::move(t));
        }
    }
    p.ring_ = std::move(r);
    return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr r, std::vector<Term> ts) {
    Polynomial p;
    p.terms_ = std::move(ts);
    p.ring_ = std::move(r);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw Error("lead term of the zero polynomial");
    return terms_[0];
}

Polynomial Polynomial::tail() const {
    Polynomial r;
    r.ring_ = ring_;
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_->same(*o.ring_)) throw RingMismatchError("polynomial addition");
    const Field& F = *ring_->field();
    const auto& ord = ring_->order();
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FVal s = F.add(terms_[i].c, o.terms_[j].c);
            if (!F.is_zero(s)) r.terms_.push_back(Term{terms_[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    const Field& F = *ring_->field();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = F.neg(t.c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::term_mul(const Monomial& m, const FVal& c) const {
    const Field& F = *ring_->field();
    Polynomial r;
    r.ring_ = ring_;
    if (F.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        FVal p = F.mul(t.c, c);
        if (!F.is_zero(p)) r.terms_.push_back(Term{mono_mul(t.m, m), std::move(p)});
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_->same(*o.ring_)) throw RingMismatchError("polynomial multiplication");
    Polynomial acc = zero(ring_);
    // multiply by the shorter factor termwise
    const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
    const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_) acc = acc + big.term_mul(t.m, t.c);
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    const Field& F = *ring_->field();
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || !F.eq(terms_[i].c, o.terms_[i].c)) return false;
    return true;
}

Polynomial Polynomial::scaled(const FVal& c) const {
    return term_mul(mono_one(ring_->nvars()), c);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Field& F = *ring_->field();
    if (F.is_one(lead().c)) return *this;
    return scaled(F.inv(lead().c));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = *ring_->field();
    std::string s;
    for (const auto& t : terms_) {
        std::string cs = F.to_string(t.c);
        bool neg = false;
        if (!cs.empty() && cs[0] == '-') {  // rationals print signed
            neg = true;
            cs = cs.substr(1);
        }
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (cs.find('/') != std::string::npos || cs.find(' ') != std::string::npos ||
            (cs.find_first_of("+-") != std::string::npos && cs.size() > 1))
            cs = "(" + cs + ")";
        if (t.m.is_one()) {
            s += cs;
            continue;
        }
        bool coeff_shown = cs != "1";
        if (coeff_shown) s += cs;
        bool first_var = true;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (!t.m.e[i]) continue;
            if (coeff_shown || !first_var) s += "*";
            s += ring_->vars()[i];
            if (t.m.e[i] > 1) s += "^" + std::to_string((int)t.m.e[i]);
            first_var = false;
        }
    }
    return s;
}

Polynomial sub_term_mul(const Polynomial& a, const Polynomial& b, const Monomial& q,
                        const FVal& c) {
    const RingPtr& ring = a.ring();
    const Field& F = *ring->field();
    const auto& ord = ring->order();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    const auto& at = a.terms();
    const auto& bt = b.terms();
    size_t i = 0, j = 0;
    while (i < at.size() && j < bt.size()) {
        Monomial bm = mono_mul(bt[j].m, q);
        int cmp = ord.cmp(at[i].m, bm);
        if (cmp > 0) {
            out.push_back(at[i++]);
        } else if (cmp < 0) {
            FVal v = F.neg(F.mul(bt[j].c, c));
            if (!F.is_zero(v)) out.push_back(Term{std::move(bm), std::move(v)});
            ++j;
        } else {
            FVal v = F.sub(at[i].c, F.mul(bt[j].c, c));
            if (!F.is_zero(v)) out.push_back(Term{at[i].m, std::move(v)});
            ++i; ++j;
        }
    }
    for (; i < at.size(); ++i) out.push_back(at[i]);
    for (; j < bt.size(); ++j) {
        FVal v = F.neg(F.mul(bt[j].c, c));
        if (!F.is_zero(v)) out.push_back(Term{mono_mul(bt[j].m, q), std::move(v)});
    }
    return Polynomial::from_sorted_terms(ring, std::move(out));
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    throw Error("bad poly op");
}

// -- parser ---------------------------------------------------------------------

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, (int)pos + 1); }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    Polynomial parse_expr() {
        Polynomial acc = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        skip_ws();
        if (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '('))
            fail("implicit multiplication is not allowed");
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected exponent");
            int e = std::stoi(s.substr(start, pos - start));
            Polynomial r = Polynomial::from_int(ring, 1);
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {  // unary minus inside a factor, e.g. "(-3)"
            ++pos;
            return -parse_base();
        }
        if (isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            mpz_class n(s.substr(start, pos - start));
            return Polynomial::constant(ring, ring->field()->from_mpz(n));
        }
        if (isalpha((unsigned char)c)) {
            size_t start = pos;
            ++pos;
            while (pos < s.size() &&
                   (isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int vi = ring->var_index(name);
            if (vi >= 0) return Polynomial::variable(ring, (size_t)vi);
            // coefficient-field generator, e.g. t over F_101(t)
            const Field& F = *ring->field();
            if ((F.kind() == FieldKind::RationalFunctions ||
                 F.kind() == FieldKind::SimpleExtension) &&
                F.variable() == name)
                return Polynomial::constant(ring, F.generator());
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace flatcheck
