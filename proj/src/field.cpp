#include "flatcheck/field.hpp"

#include <algorithm>
#include <cassert>

namespace flatcheck {

namespace {

std::uint64_t addp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t subp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31 so the product fits in 64 bits
}
std::uint64_t invp(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZeroError();
    // extended Euclid on (a, p); signs tracked via two remainder sequences
    std::int64_t t = 0, newt = 1;
    std::int64_t r = (std::int64_t)p, newr = (std::int64_t)a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += (std::int64_t)p;
    return (std::uint64_t)t;
}

const std::shared_ptr<const RatFuncRep>& rf(const FVal& a) {
    return std::get<std::shared_ptr<const RatFuncRep>>(a);
}
const std::shared_ptr<const ExtElemRep>& xe(const FVal& a) {
    return std::get<std::shared_ptr<const ExtElemRep>>(a);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// -- upoly --------------------------------------------------------------------

namespace upoly {

UniPoly trimmed(UniPoly p, const Field& F) {
    while (!p.empty() && F.is_zero(p.back())) p.pop_back();
    return p;
}

bool is_zero(const UniPoly& p) { return p.empty(); }

int deg(const UniPoly& p) { return (int)p.size() - 1; }

UniPoly constant(const Field& F, const FVal& c) {
    if (F.is_zero(c)) return {};
    return {c};
}

UniPoly from_ints(const Field& F, const std::vector<long long>& coeffs) {
    UniPoly p;
    p.reserve(coeffs.size());
    for (long long c : coeffs) p.push_back(F.from_int(c));
    return trimmed(std::move(p), F);
}

UniPoly add(const Field& F, const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    return trimmed(std::move(r), F);
}

UniPoly sub(const Field& F, const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    return trimmed(std::move(r), F);
}

UniPoly neg(const Field& F, const UniPoly& a) {
    UniPoly r = a;
    for (auto& c : r) c = F.neg(c);
    return r;
}

UniPoly scale(const Field& F, const UniPoly& a, const FVal& c) {
    if (F.is_zero(c)) return {};
    UniPoly r = a;
    for (auto& x : r) x = F.mul(x, c);
    return r;
}

UniPoly mul(const Field& F, const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return trimmed(std::move(r), F);
}

void divrem(const Field& F, const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.empty()) throw DivisionByZeroError();
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, F.zero());
    FVal lb = F.inv(b.back());
    while (r.size() >= b.size()) {
        FVal c = F.mul(r.back(), lb);
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
        while (!r.empty() && F.is_zero(r.back())) r.pop_back();
        if (r.empty()) break;
    }
    q = trimmed(std::move(q), F);
}

UniPoly rem(const Field& F, const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divrem(F, a, b, q, r);
    return r;
}

UniPoly monic(const Field& F, const UniPoly& a) {
    if (a.empty() || F.is_one(a.back())) return a;
    return scale(F, a, F.inv(a.back()));
}

UniPoly gcd(const Field& F, UniPoly a, UniPoly b) {
    while (!b.empty()) {
        UniPoly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

UniPoly derivative(const Field& F, const UniPoly& a) {
    if (a.size() <= 1) return {};
    UniPoly r(a.size() - 1, F.zero());
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int((long long)i));
    return trimmed(std::move(r), F);
}

UniPoly mulmod(const Field& F, const UniPoly& a, const UniPoly& b, const UniPoly& m) {
    return rem(F, mul(F, a, b), m);
}

UniPoly powmod(const Field& F, UniPoly a, mpz_class e, const UniPoly& m) {
    UniPoly r = constant(F, F.one());
    a = rem(F, a, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulmod(F, r, a, m);
        e >>= 1;
        if (e > 0) a = mulmod(F, a, a, m);
    }
    return r;
}

FVal eval(const Field& F, const UniPoly& a, const FVal& x) {
    FVal r = F.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

bool eq(const Field& F, const UniPoly& a, const UniPoly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!F.eq(a[i], b[i])) return false;
    return true;
}

std::string to_string(const Field& F, const UniPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (int i = deg(a); i >= 0; --i) {
        if (F.is_zero(a[(size_t)i])) continue;
        if (!s.empty()) s += " + ";
        std::string c = F.to_string(a[(size_t)i]);
        if (i == 0) {
            s += c;
        } else {
            if (c != "1") s += c + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace upoly

// -- irreducibility ------------------------------------------------------------

namespace {

// Rabin: f of degree n irreducible over F_q iff x^(q^n) == x mod f and
// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r dividing n.
bool rabin_irreducible(const Field& base, const UniPoly& f, const mpz_class& q) {
    int n = upoly::deg(f);
    UniPoly x = {base.zero(), base.one()};
    std::vector<int> prime_divs;
    int m = n;
    for (int r = 2; r * r <= m; ++r)
        if (m % r == 0) {
            prime_divs.push_back(r);
            while (m % r == 0) m /= r;
        }
    if (m > 1) prime_divs.push_back(m);
    for (int r : prime_divs) {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), (unsigned long)(n / r));
        UniPoly h = upoly::sub(base, upoly::powmod(base, x, e, f), x);
        UniPoly g = upoly::gcd(base, f, h);
        if (upoly::deg(g) != 0) return false;
    }
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), (unsigned long)n);
    UniPoly h = upoly::sub(base, upoly::powmod(base, x, e, f), x);
    return upoly::is_zero(h);
}

bool has_root_fp(const Field& base, const UniPoly& f) {
    std::uint64_t p = base.prime();
    for (std::uint64_t a = 0; a < p; ++a)
        if (base.is_zero(upoly::eval(base, f, FVal(a)))) return true;
    return false;
}

bool irreducible_fp(const Field& base, const UniPoly& f) {
    int n = upoly::deg(f);
    std::uint64_t p = base.prime();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (n <= 4 && p <= 4096) {
        // exhaustive root search; for degree 4 also rule out quadratic factors
        if (has_root_fp(base, f)) return false;
        if (n <= 3) return true;
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c) {
                UniPoly g = {FVal(c), FVal(b), base.one()};
                if (upoly::is_zero(upoly::rem(base, f, g))) return false;
            }
        return true;
    }
    return rabin_irreducible(base, f, mpz_class((unsigned long)p));
}

bool irreducible_q(const Field& base, const UniPoly& f) {
    int n = upoly::deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    if (n > 3)
        throw UnsupportedError("irreducibility over the rationals beyond degree 3");
    // rational root test on the primitive integer model
    mpz_class den(1);
    for (const auto& c : f) {
        const mpq_class& q = std::get<mpq_class>(c);
        mpz_class d = q.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<mpz_class> zc;
    for (const auto& c : f) {
        mpq_class q = std::get<mpq_class>(c) * mpq_class(den);
        zc.push_back(q.get_num());
    }
    mpz_class a0 = zc.front(), an = zc.back();
    if (a0 == 0) return false;  // x divides
    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> ds;
        v = abs(v);
        for (mpz_class d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const mpz_class& r : divisors(a0))
        for (const mpz_class& s : divisors(an))
            for (int sign : {1, -1}) {
                mpq_class cand(sign * r, s);
                cand.canonicalize();
                FVal val = mpq_class(cand);
                if (base.is_zero(upoly::eval(base, f, val))) return false;
            }
    return true;
}

}  // namespace

bool is_irreducible(const Field& base, const UniPoly& f) {
    switch (base.kind()) {
        case FieldKind::PrimeField:
            return irreducible_fp(base, f);
        case FieldKind::Rationals:
            return irreducible_q(base, f);
        case FieldKind::SimpleExtension: {
            if (upoly::deg(f) <= 0) return false;
            if (upoly::deg(f) == 1) return true;
            return rabin_irreducible(base, f, base.cardinality());
        }
        default:
            throw UnsupportedError("irreducibility over " + base.name());
    }
}

// -- Field ---------------------------------------------------------------------

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::Rationals;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime_field(std::uint64_t p) {
    if (p >= (1ull << 31)) throw UnsupportedError("prime field modulus must be < 2^31");
    if (!is_prime_u64(p)) throw Error("prime field modulus " + std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::PrimeField;
    f->p_ = p;
    return f;
}

FieldPtr Field::rational_functions(FieldPtr base, std::string variable) {
    if (base->kind() == FieldKind::RationalFunctions ||
        (base->kind() == FieldKind::SimpleExtension && base->base()->kind() != FieldKind::PrimeField &&
         base->base()->kind() != FieldKind::Rationals))
        throw UnsupportedError("field towers nest at most depth 2");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::RationalFunctions;
    f->base_ = std::move(base);
    f->var_ = std::move(variable);
    return f;
}

FieldPtr Field::simple_extension(FieldPtr base, std::string variable, UniPoly modulus) {
    if (base->kind() == FieldKind::RationalFunctions || base->kind() == FieldKind::SimpleExtension) {
        if (base->kind() == FieldKind::SimpleExtension &&
            base->base()->kind() != FieldKind::PrimeField && base->base()->kind() != FieldKind::Rationals)
            throw UnsupportedError("field towers nest at most depth 2");
    }
    modulus = upoly::monic(*base, upoly::trimmed(std::move(modulus), *base));
    if (upoly::deg(modulus) < 1) throw Error("extension modulus must have positive degree");
    if (!is_irreducible(*base, modulus))
        throw Error("extension modulus is reducible over " + base->name());
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::SimpleExtension;
    f->base_ = std::move(base);
    f->var_ = std::move(variable);
    f->modulus_ = std::move(modulus);
    return f;
}

int Field::extension_degree() const {
    if (kind_ != FieldKind::SimpleExtension) throw Error("not a simple extension");
    return upoly::deg(modulus_);
}

bool Field::same(const Field& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case FieldKind::Rationals: return true;
        case FieldKind::PrimeField: return p_ == other.p_;
        case FieldKind::RationalFunctions:
            return var_ == other.var_ && base_->same(*other.base_);
        case FieldKind::SimpleExtension:
            return var_ == other.var_ && base_->same(*other.base_) &&
                   upoly::eq(*base_, modulus_, other.modulus_);
    }
    return false;
}

FVal Field::zero() const {
    switch (kind_) {
        case FieldKind::PrimeField: return FVal(std::uint64_t(0));
        case FieldKind::Rationals: return FVal(mpq_class(0));
        case FieldKind::RationalFunctions:
            return FVal(std::make_shared<const RatFuncRep>(
                RatFuncRep{{}, upoly::constant(*base_, base_->one())}));
        case FieldKind::SimpleExtension:
            return FVal(std::make_shared<const ExtElemRep>(ExtElemRep{{}}));
    }
    throw Error("bad field kind");
}

FVal Field::one() const { return from_int(1); }

FVal Field::from_int(long long n) const { return from_mpz(mpz_class((long)n)); }

FVal Field::from_mpz(const mpz_class& n) const {
    switch (kind_) {
        case FieldKind::PrimeField: {
            mpz_class r = n % mpz_class((unsigned long)p_);
            if (r < 0) r += mpz_class((unsigned long)p_);
            return FVal(std::uint64_t(r.get_ui()));
        }
        case FieldKind::Rationals: return FVal(mpq_class(n));
        case FieldKind::RationalFunctions:
        case FieldKind::SimpleExtension:
            return embed_base(base_->from_mpz(n));
    }
    throw Error("bad field kind");
}

FVal Field::embed_base(const FVal& b) const {
    switch (kind_) {
        case FieldKind::RationalFunctions:
            return FVal(std::make_shared<const RatFuncRep>(
                RatFuncRep{upoly::constant(*base_, b), upoly::constant(*base_, base_->one())}));
        case FieldKind::SimpleExtension:
            return FVal(std::make_shared<const ExtElemRep>(ExtElemRep{upoly::constant(*base_, b)}));
        default:
            throw Error("embed_base on a ground field");
    }
}

FVal Field::generator() const {
    switch (kind_) {
        case FieldKind::RationalFunctions:
            return FVal(std::make_shared<const RatFuncRep>(RatFuncRep{
                UniPoly{base_->zero(), base_->one()}, upoly::constant(*base_, base_->one())}));
        case FieldKind::SimpleExtension: {
            if (extension_degree() == 1)
                // t is congruent to a base constant; reduce
                return FVal(std::make_shared<const ExtElemRep>(
                    ExtElemRep{upoly::constant(*base_, base_->neg(modulus_[0]))}));
            return FVal(std::make_shared<const ExtElemRep>(
                ExtElemRep{UniPoly{base_->zero(), base_->one()}}));
        }
        default:
            throw Error("field has no adjoined generator");
    }
}

bool Field::is_zero(const FVal& a) const {
    switch (kind_) {
        case FieldKind::PrimeField: return std::get<std::uint64_t>(a) == 0;
        case FieldKind::Rationals: return std::get<mpq_class>(a) == 0;
        case FieldKind::RationalFunctions: return rf(a)->num.empty();
        case FieldKind::SimpleExtension: return xe(a)->rep.empty();
    }
    throw Error("bad field kind");
}

bool Field::is_one(const FVal& a) const { return eq(a, one()); }

bool Field::eq(const FVal& a, const FVal& b) const {
    switch (kind_) {
        case FieldKind::PrimeField:
            return std::get<std::uint64_t>(a) == std::get<std::uint64_t>(b);
        case FieldKind::Rationals:
            return std::get<mpq_class>(a) == std::get<mpq_class>(b);
        case FieldKind::RationalFunctions:
            return upoly::eq(*base_, rf(a)->num, rf(b)->num) &&
                   upoly::eq(*base_, rf(a)->den, rf(b)->den);
        case FieldKind::SimpleExtension:
            return upoly::eq(*base_, xe(a)->rep, xe(b)->rep);
    }
    throw Error("bad field kind");
}

namespace {

FVal make_ratfunc(const Field& base, UniPoly num, UniPoly den) {
    if (upoly::is_zero(den)) throw DivisionByZeroError();
    if (upoly::is_zero(num))
        return FVal(std::make_shared<const RatFuncRep>(
            RatFuncRep{{}, upoly::constant(base, base.one())}));
    UniPoly g = upoly::gcd(base, num, den);
    if (upoly::deg(g) > 0) {
        UniPoly q, r;
        upoly::divrem(base, num, g, q, r);
        num = q;
        upoly::divrem(base, den, g, q, r);
        den = q;
    }
    // normalize: monic denominator
    FVal lc = den.back();
    if (!base.is_one(lc)) {
        FVal ilc = base.inv(lc);
        den = upoly::scale(base, den, ilc);
        num = upoly::scale(base, num, ilc);
    }
    return FVal(std::make_shared<const RatFuncRep>(RatFuncRep{std::move(num), std::move(den)}));
}

}  // namespace

FVal Field::add(const FVal& a, const FVal& b) const {
    switch (kind_) {
        case FieldKind::PrimeField:
            return FVal(addp(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b), p_));
        case FieldKind::Rationals:
            return FVal(mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b)));
        case FieldKind::RationalFunctions: {
            const auto &x = *rf(a), &y = *rf(b);
            UniPoly num = upoly::add(*base_, upoly::mul(*base_, x.num, y.den),
                                     upoly::mul(*base_, y.num, x.den));
            return make_ratfunc(*base_, std::move(num), upoly::mul(*base_, x.den, y.den));
        }
        case FieldKind::SimpleExtension:
            return FVal(std::make_shared<const ExtElemRep>(
                ExtElemRep{upoly::add(*base_, xe(a)->rep, xe(b)->rep)}));
    }
    throw Error("bad field kind");
}

FVal Field::sub(const FVal& a, const FVal& b) const { return add(a, neg(b)); }

FVal Field::neg(const FVal& a) const {
    switch (kind_) {
        case FieldKind::PrimeField: {
            std::uint64_t v = std::get<std::uint64_t>(a);
            return FVal(v == 0 ? v : p_ - v);
        }
        case FieldKind::Rationals: return FVal(mpq_class(-std::get<mpq_class>(a)));
        case FieldKind::RationalFunctions:
            return FVal(std::make_shared<const RatFuncRep>(
                RatFuncRep{upoly::neg(*base_, rf(a)->num), rf(a)->den}));
        case FieldKind::SimpleExtension:
            return FVal(std::make_shared<const ExtElemRep>(
                ExtElemRep{upoly::neg(*base_, xe(a)->rep)}));
    }
    throw Error("bad field kind");
}

FVal Field::mul(const FVal& a, const FVal& b) const {
    switch (kind_) {
        case FieldKind::PrimeField:
            return FVal(mulp(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b), p_));
        case FieldKind::Rationals:
            return FVal(mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b)));
        case FieldKind::RationalFunctions: {
            const auto &x = *rf(a), &y = *rf(b);
            return make_ratfunc(*base_, upoly::mul(*base_, x.num, y.num),
                                upoly::mul(*base_, x.den, y.den));
        }
        case FieldKind::SimpleExtension:
            return FVal(std::make_shared<const ExtElemRep>(
                ExtElemRep{upoly::mulmod(*base_, xe(a)->rep, xe(b)->rep, modulus_)}));
    }
    throw Error("bad field kind");
}

FVal Field::inv(const FVal& a) const {
    if (is_zero(a)) throw DivisionByZeroError();
    switch (kind_) {
        case FieldKind::PrimeField: return FVal(invp(std::get<std::uint64_t>(a), p_));
        case FieldKind::Rationals: return FVal(mpq_class(1 / std::get<mpq_class>(a)));
        case FieldKind::RationalFunctions:
            return make_ratfunc(*base_, rf(a)->den, rf(a)->num);
        case FieldKind::SimpleExtension: {
            // extended Euclid against the modulus
            const Field& B = *base_;
            UniPoly r0 = modulus_, r1 = xe(a)->rep;
            UniPoly s0 = {}, s1 = upoly::constant(B, B.one());
            while (!upoly::is_zero(r1)) {
                UniPoly q, r2;
                upoly::divrem(B, r0, r1, q, r2);
                UniPoly s2 = upoly::sub(B, s0, upoly::mul(B, q, s1));
                r0 = std::move(r1); r1 = std::move(r2);
                s0 = std::move(s1); s1 = std::move(s2);
            }
            // r0 = gcd, a unit since modulus is irreducible and a != 0
            FVal c = B.inv(r0.back());
            return FVal(std::make_shared<const ExtElemRep>(
                ExtElemRep{upoly::rem(B, upoly::scale(B, s0, c), modulus_)}));
        }
    }
    throw Error("bad field kind");
}

FVal Field::div(const FVal& a, const FVal& b) const { return mul(a, inv(b)); }

mpz_class Field::characteristic() const {
    switch (kind_) {
        case FieldKind::PrimeField: return mpz_class((unsigned long)p_);
        case FieldKind::Rationals: return 0;
        default: return base_->characteristic();
    }
}

mpz_class Field::cardinality() const {
    switch (kind_) {
        case FieldKind::PrimeField: return mpz_class((unsigned long)p_);
        case FieldKind::SimpleExtension: {
            mpz_class b = base_->cardinality(), r;
            mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), (unsigned long)extension_degree());
            return r;
        }
        default: throw UnsupportedError("cardinality of an infinite field");
    }
}

std::string Field::to_string(const FVal& a) const {
    switch (kind_) {
        case FieldKind::PrimeField: return std::to_string(std::get<std::uint64_t>(a));
        case FieldKind::Rationals: return std::get<mpq_class>(a).get_str();
        case FieldKind::RationalFunctions: {
            const auto& x = *rf(a);
            std::string n = upoly::to_string(*base_, x.num, var_);
            if (upoly::deg(x.den) == 0) return n;
            return "(" + n + ")/(" + upoly::to_string(*base_, x.den, var_) + ")";
        }
        case FieldKind::SimpleExtension:
            return upoly::to_string(*base_, xe(a)->rep, var_);
    }
    throw Error("bad field kind");
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::PrimeField: return "F_" + std::to_string(p_);
        case FieldKind::Rationals: return "QQ";
        case FieldKind::RationalFunctions: return base_->name() + "(" + var_ + ")";
        case FieldKind::SimpleExtension:
            return base_->name() + "[" + var_ + "]/(" +
                   upoly::to_string(*base_, modulus_, var_) + ")";
    }
    throw Error("bad field kind");
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
    if (!a.field->same(*b.field)) throw RingMismatchError("field elements from different fields");
    const Field& F = *a.field;
    switch (op) {
        case FieldOp::Add: return {a.field, F.add(a.v, b.v)};
        case FieldOp::Sub: return {a.field, F.sub(a.v, b.v)};
        case FieldOp::Mul: return {a.field, F.mul(a.v, b.v)};
        case FieldOp::Div: return {a.field, F.div(a.v, b.v)};
    }
    throw Error("bad field op");
}

}  // namespace flatcheck
