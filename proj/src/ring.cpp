#include "flatcheck/ring.hpp"

#include <algorithm>
#include <set>

namespace flatcheck {

Monomial mono_one(size_t nvars) { return Monomial{std::vector<std::uint16_t>(nvars, 0)}; }

Monomial mono_var(size_t nvars, size_t i, int exp) {
    Monomial m = mono_one(nvars);
    m.e[i] = (std::uint16_t)exp;
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = (std::uint16_t)(r.e[i] + b.e[i]);
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = (std::uint16_t)(r.e[i] - a.e[i]);
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

namespace {

int cmp_lex(const std::uint16_t* a, const std::uint16_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex(const std::uint16_t* a, const std::uint16_t* b, size_t n) {
    int da = 0, db = 0;
    for (size_t i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    // equal degree: smaller exponent in the last differing variable wins
    for (size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    size_t n = a.e.size();
    switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(a.e.data(), b.e.data(), n);
        case OrderKind::Grevlex:
            return cmp_grevlex(a.e.data(), b.e.data(), n);
        case OrderKind::Block: {
            size_t off = 0;
            for (int s : blocks) {
                int c = cmp_grevlex(a.e.data() + off, b.e.data() + off, (size_t)s);
                if (c) return c;
                off += (size_t)s;
            }
            return 0;
        }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Block: {
            std::string s = "block(";
            for (size_t i = 0; i < blocks.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(blocks[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

RingPtr PolyRing::make(FieldPtr field, std::vector<std::string> vars, MonomialOrder order) {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) throw Error("duplicate variable names in ring");
    if (order.kind == OrderKind::Block) {
        size_t total = 0;
        for (int s : order.blocks) {
            if (s <= 0) throw Error("block sizes must be positive");
            total += (size_t)s;
        }
        if (total != vars.size()) throw Error("block sizes must sum to the variable count");
    }
    auto r = std::shared_ptr<PolyRing>(new PolyRing());
    r->field_ = std::move(field);
    r->vars_ = std::move(vars);
    r->order_ = std::move(order);
    return r;
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

bool PolyRing::same(const PolyRing& o) const {
    if (this == &o) return true;
    return vars_ == o.vars_ && order_ == o.order_ && field_->same(*o.field_);
}

std::string PolyRing::describe() const {
    std::string s = field_->name() + "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "] " + order_.to_string();
}

}  // namespace flatcheck
