#ifndef FLATCHECK_RING_HPP
#define FLATCHECK_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "flatcheck/field.hpp"

namespace flatcheck {

/// Exponent vector; length always equals the ambient ring's variable count.
struct Monomial {
    std::vector<std::uint16_t> e;

    int deg() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial mono_one(size_t nvars);
Monomial mono_var(size_t nvars, size_t i, int exp = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, Grevlex, Block };

/// Total multiplicative monomial order. Block orders compare consecutive
/// variable blocks left to right, grevlex within each block; they serve as
/// elimination orders for the leading blocks.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<int> blocks;  // sizes, Block only; must sum to nvars

    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::Grevlex, {}}; }
    static MonomialOrder block(std::vector<int> sizes) { return {OrderKind::Block, std::move(sizes)}; }

    // -1 if a < b, 0 if equal, 1 if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool operator==(const MonomialOrder& o) const { return kind == o.kind && blocks == o.blocks; }
    std::string to_string() const;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring over an exact field with named variables and a fixed
/// monomial order. Immutable.
class PolyRing {
public:
    static RingPtr make(FieldPtr field, std::vector<std::string> vars, MonomialOrder order);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const MonomialOrder& order() const { return order_; }
    int var_index(const std::string& name) const;  // -1 if absent

    bool same(const PolyRing& o) const;
    std::string describe() const;

private:
    PolyRing() = default;
    FieldPtr field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

}  // namespace flatcheck

#endif
