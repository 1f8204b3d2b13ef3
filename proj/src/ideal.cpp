#include <algorithm>
#include <mutex>

#include "flatcheck/groebner.hpp"

namespace flatcheck {

// -- Ideal ------------------------------------------------------------------------

struct Ideal::Cache {
    std::once_flag flag;
    std::vector<Polynomial> gb;
    std::exception_ptr err;
};

Ideal::Ideal(QuotientRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (!g.ring()->same(*ring_.ambient()))
            throw RingMismatchError("ideal generator from a different ring");
}

const std::vector<Polynomial>& Ideal::reduced_gb(const Budget& budget) const {
    std::call_once(cache_->flag, [&] {
        try {
            std::vector<Vec> vecs;
            for (const auto& g : gens_)
                if (!g.is_zero()) vecs.push_back(Vec{g});
            for (const auto& j : ring_.modulus_gb()) vecs.push_back(Vec{j});
            std::vector<Vec> gb = engine::reduced_gb(std::move(vecs), budget);
            for (auto& v : gb) cache_->gb.push_back(std::move(v[0]));
        } catch (...) {
            cache_->err = std::current_exception();
        }
    });
    if (cache_->err) std::rethrow_exception(cache_->err);
    return cache_->gb;
}

std::vector<Polynomial> Ideal::quotient_gb(const Budget& budget) const {
    std::vector<Polynomial> out;
    for (const auto& g : reduced_gb(budget))
        if (!ring_.nf(g).is_zero()) out.push_back(g);
    return out;
}

Polynomial Ideal::nf(const Polynomial& f, const Budget& budget) const {
    const auto& gb = reduced_gb(budget);
    if (gb.empty()) return f;
    std::vector<Vec> vecs;
    vecs.reserve(gb.size());
    for (const auto& g : gb) vecs.push_back(Vec{g});
    return engine::normal_form(Vec{f}, vecs, budget)[0];
}

bool Ideal::contains(const Polynomial& f, const Budget& budget) const {
    return nf(f, budget).is_zero();
}

bool Ideal::is_unit(const Budget& budget) const {
    const auto& gb = reduced_gb(budget);
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero(const Budget& budget) const {
    for (const auto& g : gens_)
        if (!ring_.nf(g).is_zero()) return false;
    (void)budget;
    return true;
}

bool Ideal::equals(const Ideal& o, const Budget& budget) const {
    if (!ring_.same(o.ring_)) return false;
    const auto &a = reduced_gb(budget), &b = o.reduced_gb(budget);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string Ideal::to_string() const {
    std::string s = "(";
    const auto& src = cache_ && !cache_->gb.empty() ? cache_->gb : gens_;
    for (size_t i = 0; i < src.size(); ++i) {
        if (i) s += ", ";
        s += src[i].to_string();
    }
    return s + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring().same(b.ring())) throw RingMismatchError("ideal sum");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring().same(b.ring())) throw RingMismatchError("ideal product");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int n) {
    if (n < 0) throw Error("negative ideal power");
    Ideal r(a.ring(), {Polynomial::from_int(a.ring().ambient(), 1)});
    for (int i = 0; i < n; ++i) r = ideal_product(r, a);
    return r;
}

namespace {

std::vector<Vec> ideal_target_rows(const Ideal& a) {
    std::vector<Vec> rows;
    for (const auto& g : a.gens())
        if (!g.is_zero()) rows.push_back(Vec{g});
    for (const auto& j : a.ring().modulus_gb()) rows.push_back(Vec{j});
    return rows;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Budget& budget) {
    if (!a.ring().same(b.ring())) throw RingMismatchError("ideal intersection");
    const RingPtr& ring = a.ring().ambient();
    // a ∩ b = preimage of (a ⊕ 0) + (0 ⊕ b) under x ↦ (x, x)
    std::vector<Vec> cols = {Vec{Polynomial::from_int(ring, 1), Polynomial::from_int(ring, 1)}};
    std::vector<Vec> target;
    for (const auto& row : ideal_target_rows(a))
        target.push_back(Vec{row[0], Polynomial::zero(ring)});
    for (const auto& row : ideal_target_rows(b))
        target.push_back(Vec{Polynomial::zero(ring), row[0]});
    std::vector<Vec> pre = engine::preimage(cols, 2, target, budget);
    std::vector<Polynomial> gens;
    for (auto& v : pre) gens.push_back(std::move(v[0]));
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_colon_poly(const Ideal& a, const Polynomial& f, const Budget& budget) {
    std::vector<Vec> cols = {Vec{f}};
    std::vector<Vec> pre = engine::preimage(cols, 1, ideal_target_rows(a), budget);
    std::vector<Polynomial> gens;
    for (auto& v : pre) gens.push_back(std::move(v[0]));
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b, const Budget& budget) {
    bool first = true;
    Ideal acc;
    for (const auto& f : b.gens()) {
        Ideal c = ideal_colon_poly(a, f, budget);
        acc = first ? c : ideal_intersection(acc, c, budget);
        first = false;
    }
    if (first) {
        // colon by the zero ideal is the unit ideal
        return Ideal(a.ring(), {Polynomial::from_int(a.ring().ambient(), 1)});
    }
    return acc;
}

Ideal ideal_saturation(const Ideal& a, const Polynomial& f, const Budget& budget) {
    Ideal cur = a;
    for (;;) {
        Ideal next = ideal_colon_poly(cur, f, budget);
        if (next.equals(cur, budget)) return cur;
        cur = next;
    }
}

Ideal ideal_eliminate(const Ideal& a, const std::vector<std::string>& vars,
                      const Budget& budget) {
    const RingPtr& src = a.ring().ambient();
    std::vector<std::string> elim, rest;
    for (const auto& v : vars) {
        if (src->var_index(v) < 0) throw Error("eliminate: unknown variable " + v);
        elim.push_back(v);
    }
    for (const auto& v : src->vars())
        if (std::find(elim.begin(), elim.end(), v) == elim.end()) rest.push_back(v);
    std::vector<std::string> scratch_vars = elim;
    scratch_vars.insert(scratch_vars.end(), rest.begin(), rest.end());
    RingPtr scratch = PolyRing::make(
        src->field(), scratch_vars,
        MonomialOrder::block({(int)elim.size(), (int)rest.size()}));
    std::vector<Vec> vecs;
    for (const auto& g : a.gens())
        if (!g.is_zero()) vecs.push_back(Vec{transport(g, scratch)});
    for (const auto& j : a.ring().modulus_gb()) vecs.push_back(Vec{transport(j, scratch)});
    std::vector<Vec> gb = engine::reduced_gb(std::move(vecs), budget);
    std::vector<Polynomial> kept;
    for (const auto& v : gb) {
        const Polynomial& g = v[0];
        bool uses_elim = false;
        for (size_t i = 0; i < elim.size() && !uses_elim; ++i)
            if (g.lead().m.e[i]) uses_elim = true;
        if (!uses_elim) kept.push_back(transport(g, src));
    }
    return Ideal(a.ring(), std::move(kept));
}

// -- SubmoduleGens -------------------------------------------------------------------

struct SubmoduleGens::Cache {
    std::once_flag flag;
    std::vector<Vec> gb;
    std::exception_ptr err;
};

SubmoduleGens::SubmoduleGens(QuotientRing ring, int rank, std::vector<Vec> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
    if (rank_ < 0) throw Error("negative ambient rank");
    for (const auto& g : gens_)
        if ((int)g.size() != rank_) throw Error("submodule generator has wrong length");
}

const std::vector<Vec>& SubmoduleGens::reduced_gb(const Budget& budget) const {
    std::call_once(cache_->flag, [&] {
        try {
            std::vector<Vec> vecs = gens_;
            auto rows = ring_.modulus_rows(rank_);
            vecs.insert(vecs.end(), rows.begin(), rows.end());
            cache_->gb = engine::reduced_gb(std::move(vecs), budget);
        } catch (...) {
            cache_->err = std::current_exception();
        }
    });
    if (cache_->err) std::rethrow_exception(cache_->err);
    return cache_->gb;
}

std::vector<Vec> SubmoduleGens::quotient_gb(const Budget& budget) const {
    std::vector<Vec> out;
    for (const auto& g : reduced_gb(budget))
        if (!vec_is_zero(ring_.nf_vec(g))) out.push_back(g);
    return out;
}

Vec SubmoduleGens::nf(const Vec& v, const Budget& budget) const {
    return engine::normal_form(v, reduced_gb(budget), budget);
}

bool SubmoduleGens::contains(const Vec& v, const Budget& budget) const {
    return vec_is_zero(nf(v, budget));
}

bool SubmoduleGens::equals(const SubmoduleGens& o, const Budget& budget) const {
    if (!ring_.same(o.ring_) || rank_ != o.rank_) return false;
    const auto &a = reduced_gb(budget), &b = o.reduced_gb(budget);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!vec_eq(a[i], b[i])) return false;
    return true;
}

bool SubmoduleGens::is_zero_submodule(const Budget& budget) const {
    (void)budget;
    for (const auto& g : gens_)
        if (!vec_is_zero(ring_.nf_vec(g))) return false;
    return true;
}

bool SubmoduleGens::is_full(const Budget& budget) const {
    for (int c = 0; c < rank_; ++c)
        if (!contains(vec_unit(ring_.ambient(), rank_, c), budget)) return false;
    return true;
}

SubmoduleGens module_sum(const SubmoduleGens& u, const SubmoduleGens& v) {
    if (!u.ring().same(v.ring()) || u.rank() != v.rank())
        throw RingMismatchError("module sum");
    std::vector<Vec> gens = u.gens();
    gens.insert(gens.end(), v.gens().begin(), v.gens().end());
    return SubmoduleGens(u.ring(), u.rank(), std::move(gens));
}

namespace {

std::vector<Vec> module_target_rows(const SubmoduleGens& u) {
    std::vector<Vec> rows;
    for (const auto& g : u.gens())
        if (!vec_is_zero(g)) rows.push_back(g);
    auto mod = u.ring().modulus_rows(u.rank());
    rows.insert(rows.end(), mod.begin(), mod.end());
    return rows;
}

}  // namespace

std::vector<Vec> module_preimage(const QuotientRing& ring, const std::vector<Vec>& cols,
                                 int k, const std::vector<Vec>& target, const Budget& budget) {
    std::vector<Vec> tgt = target;
    auto rows = ring.modulus_rows(k);
    tgt.insert(tgt.end(), rows.begin(), rows.end());
    return engine::preimage(cols, k, tgt, budget);
}

std::vector<Vec> module_syzygies(const QuotientRing& ring, int rank,
                                 const std::vector<Vec>& gens, const Budget& budget) {
    return module_preimage(ring, gens, rank, {}, budget);
}

SubmoduleGens module_intersection(const SubmoduleGens& u, const SubmoduleGens& v,
                                  const Budget& budget) {
    if (!u.ring().same(v.ring()) || u.rank() != v.rank())
        throw RingMismatchError("module intersection");
    const RingPtr& ring = u.ring().ambient();
    int r = u.rank();
    // preimage of U ⊕ V under the diagonal A^r → A^2r
    std::vector<Vec> cols;
    for (int j = 0; j < r; ++j) {
        Vec c = vec_zero(ring, 2 * r);
        c[(size_t)j] = Polynomial::from_int(ring, 1);
        c[(size_t)(r + j)] = Polynomial::from_int(ring, 1);
        cols.push_back(std::move(c));
    }
    std::vector<Vec> target;
    for (const auto& g : module_target_rows(u)) {
        Vec t = vec_zero(ring, 2 * r);
        for (int c = 0; c < r; ++c) t[(size_t)c] = g[(size_t)c];
        target.push_back(std::move(t));
    }
    for (const auto& g : module_target_rows(v)) {
        Vec t = vec_zero(ring, 2 * r);
        for (int c = 0; c < r; ++c) t[(size_t)(r + c)] = g[(size_t)c];
        target.push_back(std::move(t));
    }
    std::vector<Vec> pre = engine::preimage(cols, 2 * r, target, budget);
    return SubmoduleGens(u.ring(), r, std::move(pre));
}

SubmoduleGens module_colon_ideal(const SubmoduleGens& u, const Ideal& a, const Budget& budget) {
    if (!u.ring().same(a.ring())) throw RingMismatchError("module colon");
    const RingPtr& ring = u.ring().ambient();
    int r = u.rank();
    bool first = true;
    SubmoduleGens acc;
    for (const auto& f : a.gens()) {
        std::vector<Vec> cols;
        for (int j = 0; j < r; ++j) {
            Vec c = vec_zero(ring, r);
            c[(size_t)j] = f;
            cols.push_back(std::move(c));
        }
        std::vector<Vec> pre =
            engine::preimage(cols, r, module_target_rows(u), budget);
        SubmoduleGens s(u.ring(), r, std::move(pre));
        acc = first ? s : module_intersection(acc, s, budget);
        first = false;
    }
    if (first) {
        // colon by the zero ideal is the whole module
        std::vector<Vec> units;
        for (int c = 0; c < r; ++c) units.push_back(vec_unit(ring, r, c));
        return SubmoduleGens(u.ring(), r, std::move(units));
    }
    return acc;
}

SubmoduleGens module_saturation_elt(const SubmoduleGens& u, const Polynomial& f,
                                    const Budget& budget) {
    Ideal principal(u.ring(), {f});
    SubmoduleGens cur = u;
    for (;;) {
        SubmoduleGens next = module_colon_ideal(cur, principal, budget);
        if (next.equals(cur, budget)) return cur;
        cur = next;
    }
}

}  // namespace flatcheck
