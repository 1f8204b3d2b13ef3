#include "flatcheck/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace flatcheck {

Budget& default_budget() {
    static Budget b;
    return b;
}

// -- vec helpers ----------------------------------------------------------------

Vec vec_zero(const RingPtr& r, int rank) {
    Vec v;
    v.reserve((size_t)rank);
    for (int i = 0; i < rank; ++i) v.push_back(Polynomial::zero(r));
    return v;
}

Vec vec_unit(const RingPtr& r, int rank, int i) {
    Vec v = vec_zero(r, rank);
    v[(size_t)i] = Polynomial::from_int(r, 1);
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

int vec_lead_comp(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return (int)i;
    return -1;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r = a;
    for (auto& p : r) p = -p;
    return r;
}

Vec vec_term_mul(const Vec& v, const Monomial& m, const FVal& c) {
    Vec r = v;
    for (auto& p : r) p = p.term_mul(m, c);
    return r;
}

Vec vec_poly_mul(const Vec& v, const Polynomial& p) {
    Vec r = v;
    for (auto& q : r) q = q * p;
    return r;
}

Vec vec_scaled(const Vec& v, const FVal& c) {
    Vec r = v;
    for (auto& p : r) p = p.scaled(c);
    return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

namespace engine {

namespace {

struct LeadRef {
    int comp;
    const Term* t;  // null for the zero vector
};

LeadRef lead_of(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return {(int)i, &v[i].lead()};
    return {-1, nullptr};
}

// position-over-term: lower component wins, ties by the ring order
int pot_cmp(const MonomialOrder& ord, int ca, const Monomial& ma, int cb, const Monomial& mb) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return ord.cmp(ma, mb);
}

bool single_component(const Vec& v, int c) {
    for (size_t i = 0; i < v.size(); ++i)
        if ((int)i != c && !v[i].is_zero()) return false;
    return true;
}

RingPtr ring_of(const std::vector<Vec>& gens) {
    for (const auto& g : gens)
        for (const auto& p : g)
            return p.ring();
    return nullptr;
}

Vec make_monic(const Vec& v, const Field& F) {
    LeadRef l = lead_of(v);
    if (!l.t || F.is_one(l.t->c)) return v;
    return vec_scaled(v, F.inv(l.t->c));
}

}  // namespace

namespace {

// f -= c * x^q * g, touching only the components where g is nonzero
void reduce_step(Vec& f, const Vec& g, const Monomial& q, const FVal& c) {
    for (size_t i = 0; i < f.size(); ++i) {
        if (g[i].is_zero()) continue;
        f[i] = sub_term_mul(f[i], g[i], q, c);
    }
}

Vec normal_form_skipping(Vec f, const std::vector<Vec>& gb, int skip, const Budget& budget) {
    if (gb.empty() || vec_is_zero(f)) return f;
    const RingPtr ring = f[0].ring();  // owned copy: f is reassigned below
    Vec result = vec_zero(ring, (int)f.size());
    long steps = 0;
    while (true) {
        LeadRef lf = lead_of(f);
        if (!lf.t) break;
        if (++steps > budget.max_pairs * 8)
            throw BudgetError("reduction steps in normal form");
        bool reduced = false;
        for (size_t gi = 0; gi < gb.size(); ++gi) {
            if ((int)gi == skip) continue;
            const Vec& g = gb[gi];
            LeadRef lg = lead_of(g);
            if (lg.comp != lf.comp || !mono_divides(lg.t->m, lf.t->m)) continue;
            if (lf.t->m.deg() > budget.max_degree)
                throw BudgetError("degree growth in normal form");
            // copy out of f before mutating it
            Monomial q = mono_div(lf.t->m, lg.t->m);
            FVal c = lf.t->c;
            reduce_step(f, g, q, c);  // g has a monic lead
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the lead term to the remainder
            result[(size_t)lf.comp] =
                result[(size_t)lf.comp] + Polynomial::term(ring, lf.t->m, lf.t->c);
            f[(size_t)lf.comp] = f[(size_t)lf.comp].tail();
        }
    }
    return result;
}

}  // namespace

Vec normal_form(Vec f, const std::vector<Vec>& gb, const Budget& budget) {
    return normal_form_skipping(std::move(f), gb, -1, budget);
}

std::vector<Vec> reduced_gb(std::vector<Vec> gens, const Budget& budget) {
    // drop zero generators
    std::vector<Vec> basis;
    for (auto& g : gens)
        if (!vec_is_zero(g)) basis.push_back(std::move(g));
    if (basis.empty()) return {};
    const RingPtr ring = ring_of(basis);
    const Field& F = *ring->field();
    const MonomialOrder& ord = ring->order();
    for (auto& g : basis) g = make_monic(g, F);

    struct Pair {
        int deg;
        int i, j;
        Monomial lcm;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> pairs;
    auto add_pairs = [&](int j) {
        LeadRef lj = lead_of(basis[(size_t)j]);
        for (int i = 0; i < j; ++i) {
            LeadRef li = lead_of(basis[(size_t)i]);
            if (li.comp != lj.comp) continue;
            // product criterion, valid when both vectors live in one component
            if (mono_coprime(li.t->m, lj.t->m) &&
                single_component(basis[(size_t)i], li.comp) &&
                single_component(basis[(size_t)j], lj.comp))
                continue;
            Monomial l = mono_lcm(li.t->m, lj.t->m);
            pairs.insert(Pair{l.deg(), i, j, l});
        }
    };
    for (int j = 0; j < (int)basis.size(); ++j) add_pairs(j);

    long processed = 0;
    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++processed > budget.max_pairs) throw BudgetError("S-pair count in Buchberger");
        const Vec &u = basis[(size_t)p.i], &v = basis[(size_t)p.j];
        LeadRef lu = lead_of(u), lv = lead_of(v);
        Vec s = vec_term_mul(u, mono_div(p.lcm, lu.t->m), F.one());
        reduce_step(s, v, mono_div(p.lcm, lv.t->m), F.one());
        Vec r = normal_form(std::move(s), basis, budget);
        if (vec_is_zero(r)) continue;
        LeadRef lr = lead_of(r);
        if (lr.t->m.deg() > budget.max_degree)
            throw BudgetError("polynomial degree in Buchberger");
        basis.push_back(make_monic(r, F));
        add_pairs((int)basis.size() - 1);
    }

    // minimalize: drop vectors whose lead is divisible by another's lead
    std::vector<char> keep(basis.size(), 1);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        LeadRef li = lead_of(basis[i]);
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            LeadRef lj = lead_of(basis[j]);
            if (lj.comp == li.comp && mono_divides(lj.t->m, li.t->m)) {
                bool same_lead = lj.t->m == li.t->m;
                if (!same_lead || j < i) {  // equal leads: keep the earlier
                    keep[i] = 0;
                    break;
                }
            }
        }
    }
    std::vector<Vec> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // inter-reduce tails for the unique reduced basis
    for (size_t i = 0; i < minimal.size(); ++i)
        minimal[i] = make_monic(normal_form_skipping(minimal[i], minimal, (int)i, budget), F);
    std::sort(minimal.begin(), minimal.end(), [&](const Vec& a, const Vec& b) {
        LeadRef la = lead_of(a), lb = lead_of(b);
        return pot_cmp(ord, la.comp, la.t->m, lb.comp, lb.t->m) > 0;
    });
    return minimal;
}

std::vector<Vec> preimage(const std::vector<Vec>& cols, int k,
                          const std::vector<Vec>& target, const Budget& budget) {
    int r = (int)cols.size();
    for (const auto& c : cols)
        if ((int)c.size() != k) throw Error("preimage: column length does not match the rank");
    for (const auto& n : target)
        if ((int)n.size() != k) throw Error("preimage: target length does not match the rank");
    RingPtr ring = ring_of(cols);
    if (!ring) ring = ring_of(target);
    if (!ring) return {};
    std::vector<Vec> emb;
    emb.reserve(cols.size() + target.size());
    for (int j = 0; j < r; ++j) {
        Vec v = vec_zero(ring, k + r);
        for (int c = 0; c < k; ++c) v[(size_t)c] = cols[(size_t)j][(size_t)c];
        v[(size_t)(k + j)] = Polynomial::from_int(ring, 1);
        emb.push_back(std::move(v));
    }
    for (const auto& n : target) {
        Vec v = vec_zero(ring, k + r);
        for (int c = 0; c < k; ++c) v[(size_t)c] = n[(size_t)c];
        emb.push_back(std::move(v));
    }
    std::vector<Vec> gb = reduced_gb(std::move(emb), budget);
    std::vector<Vec> out;
    for (const auto& g : gb) {
        bool first_block_zero = true;
        for (int c = 0; c < k; ++c)
            if (!g[(size_t)c].is_zero()) {
                first_block_zero = false;
                break;
            }
        if (!first_block_zero) continue;
        Vec v(g.begin() + k, g.end());
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> syzygies(const std::vector<Vec>& gens, int rank, const Budget& budget) {
    return preimage(gens, rank, {}, budget);
}

}  // namespace engine

// -- transport -------------------------------------------------------------------

Polynomial transport(const Polynomial& p, const RingPtr& dst) {
    const RingPtr& src = p.ring();
    if (src->same(*dst)) return p;
    if (!src->field()->same(*dst->field()))
        throw RingMismatchError("transport between different coefficient fields");
    std::vector<int> where(src->nvars());
    for (size_t i = 0; i < src->nvars(); ++i) where[i] = dst->var_index(src->vars()[i]);
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m = mono_one(dst->nvars());
        for (size_t i = 0; i < src->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (where[i] < 0)
                throw RingMismatchError("variable " + src->vars()[i] +
                                        " is absent from the destination ring");
            m.e[(size_t)where[i]] = (std::uint16_t)(m.e[(size_t)where[i]] + t.m.e[i]);
        }
        ts.push_back(Term{std::move(m), t.c});
    }
    return Polynomial::from_terms(dst, std::move(ts));
}

Vec transport_vec(const Vec& v, const RingPtr& dst) {
    Vec r;
    r.reserve(v.size());
    for (const auto& p : v) r.push_back(transport(p, dst));
    return r;
}

// -- QuotientRing ------------------------------------------------------------------

QuotientRing QuotientRing::poly_ring(RingPtr ambient) {
    QuotientRing q;
    auto rep = std::make_shared<Rep>();
    rep->ambient = std::move(ambient);
    q.rep_ = std::move(rep);
    return q;
}

QuotientRing QuotientRing::make(RingPtr ambient, std::vector<Polynomial> modulus_gens,
                                const Budget& budget) {
    QuotientRing q;
    auto rep = std::make_shared<Rep>();
    std::vector<Vec> vecs;
    for (const auto& g : modulus_gens)
        if (!g.is_zero()) vecs.push_back(Vec{g});
    std::vector<Vec> gb = engine::reduced_gb(std::move(vecs), budget);
    rep->gb.reserve(gb.size());
    for (auto& v : gb) rep->gb.push_back(std::move(v[0]));
    rep->ambient = std::move(ambient);
    rep->gens = std::move(modulus_gens);
    q.rep_ = std::move(rep);
    return q;
}

const RingPtr& QuotientRing::ambient() const { return rep_->ambient; }
const std::vector<Polynomial>& QuotientRing::modulus_gens() const { return rep_->gens; }
const std::vector<Polynomial>& QuotientRing::modulus_gb() const { return rep_->gb; }
bool QuotientRing::has_modulus() const { return !rep_->gb.empty(); }

bool QuotientRing::is_trivial() const {
    return rep_->gb.size() == 1 && rep_->gb[0].is_constant();
}

Polynomial QuotientRing::nf(const Polynomial& f) const {
    if (rep_->gb.empty()) return f;
    std::vector<Vec> gb;
    gb.reserve(rep_->gb.size());
    for (const auto& g : rep_->gb) gb.push_back(Vec{g});
    return engine::normal_form(Vec{f}, gb)[0];
}

Vec QuotientRing::nf_vec(const Vec& v) const {
    Vec r = v;
    for (auto& p : r) p = nf(p);
    return r;
}

bool QuotientRing::same(const QuotientRing& o) const {
    if (rep_ == o.rep_) return true;
    if (!rep_->ambient->same(*o.rep_->ambient)) return false;
    if (rep_->gb.size() != o.rep_->gb.size()) return false;
    for (size_t i = 0; i < rep_->gb.size(); ++i)
        if (!(rep_->gb[i] == o.rep_->gb[i])) return false;
    return true;
}

std::string QuotientRing::describe() const {
    std::string s = rep_->ambient->describe();
    if (has_modulus()) {
        s += " / (";
        for (size_t i = 0; i < rep_->gb.size(); ++i) {
            if (i) s += ", ";
            s += rep_->gb[i].to_string();
        }
        s += ")";
    }
    return s;
}

std::vector<Vec> QuotientRing::modulus_rows(int rank) const {
    std::vector<Vec> rows;
    rows.reserve(rep_->gb.size() * (size_t)rank);
    for (int c = 0; c < rank; ++c)
        for (const auto& j : rep_->gb) {
            Vec v = vec_zero(rep_->ambient, rank);
            v[(size_t)c] = j;
            rows.push_back(std::move(v));
        }
    return rows;
}

}  // namespace flatcheck
