#include "flatcheck/fpmod.hpp"

#include <algorithm>

namespace flatcheck {

PresentedModule::PresentedModule(QuotientRing ring, int rank, std::vector<Vec> relations)
    : ring_(std::move(ring)), rank_(rank) {
    rels_ = SubmoduleGens(ring_, rank_, std::move(relations));
}

PresentedModule PresentedModule::free_module(QuotientRing ring, int rank) {
    return PresentedModule(std::move(ring), rank, {});
}

PresentedModule PresentedModule::ring_module(QuotientRing ring) {
    return free_module(std::move(ring), 1);
}

PresentedModule PresentedModule::cyclic(QuotientRing ring, std::vector<Polynomial> annihilator) {
    std::vector<Vec> rels;
    rels.reserve(annihilator.size());
    for (auto& f : annihilator) rels.push_back(Vec{std::move(f)});
    return PresentedModule(std::move(ring), 1, std::move(rels));
}

bool PresentedModule::is_zero(const Budget& budget) const {
    if (rank_ == 0) return true;
    return rels_.is_full(budget);
}

std::string PresentedModule::describe() const {
    std::string s = "module rank " + std::to_string(rank_) + " with " +
                    std::to_string(rels_.gens().size()) + " relations over " + ring_.describe();
    return s;
}

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n) {
    if (!m.ring().same(n.ring())) throw RingMismatchError("direct sum");
    const RingPtr& ring = m.ring().ambient();
    int r = m.rank() + n.rank();
    std::vector<Vec> rels;
    for (const auto& g : m.relation_gens()) {
        Vec v = vec_zero(ring, r);
        for (int c = 0; c < m.rank(); ++c) v[(size_t)c] = g[(size_t)c];
        rels.push_back(std::move(v));
    }
    for (const auto& g : n.relation_gens()) {
        Vec v = vec_zero(ring, r);
        for (int c = 0; c < n.rank(); ++c) v[(size_t)(m.rank() + c)] = g[(size_t)c];
        rels.push_back(std::move(v));
    }
    return PresentedModule(m.ring(), r, std::move(rels));
}

// -- ModuleMap -----------------------------------------------------------------------

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, std::vector<Vec> columns,
                     const Budget& budget)
    : source_(std::move(source)), target_(std::move(target)), cols_(std::move(columns)) {
    if (!source_.ring().same(target_.ring())) throw RingMismatchError("module map");
    if ((int)cols_.size() != source_.rank()) throw Error("module map has wrong column count");
    for (const auto& c : cols_)
        if ((int)c.size() != target_.rank()) throw Error("module map column has wrong length");
    // well-definedness: the matrix must carry source relations into target relations
    for (const auto& r : source_.relation_gens()) {
        if (!target_.relations().contains(apply(r), budget))
            throw Error("module map is not well defined on relation " + vec_to_string(r));
    }
}

ModuleMap ModuleMap::unchecked(PresentedModule source, PresentedModule target,
                               std::vector<Vec> columns) {
    ModuleMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.cols_ = std::move(columns);
    return m;
}

ModuleMap ModuleMap::identity(const PresentedModule& m) {
    std::vector<Vec> cols;
    for (int j = 0; j < m.rank(); ++j) cols.push_back(vec_unit(m.ring().ambient(), m.rank(), j));
    return ModuleMap::unchecked(m, m, std::move(cols));
}

ModuleMap ModuleMap::multiplication(const PresentedModule& m, const Polynomial& f) {
    std::vector<Vec> cols;
    for (int j = 0; j < m.rank(); ++j) {
        Vec v = vec_zero(m.ring().ambient(), m.rank());
        v[(size_t)j] = f;
        cols.push_back(std::move(v));
    }
    return ModuleMap::unchecked(m, m, std::move(cols));
}

Vec ModuleMap::apply(const Vec& v) const {
    Vec out = vec_zero(target_.ring().ambient(), target_.rank());
    for (size_t j = 0; j < cols_.size(); ++j) {
        if (v[j].is_zero()) continue;
        out = vec_add(out, vec_poly_mul(cols_[j], v[j]));
    }
    return out;
}

// -- RingMap -------------------------------------------------------------------------

RingMap::RingMap(QuotientRing source, QuotientRing target, std::vector<Polynomial> images,
                 CoeffEmbed embed, const Budget& budget)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)),
      embed_(std::move(embed)) {
    if (images_.size() != source_.ambient()->nvars())
        throw Error("ring map needs one image per source variable");
    for (const auto& j : source_.modulus_gb()) {
        if (!target_.nf(apply(j)).is_zero())
            throw Error("ring map does not respect the source modulus on " + j.to_string());
    }
    (void)budget;
}

RingMap RingMap::identity(const QuotientRing& r) {
    std::vector<Polynomial> imgs;
    for (size_t i = 0; i < r.ambient()->nvars(); ++i)
        imgs.push_back(Polynomial::variable(r.ambient(), i));
    return RingMap(r, r, std::move(imgs));
}

RingMap RingMap::compose(const RingMap& g, const RingMap& f) {
    if (!f.target().same(g.source())) throw RingMismatchError("ring map composition");
    std::vector<Polynomial> imgs;
    for (const auto& im : f.images()) imgs.push_back(g.apply(im));
    CoeffEmbed embed;
    if (f.embed_ || g.embed_) {
        RingMap gc = g, fc = f;
        embed = [gc, fc](const FVal& c) { return gc.apply(fc.embed_ ? fc.embed_(c)
                                                                    : Polynomial::constant(fc.target().ambient(), c)); };
    }
    return RingMap(f.source(), g.target(), std::move(imgs), std::move(embed));
}

bool RingMap::is_identity_shape() const {
    if (!source_.same(target_)) return false;
    for (size_t i = 0; i < images_.size(); ++i)
        if (!(images_[i] == Polynomial::variable(source_.ambient(), i))) return false;
    return true;
}

Polynomial apply_images(const Polynomial& f, const QuotientRing& target,
                        const std::vector<Polynomial>& images, const CoeffEmbed& embed) {
    const RingPtr& dst = target.ambient();
    Polynomial acc = Polynomial::zero(dst);
    for (const auto& t : f.terms()) {
        Polynomial term = embed ? embed(t.c) : Polynomial::constant(dst, t.c);
        for (size_t i = 0; i < t.m.e.size(); ++i)
            for (int k = 0; k < (int)t.m.e[i]; ++k) term = term * images[i];
        acc = acc + term;
    }
    return target.nf(acc);
}

Polynomial RingMap::apply(const Polynomial& f) const {
    return apply_images(f, target_, images_, embed_);
}

Vec RingMap::apply_vec(const Vec& v) const {
    Vec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(apply(p));
    return out;
}

// -- module operations ------------------------------------------------------------------

PresentedModule subquotient(const QuotientRing& ring, int ambient_rank,
                            const std::vector<Vec>& num, const std::vector<Vec>& den,
                            const Budget& budget) {
    std::vector<Vec> rels = module_preimage(ring, num, ambient_rank, den, budget);
    return PresentedModule(ring, (int)num.size(), std::move(rels));
}

bool subquotient_is_zero(const QuotientRing& ring, int ambient_rank,
                         const std::vector<Vec>& num, const std::vector<Vec>& den,
                         const Budget& budget) {
    SubmoduleGens d(ring, ambient_rank, den);
    for (const auto& g : num)
        if (!d.contains(g, budget)) return false;
    return true;
}

KernelResult kernel(const ModuleMap& f, const Budget& budget) {
    const QuotientRing& ring = f.source().ring();
    std::vector<Vec> pre = module_preimage(ring, f.columns(), f.target().rank(),
                                           f.target().relation_gens(), budget);
    PresentedModule k = subquotient(ring, f.source().rank(), pre,
                                    f.source().relation_gens(), budget);
    ModuleMap incl = ModuleMap::unchecked(k, f.source(), pre);
    return {std::move(k), std::move(incl)};
}

bool kernel_is_zero(const ModuleMap& f, const Budget& budget) {
    const QuotientRing& ring = f.source().ring();
    std::vector<Vec> pre = module_preimage(ring, f.columns(), f.target().rank(),
                                           f.target().relation_gens(), budget);
    return subquotient_is_zero(ring, f.source().rank(), pre, f.source().relation_gens(), budget);
}

CokerImage coker_image(const ModuleMap& f, const Budget& budget) {
    std::vector<Vec> rels = f.target().relation_gens();
    for (const auto& c : f.columns()) rels.push_back(c);
    PresentedModule coker(f.target().ring(), f.target().rank(), std::move(rels));
    // image presented on the generator images
    std::vector<Vec> img_rels = module_preimage(f.source().ring(), f.columns(),
                                                f.target().rank(),
                                                f.target().relation_gens(), budget);
    PresentedModule image(f.source().ring(), f.source().rank(), std::move(img_rels));
    return {std::move(coker), std::move(image)};
}

PresentedModule tensor(const PresentedModule& m, const PresentedModule& n, const Budget& budget) {
    if (!m.ring().same(n.ring())) throw RingMismatchError("tensor product");
    (void)budget;
    const RingPtr& ring = m.ring().ambient();
    int rank = m.rank() * n.rank();
    std::vector<Vec> rels;
    for (const auto& r : m.relation_gens())
        for (int k = 0; k < n.rank(); ++k) {
            Vec v = vec_zero(ring, rank);
            for (int i = 0; i < m.rank(); ++i) v[(size_t)(i * n.rank() + k)] = r[(size_t)i];
            rels.push_back(std::move(v));
        }
    for (const auto& s : n.relation_gens())
        for (int i = 0; i < m.rank(); ++i) {
            Vec v = vec_zero(ring, rank);
            for (int k = 0; k < n.rank(); ++k) v[(size_t)(i * n.rank() + k)] = s[(size_t)k];
            rels.push_back(std::move(v));
        }
    return PresentedModule(m.ring(), rank, std::move(rels));
}

PresentedModule base_change(const PresentedModule& m, const RingMap& f, const Budget& budget) {
    (void)budget;
    std::vector<Vec> rels;
    rels.reserve(m.relation_gens().size());
    for (const auto& r : m.relation_gens()) rels.push_back(f.apply_vec(r));
    return PresentedModule(f.target(), m.rank(), std::move(rels));
}

ModuleMap tensor_map(const ModuleMap& f, const PresentedModule& n, const Budget& budget) {
    PresentedModule src = tensor(f.source(), n, budget);
    PresentedModule tgt = tensor(f.target(), n, budget);
    const RingPtr& ring = f.source().ring().ambient();
    int nr = n.rank();
    std::vector<Vec> cols((size_t)(f.source().rank() * nr));
    for (int j = 0; j < f.source().rank(); ++j)
        for (int k = 0; k < nr; ++k) {
            Vec v = vec_zero(ring, f.target().rank() * nr);
            for (int i = 0; i < f.target().rank(); ++i)
                v[(size_t)(i * nr + k)] = f.columns()[(size_t)j][(size_t)i];
            cols[(size_t)(j * nr + k)] = std::move(v);
        }
    return ModuleMap::unchecked(std::move(src), std::move(tgt), std::move(cols));
}

Resolution free_resolution(const PresentedModule& m, int length, const Budget& budget) {
    if (length < 1) throw Error("resolution length must be at least 1");
    Resolution res;
    res.m = m;
    res.ranks.push_back(m.rank());
    std::vector<Vec> current;
    for (const auto& r : m.relation_gens())
        if (!vec_is_zero(m.ring().nf_vec(r))) current.push_back(r);
    res.maps.push_back(current);
    res.ranks.push_back((int)current.size());
    for (int i = 1; i < length; ++i) {
        if (current.empty()) {
            res.maps.push_back({});
            res.ranks.push_back(0);
            current.clear();
            continue;
        }
        // d_i columns live in A^(ranks[i-1]); their syzygies give d_{i+1}
        std::vector<Vec> syz =
            module_syzygies(m.ring(), res.ranks[(size_t)(i - 1)], current, budget);
        res.maps.push_back(syz);
        res.ranks.push_back((int)syz.size());
        current = std::move(syz);
    }
    return res;
}

bool resolution_composes_to_zero(const Resolution& r, const Budget& budget) {
    for (size_t i = 0; i + 1 < r.maps.size(); ++i) {
        const auto& d_next = r.maps[i + 1];  // F_{i+2} -> F_{i+1}
        const auto& d_cur = r.maps[i];       // F_{i+1} -> F_i
        for (const auto& col : d_next) {
            Vec img = vec_zero(r.m.ring().ambient(), r.ranks[i]);
            for (size_t j = 0; j < col.size(); ++j)
                img = vec_add(img, vec_poly_mul(d_cur[j], col[(size_t)j]));
            if (!vec_is_zero(r.m.ring().nf_vec(img))) return false;
        }
    }
    (void)budget;
    return true;
}

bool resolution_exact_at(const Resolution& r, int i, const Budget& budget) {
    // exactness at F_i for i >= 1: ker d_i subset of im d_{i+1}
    if (i < 1 || (size_t)i >= r.maps.size()) throw Error("no interior stage at that index");
    const auto& d_i = r.maps[(size_t)(i - 1)];
    std::vector<Vec> ker = module_syzygies(r.m.ring(), r.ranks[(size_t)(i - 1)], d_i, budget);
    SubmoduleGens image(r.m.ring(), r.ranks[(size_t)i], r.maps[(size_t)i]);
    for (const auto& k : ker)
        if (!image.contains(k, budget)) return false;
    return true;
}

PresentedModule quotient_by_ideal(const PresentedModule& m, const Ideal& a) {
    if (!m.ring().same(a.ring())) throw RingMismatchError("quotient by ideal");
    std::vector<Vec> rels = m.relation_gens();
    for (const auto& f : a.gens())
        for (int c = 0; c < m.rank(); ++c) {
            Vec v = vec_zero(m.ring().ambient(), m.rank());
            v[(size_t)c] = f;
            rels.push_back(std::move(v));
        }
    return PresentedModule(m.ring(), m.rank(), std::move(rels));
}

std::optional<long> k_dimension(const PresentedModule& m, long cap, const Budget& budget) {
    const auto& gb = m.relations().reduced_gb(budget);
    size_t nv = m.ring().ambient()->nvars();
    long total = 0;
    for (int c = 0; c < m.rank(); ++c) {
        std::vector<Monomial> leads;
        for (const auto& g : gb) {
            int lc = vec_lead_comp(g);
            if (lc == (int)c) leads.push_back(g[(size_t)lc].lead().m);
        }
        // finite iff every variable is bounded by a pure power among the leads
        std::vector<int> bound(nv, -1);
        bool unit_lead = false;
        for (const auto& l : leads) {
            int support = -1;
            bool pure = true;
            for (size_t i = 0; i < nv; ++i) {
                if (!l.e[i]) continue;
                if (support >= 0) { pure = false; break; }
                support = (int)i;
            }
            if (!pure) continue;
            if (support < 0) { unit_lead = true; break; }
            if (bound[(size_t)support] < 0 || l.e[(size_t)support] < bound[(size_t)support])
                bound[(size_t)support] = l.e[(size_t)support];
        }
        if (unit_lead) continue;  // the component is zero
        for (size_t i = 0; i < nv; ++i)
            if (bound[i] < 0) return std::nullopt;
        // enumerate standard monomials in the box
        std::vector<int> exp(nv, 0);
        std::function<bool(size_t)> rec = [&](size_t var) -> bool {
            if (var == nv) {
                Monomial mo = mono_one(nv);
                for (size_t i = 0; i < nv; ++i) mo.e[i] = (std::uint16_t)exp[i];
                for (const auto& l : leads)
                    if (mono_divides(l, mo)) return true;
                ++total;
                return total <= cap;
            }
            for (exp[var] = 0; exp[var] < bound[var]; ++exp[var])
                if (!rec(var + 1)) return false;
            exp[var] = 0;
            return true;
        };
        if (!rec(0)) return std::nullopt;
    }
    return total;
}

bool presentations_equivalent(const PresentedModule& a, const PresentedModule& b,
                              const Budget& budget) {
    if (!a.ring().same(b.ring()) || a.rank() != b.rank()) return false;
    return a.relations().equals(b.relations(), budget);
}

}  // namespace flatcheck
