#include "flatcheck/homology.hpp"

#include <algorithm>
#include <map>

#include "flatcheck/spectra.hpp"

namespace flatcheck {

namespace {

// columns of d (x) id_c, target free rank b over a module with c generators
std::vector<Vec> kron_cols(const std::vector<Vec>& dcols, int b, int c, const RingPtr& ring) {
    std::vector<Vec> cols;
    cols.reserve(dcols.size() * (size_t)c);
    for (const auto& col : dcols)
        for (int k = 0; k < c; ++k) {
            Vec v = vec_zero(ring, b * c);
            for (int i = 0; i < b; ++i) v[(size_t)(i * c + k)] = col[(size_t)i];
            cols.push_back(std::move(v));
        }
    return cols;
}

// relations of F (x) N for F free of rank b: b shifted copies of N's relations
std::vector<Vec> copies_of_relations(const PresentedModule& n, int b, const RingPtr& ring) {
    std::vector<Vec> rels;
    int c = n.rank();
    for (int i = 0; i < b; ++i)
        for (const auto& s : n.relation_gens()) {
            Vec v = vec_zero(ring, b * c);
            for (int k = 0; k < c; ++k) v[(size_t)(i * c + k)] = s[(size_t)k];
            rels.push_back(std::move(v));
        }
    return rels;
}

}  // namespace

TorResult tor(int i, const PresentedModule& m, const PresentedModule& n, const Budget& budget,
              bool with_presentation) {
    if (!m.ring().same(n.ring())) throw RingMismatchError("tor");
    if (i < 0) throw Error("negative Tor index");
    if (i == 0) {
        PresentedModule t = tensor(m, n, budget);
        bool z = t.is_zero(budget);
        return {0, std::move(t), z};
    }
    const QuotientRing& A = m.ring();
    const RingPtr& ring = A.ambient();
    Resolution res = free_resolution(m, i + 1, budget);
    int c = n.rank();
    int b_i = res.ranks[(size_t)i];
    if (b_i == 0 || c == 0)
        return {i, PresentedModule(A, 0, {}), true};
    int b_prev = res.ranks[(size_t)(i - 1)];

    // kernel numerator of d_i (x) 1 inside F_i (x) N
    std::vector<Vec> di_cols = kron_cols(res.maps[(size_t)(i - 1)], b_prev, c, ring);
    std::vector<Vec> target_rels = copies_of_relations(n, b_prev, ring);
    std::vector<Vec> ker = module_preimage(A, di_cols, b_prev * c, target_rels, budget);

    // image of d_{i+1} (x) 1 plus the relations of F_i (x) N
    std::vector<Vec> den = copies_of_relations(n, b_i, ring);
    for (auto& v : kron_cols(res.maps[(size_t)i], b_i, c, ring)) den.push_back(std::move(v));

    bool z = subquotient_is_zero(A, b_i * c, ker, den, budget);
    if (!with_presentation)
        return {i, PresentedModule(A, 0, {}), z};
    PresentedModule h = subquotient(A, b_i * c, ker, den, budget);
    return {i, std::move(h), z};
}

PresentedModule graded_piece(const Ideal& a, int n, const PresentedModule& m,
                             const Budget& budget) {
    if (!a.ring().same(m.ring())) throw RingMismatchError("graded piece");
    if (n < 0) throw Error("negative graded index");
    const RingPtr& ring = m.ring().ambient();
    Ideal an = ideal_power(a, n);
    Ideal an1 = ideal_product(an, a);
    std::vector<Vec> num;
    for (const auto& f : an.gens())
        for (int c = 0; c < m.rank(); ++c) {
            Vec v = vec_zero(ring, m.rank());
            v[(size_t)c] = f;
            num.push_back(std::move(v));
        }
    std::vector<Vec> den = m.relation_gens();
    for (const auto& f : an1.gens())
        for (int c = 0; c < m.rank(); ++c) {
            Vec v = vec_zero(ring, m.rank());
            v[(size_t)c] = f;
            den.push_back(std::move(v));
        }
    return subquotient(m.ring(), m.rank(), num, den, budget);
}

namespace {

// leading coefficient of g with respect to the non-base variables, as a
// polynomial in the base variable alone
Polynomial x_lead_coefficient(const Vec& g, int base_var, const RingPtr& ring) {
    int lc = vec_lead_comp(g);
    const Monomial& lead = g[(size_t)lc].lead().m;
    std::vector<Term> ts;
    for (const auto& t : g[(size_t)lc].terms()) {
        bool same_x = true;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if ((int)i == base_var) continue;
            if (t.m.e[i] != lead.e[i]) { same_x = false; break; }
        }
        if (same_x) {
            Monomial mo = mono_one(ring->nvars());
            mo.e[(size_t)base_var] = t.m.e[(size_t)base_var];
            ts.push_back(Term{std::move(mo), t.c});
        }
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace

TorsionDecomposition torsion_decompose(const PresentedModule& n, const RingMap& f,
                                       const Budget& budget) {
    const QuotientRing& R = f.source();
    const QuotientRing& A = f.target();
    if (!A.same(n.ring())) throw RingMismatchError("torsion base map targets a different ring");
    const RingPtr& ring = A.ambient();

    if (R.ambient()->nvars() == 0 || ring_is_field(R)) {
        TorsionDecomposition d;
        d.torsion = PresentedModule(A, 0, {});
        d.torsionfree = n;
        d.witness = Polynomial::from_int(ring, 1);
        return d;
    }
    if (R.ambient()->nvars() != 1 || R.has_modulus())
        throw UnsupportedError("torsion base must be a field or a univariate polynomial ring over one");

    // the base variable must be an ambient variable of A
    const Polynomial& img = f.images()[0];
    int base_var = -1;
    if (img.size() == 1 && img.lead().m.deg() == 1 &&
        ring->field()->is_one(img.lead().c)) {
        for (size_t i = 0; i < ring->nvars(); ++i)
            if (img.lead().m.e[i] == 1) base_var = (int)i;
    }
    if (base_var < 0)
        throw UnsupportedError("torsion base variable must map to an ambient variable");

    // product-order GB with the base variable last: simultaneously a GB of the
    // relations over Frac(R), so saturating by the x-leading coefficients
    // computes the contraction exactly
    std::vector<std::string> scratch_vars;
    for (size_t i = 0; i < ring->nvars(); ++i)
        if ((int)i != base_var) scratch_vars.push_back(ring->vars()[i]);
    scratch_vars.push_back(ring->vars()[(size_t)base_var]);
    RingPtr scratch = PolyRing::make(
        ring->field(), scratch_vars,
        scratch_vars.size() == 1
            ? MonomialOrder::grevlex()
            : MonomialOrder::block({(int)scratch_vars.size() - 1, 1}));

    std::vector<Vec> rows;
    for (const auto& g : n.relation_gens()) rows.push_back(transport_vec(g, scratch));
    for (const auto& g : A.modulus_rows(n.rank())) rows.push_back(transport_vec(g, scratch));
    std::vector<Vec> gb = engine::reduced_gb(std::move(rows), budget);

    int scratch_base = (int)scratch->nvars() - 1;
    Polynomial h = Polynomial::from_int(ring, 1);
    std::vector<Polynomial> seen;
    for (const auto& g : gb) {
        Polynomial lc = transport(x_lead_coefficient(g, scratch_base, scratch), ring);
        if (lc.is_constant()) continue;
        bool dup = false;
        for (const auto& s : seen)
            if (s == lc.monic()) { dup = true; break; }
        if (!dup) {
            seen.push_back(lc.monic());
            h = h * lc.monic();
        }
    }

    SubmoduleGens rels(A, n.rank(), n.relation_gens());
    SubmoduleGens sat = h.is_constant() ? rels : module_saturation_elt(rels, h, budget);

    TorsionDecomposition d;
    std::vector<Vec> num = sat.quotient_gb(budget);
    d.torsion_numerator = num;
    d.torsion = subquotient(A, n.rank(), num, n.relation_gens(), budget);
    d.torsionfree = PresentedModule(A, n.rank(), num);
    // smallest power of h killing every numerator generator back into the relations
    int e = 0;
    Polynomial he = Polynomial::from_int(ring, 1);
    for (;;) {
        bool all_in = true;
        for (const auto& g : num)
            if (!rels.contains(vec_poly_mul(g, he), budget)) { all_in = false; break; }
        if (all_in) break;
        if (++e > 64) throw BudgetError("torsion witness exponent");
        he = he * h;
    }
    d.witness = he;
    return d;
}

namespace {

// exact univariate division in a one-variable polynomial ring
Polynomial poly_div_exact_univar(const Polynomial& a, const Polynomial& b) {
    const RingPtr& ring = a.ring();
    const Field& F = *ring->field();
    Polynomial r = a, q = Polynomial::zero(ring);
    while (!r.is_zero() && r.lead().m.e[0] >= b.lead().m.e[0]) {
        Monomial mo = mono_div(r.lead().m, b.lead().m);
        FVal c = F.div(r.lead().c, b.lead().c);
        Polynomial t = Polynomial::term(ring, mo, c);
        q = q + t;
        r = r - b * t;
    }
    if (!r.is_zero()) throw Error("inexact univariate division");
    return q;
}

}  // namespace

TorResult tor1_over_base(const RingMap& f, const Polynomial& base_elt,
                         const PresentedModule& x, const Budget& budget,
                         bool with_presentation) {
    const QuotientRing& R = f.source();
    if (base_elt.is_zero()) return {1, PresentedModule(x.ring(), 0, {}), true};
    Polynomial g_img = f.apply(base_elt);
    ModuleMap mult = ModuleMap::multiplication(x, g_img);
    if (!R.has_modulus()) {
        // domain base: koszul resolution of R/(g), Tor_1 is the kernel of g
        if (!with_presentation) {
            bool z = kernel_is_zero(mult, budget);
            return {1, PresentedModule(x.ring(), 0, {}), z};
        }
        KernelResult k = kernel(mult, budget);
        bool z = k.module.is_zero(budget);
        return {1, std::move(k.module), z};
    }
    // base k[t]/(m): Tor_1 = ker(.g) / im(.(m/g)) on x
    KernelResult k = kernel(mult, budget);
    const Polynomial& m_mod = R.modulus_gb()[0];
    Polynomial u = poly_div_exact_univar(m_mod, base_elt);
    Polynomial u_img = f.apply(u);
    std::vector<Vec> num = k.inclusion.columns();
    std::vector<Vec> den = x.relation_gens();
    for (int c = 0; c < x.rank(); ++c) {
        Vec v = vec_zero(x.ring().ambient(), x.rank());
        v[(size_t)c] = u_img;
        den.push_back(std::move(v));
    }
    bool z = subquotient_is_zero(x.ring(), x.rank(), num, den, budget);
    if (!with_presentation) return {1, PresentedModule(x.ring(), 0, {}), z};
    PresentedModule h = subquotient(x.ring(), x.rank(), num, den, budget);
    return {1, std::move(h), z};
}

}  // namespace flatcheck
