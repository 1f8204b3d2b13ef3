#include <map>

#include "flatcheck/criteria.hpp"

namespace flatcheck {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotCheckable: return "not-checkable";
    }
    return "?";
}

bool CriterionReport::all_conditions_hold() const {
    for (const auto& c : conditions)
        if (c.verdict != Verdict::Holds) return false;
    return true;
}

bool CriterionReport::any_condition_fails() const {
    for (const auto& c : conditions)
        if (c.verdict == Verdict::Fails) return true;
    return false;
}

namespace {

// all k-subsets of {0..n-1}, lexicographic
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k < 0) return out;
    std::vector<int> cur((size_t)k);
    for (int i = 0; i < k; ++i) cur[(size_t)i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[(size_t)i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[(size_t)i];
        for (int j = i + 1; j < k; ++j) cur[(size_t)j] = cur[(size_t)j - 1] + 1;
    }
    return out;
}

struct MinorTable {
    const std::vector<Vec>& cols;  // columns, each of length rows
    RingPtr ring;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo;

    // determinant of the submatrix with the given row/column index sets
    Polynomial det(const std::vector<int>& rows, const std::vector<int>& colset) {
        if (rows.empty()) return Polynomial::from_int(ring, 1);
        std::uint32_t rm = 0, cm = 0;
        for (int r : rows) rm |= 1u << r;
        for (int c : colset) cm |= 1u << c;
        auto key = std::make_pair(rm, cm);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        // expand along the first row in the set
        Polynomial acc = Polynomial::zero(ring);
        int row = rows[0];
        std::vector<int> rest(rows.begin() + 1, rows.end());
        const Field& F = *ring->field();
        for (size_t j = 0; j < colset.size(); ++j) {
            const Polynomial& entry = cols[(size_t)colset[j]][(size_t)row];
            if (entry.is_zero()) continue;
            std::vector<int> cols_rest;
            for (size_t l = 0; l < colset.size(); ++l)
                if (l != j) cols_rest.push_back(colset[l]);
            Polynomial sub = det(rest, cols_rest);
            Polynomial term = entry * sub;
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        (void)F;
        memo.emplace(key, acc);
        return acc;
    }
};

// Fitt_i for i = 0..rank as ideals of the module's ring
std::vector<Ideal> fitting_ideals(const PresentedModule& m, const Budget& budget) {
    const QuotientRing& A = m.ring();
    const RingPtr& ring = A.ambient();
    int r = m.rank();
    std::vector<Vec> cols = m.relations().quotient_gb(budget);
    int s = (int)cols.size();
    if (r > 8 || s > 8)
        throw BudgetError("Fitting computation needs a relation matrix within 8x8 (got " +
                          std::to_string(r) + "x" + std::to_string(s) + ")");
    MinorTable table{cols, ring, {}};
    std::vector<Ideal> fitts;
    for (int i = 0; i <= r; ++i) {
        int k = r - i;  // minor size
        if (k == 0) {
            fitts.push_back(Ideal(A, {Polynomial::from_int(ring, 1)}));
            continue;
        }
        if (k > s) {
            fitts.push_back(Ideal(A, {}));
            continue;
        }
        std::vector<Polynomial> minors;
        for (const auto& rows : subsets(r, k))
            for (const auto& cs : subsets(s, k)) {
                Polynomial d = table.det(rows, cs);
                if (!A.nf(d).is_zero()) minors.push_back(d);
            }
        fitts.push_back(Ideal(A, std::move(minors)));
    }
    return fitts;
}

bool ideal_idempotent(const Ideal& a, const Budget& budget) {
    // zero and unit ideals are idempotent; catch them without basis work
    bool all_zero = true;
    for (const auto& g : a.gens()) {
        Polynomial nf = a.ring().nf(g);
        if (nf.is_zero()) continue;
        all_zero = false;
        if (nf.is_constant()) return true;
    }
    if (all_zero) return true;
    return ideal_product(a, a).equals(a, budget);
}

}  // namespace

FlatnessResult is_flat(const PresentedModule& m, const Budget& budget) {
    FlatnessResult res;
    if (m.rank() == 0) {
        res.flat = true;
        return res;
    }
    std::vector<Ideal> fitts = fitting_ideals(m, budget);
    for (int i = 0; i <= m.rank(); ++i) {
        if (!ideal_idempotent(fitts[(size_t)i], budget)) {
            res.flat = false;
            res.failing_index = i;
            std::string gens = "(";
            const auto& gb = fitts[(size_t)i].quotient_gb(budget);
            for (size_t j = 0; j < gb.size(); ++j) {
                if (j) gens += ", ";
                gens += gb[j].to_string();
            }
            res.witness = "Fitt_" + std::to_string(i) + " = " + gens + ") is not idempotent";
            return res;
        }
    }
    res.flat = true;
    return res;
}

FaithfulResult is_faithfully_flat(const PresentedModule& m, const Budget& budget) {
    FaithfulResult res;
    FlatnessResult f = is_flat(m, budget);
    res.flat = f.flat;
    if (!f.flat) {
        res.faithfully_flat = false;
        res.reason = f.witness;
        return res;
    }
    if (m.rank() == 0) {
        res.faithfully_flat = false;
        res.reason = "the zero module vanishes at every maximal ideal";
        return res;
    }
    // Fitt_0 must lie inside the nilradical; test each generator by the
    // inverse-adjunction trick
    const QuotientRing& A = m.ring();
    const RingPtr& ring = A.ambient();
    std::vector<Ideal> fitts = fitting_ideals(m, budget);
    std::vector<std::string> vars = ring->vars();
    std::string aux = "Zrad_";
    while (ring->var_index(aux) >= 0) aux += "_";
    vars.push_back(aux);
    RingPtr ext = PolyRing::make(ring->field(), vars, MonomialOrder::grevlex());
    for (const auto& g : fitts[0].quotient_gb(budget)) {
        std::vector<Polynomial> gens;
        for (const auto& j : A.modulus_gb()) gens.push_back(transport(j, ext));
        Polynomial gy = transport(g, ext) * Polynomial::variable(ext, ext->nvars() - 1);
        gens.push_back(gy - Polynomial::from_int(ext, 1));
        Ideal rad(QuotientRing::poly_ring(ext), std::move(gens));
        if (!rad.is_unit(budget)) {
            res.faithfully_flat = false;
            res.reason = "Fitt_0 generator " + g.to_string() + " is not nilpotent";
            return res;
        }
    }
    res.faithfully_flat = true;
    return res;
}

PurityResult is_pure_into_flat(const ModuleMap& phi, bool check_injective, const Budget& budget) {
    FlatnessResult target_flat = is_flat(phi.target(), budget);
    if (!target_flat.flat)
        throw UnsupportedError("purity criterion needs a flat target: " + target_flat.witness);
    PurityResult res;
    if (check_injective) {
        res.injective = kernel_is_zero(phi, budget);
        if (!res.injective) {
            KernelResult k = kernel(phi, budget);
            for (const auto& col : k.inclusion.columns()) {
                Vec v = phi.source().ring().nf_vec(col);
                if (!vec_is_zero(v)) {
                    res.witness = "kernel contains " + vec_to_string(v);
                    break;
                }
            }
            res.pure = false;  // a non-injective map is never pure
            return res;
        }
    } else {
        res.injective = true;
    }
    CokerImage ci = coker_image(phi, budget);
    FlatnessResult cf = is_flat(ci.cokernel, budget);
    res.pure = cf.flat;
    if (!cf.flat) res.witness = "cokernel not flat: " + cf.witness;
    return res;
}

}  // namespace flatcheck
