#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "flatcheck/criteria.hpp"

namespace flatcheck {

namespace {

Verdict vb(bool b) { return b ? Verdict::Holds : Verdict::Fails; }

void add_primes(CriterionReport& rep, const PrimeList& primes) {
    for (const auto& p : primes.primes)
        rep.primes.push_back(PrimeEntry{p.to_string(), cert_name(p.cert)});
    rep.primes_complete = primes.complete;
}

std::vector<Polynomial> mapped_ideal_gens(const RingMap& f, const PrimeIdeal& p) {
    std::vector<Polynomial> out;
    for (const auto& g : p.ideal.gens()) {
        Polynomial img = f.apply(g);
        if (!img.is_zero()) out.push_back(img);
    }
    return out;
}

// A/pA as a cyclic module over the target of f
PresentedModule quotient_module_at(const RingMap& f, const PrimeIdeal& p) {
    return PresentedModule::cyclic(f.target(), mapped_ideal_gens(f, p));
}

bool any_bounded(const CriterionReport& rep) {
    for (const auto& c : rep.conditions)
        if (c.bounded) return true;
    return false;
}

// necessity direction always; sufficiency only on complete, exact runs
void finalize(CriterionReport& rep, bool oracle_known, bool oracle_value,
              bool sufficient_on_complete) {
    if (!oracle_known) {
        rep.consistency = "oracle unavailable";
        return;
    }
    if (oracle_value) {
        for (const auto& c : rep.conditions)
            if (c.verdict == Verdict::Fails && c.necessary_for_flat)
                throw ConsistencyError(rep.id + ": conclusion holds but necessary condition '" +
                                       c.name + "' fails (witness: " + c.witness + ")");
    }
    if (sufficient_on_complete && rep.primes_complete && !any_bounded(rep) &&
        rep.all_conditions_hold() && !oracle_value)
        throw ConsistencyError(rep.id +
                               ": all conditions hold on a complete prime list but the "
                               "conclusion fails (" + rep.conclusion + ")");
    rep.consistency = rep.primes_complete
                          ? "consistent"
                          : "consistent (incomplete prime list; conclusions are consistency "
                            "checks, not proofs)";
}

// Per-prime checks are independent pure computations; run them on a small
// worker pool and assemble results in index order. Exceptions rethrow by
// lowest index for determinism.
template <typename Fn>
void for_each_index(size_t n, Fn&& fn) {
    unsigned hw = std::getenv("FLATCHECK_SERIAL") ? 1 : std::thread::hardware_concurrency();
    if (hw < 2 || n < 4) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errs(n);
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(hw, 8);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace

// -- fibers -----------------------------------------------------------------------

int base_variable_index(const RingMap& f) {
    const QuotientRing& R = f.source();
    if (R.ambient()->nvars() == 0) return -1;
    if (R.ambient()->nvars() != 1)
        throw UnsupportedError("base rings must be fields or univariate quotients");
    const Polynomial& img = f.images()[0];
    const RingPtr& ring = f.target().ambient();
    if (img.size() == 1 && img.lead().m.deg() == 1 && ring->field()->is_one(img.lead().c))
        for (size_t i = 0; i < ring->nvars(); ++i)
            if (img.lead().m.e[i] == 1) return (int)i;
    throw UnsupportedError("the base variable must map to an ambient variable of the target");
}

Fiber fiber_of(const RingMap& f, const PrimeIdeal& p, const Budget& budget) {
    const QuotientRing& A = f.target();
    const QuotientRing& R = f.source();
    if (R.ambient()->nvars() == 0)
        return Fiber{A, RingMap::identity(A)};

    int v = base_variable_index(f);
    ResidueField rf = residue_field(p, budget);
    const RingPtr& amb = A.ambient();
    std::vector<std::string> vars;
    for (size_t i = 0; i < amb->nvars(); ++i)
        if ((int)i != v) vars.push_back(amb->vars()[i]);
    RingPtr fiber_amb = PolyRing::make(rf.field, vars, MonomialOrder::grevlex());

    const FieldPtr& k = amb->field();
    CoeffEmbed embed;
    if (!rf.field->same(*k)) {
        FieldPtr K = rf.field;
        embed = [K, fiber_amb](const FVal& c) {
            return Polynomial::constant(fiber_amb, K->embed_base(c));
        };
    }
    // the value of the base variable inside the residue field
    FVal tval = rf.projection.images()[0].is_zero()
                    ? rf.field->zero()
                    : rf.projection.images()[0].lead().c;

    std::vector<Polynomial> images;
    for (size_t i = 0; i < amb->nvars(); ++i) {
        if ((int)i == v)
            images.push_back(Polynomial::constant(fiber_amb, tval));
        else
            images.push_back(Polynomial::variable(fiber_amb, (size_t)fiber_amb->var_index(amb->vars()[i])));
    }
    QuotientRing plain = QuotientRing::poly_ring(fiber_amb);
    std::vector<Polynomial> mod_imgs;
    for (const auto& j : A.modulus_gb()) {
        Polynomial img = apply_images(j, plain, images, embed);
        if (!img.is_zero()) mod_imgs.push_back(img);
    }
    QuotientRing fiber_ring = QuotientRing::make(fiber_amb, std::move(mod_imgs), budget);
    return Fiber{fiber_ring, RingMap(A, fiber_ring, std::move(images), std::move(embed), budget)};
}

Ideal kernel_of_ring_map(const RingMap& f, const Budget& budget) {
    const QuotientRing& R = f.source();
    const QuotientRing& A = f.target();
    if (!R.ambient()->field()->same(*A.ambient()->field()))
        throw UnsupportedError("ring map kernels need a shared coefficient field");
    size_t nt = A.ambient()->nvars(), ns = R.ambient()->nvars();
    std::vector<std::string> vars = A.ambient()->vars();
    std::vector<std::string> src_names;
    for (size_t i = 0; i < ns; ++i) {
        std::string nm = "Wsrc" + std::to_string(i) + "_";
        while (std::find(vars.begin(), vars.end(), nm) != vars.end()) nm += "_";
        vars.push_back(nm);
        src_names.push_back(nm);
    }
    RingPtr C = PolyRing::make(A.ambient()->field(), vars,
                               MonomialOrder::block({(int)nt, (int)ns}));
    std::vector<Vec> gens;
    for (const auto& j : A.modulus_gb()) gens.push_back(Vec{transport(j, C)});
    for (size_t i = 0; i < ns; ++i) {
        Polynomial graph = Polynomial::variable(C, nt + i) - transport(f.images()[i], C);
        gens.push_back(Vec{graph});
    }
    for (const auto& j : R.modulus_gb()) {
        // rewrite the source modulus in the renamed variables
        std::vector<Term> ts;
        for (const auto& t : j.terms()) {
            Monomial m = mono_one(C->nvars());
            for (size_t i = 0; i < ns; ++i) m.e[nt + i] = t.m.e[i];
            ts.push_back(Term{std::move(m), t.c});
        }
        gens.push_back(Vec{Polynomial::from_terms(C, std::move(ts))});
    }
    std::vector<Vec> gb = engine::reduced_gb(std::move(gens), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool uses_target = false;
        for (size_t i = 0; i < nt && !uses_target; ++i)
            if (g[0].lead().m.e[i]) uses_target = true;
        if (uses_target) continue;
        // back to the source ambient by position
        std::vector<Term> ts;
        for (const auto& t : g[0].terms()) {
            Monomial m = mono_one(ns);
            for (size_t i = 0; i < ns; ++i) m.e[i] = t.m.e[nt + i];
            ts.push_back(Term{std::move(m), t.c});
        }
        kept.push_back(Polynomial::from_terms(R.ambient(), std::move(ts)));
    }
    return Ideal(R, std::move(kept));
}

// -- local criterion ---------------------------------------------------------------

CriterionReport check_local_criterion(const Ideal& a, const PresentedModule& m, int n_max,
                                      const Budget& budget) {
    if (!a.ring().same(m.ring())) throw RingMismatchError("local criterion");
    const QuotientRing& A = m.ring();
    const RingPtr& amb = A.ambient();
    CriterionReport rep;
    rep.id = "local-criterion";

    FlatnessResult oracle = is_flat(m, budget);
    rep.conclusion = oracle.flat ? "flat" : "not flat";
    rep.conclusion_flag = oracle.flat;
    rep.conditions.push_back(
        ConditionReport{"module flat (oracle)", vb(oracle.flat), oracle.witness, "", false, false, -1});

    // multiplication a (x) M -> M injective, i.e. Tor_1(A/a, M) = 0, plus
    // flatness of M/aM over A/a
    PresentedModule a_cyc = PresentedModule::cyclic(A, a.gens());
    TorResult t1 = tor(1, a_cyc, m, budget, false);
    std::vector<Polynomial> amod = A.modulus_gens();
    for (const auto& g : a.gens()) amod.push_back(g);
    QuotientRing Aa = QuotientRing::make(amb, amod, budget);
    RingMap qmap(A, Aa, [&] {
        std::vector<Polynomial> imgs;
        for (size_t i = 0; i < amb->nvars(); ++i) imgs.push_back(Polynomial::variable(amb, i));
        return imgs;
    }(), nullptr, budget);
    PresentedModule m0 = base_change(m, qmap, budget);
    FlatnessResult f0 = is_flat(m0, budget);
    bool cond3 = t1.zero && f0.flat;
    rep.conditions.push_back(ConditionReport{
        "multiplication injective and quotient flat", vb(cond3),
        cond3 ? "" : (!t1.zero ? "Tor_1(A/a, M) != 0" : f0.witness), "", false, true, -1});

    // power quotients
    for (int n = 2; n <= n_max; ++n) {
        Ideal an = ideal_power(a, n);
        std::vector<Polynomial> gens = A.modulus_gens();
        for (const auto& g : an.gens()) gens.push_back(g);
        QuotientRing An = QuotientRing::make(amb, gens, budget);
        RingMap qn(A, An, [&] {
            std::vector<Polynomial> imgs;
            for (size_t i = 0; i < amb->nvars(); ++i) imgs.push_back(Polynomial::variable(amb, i));
            return imgs;
        }(), nullptr, budget);
        FlatnessResult fn = is_flat(base_change(m, qn, budget), budget);
        rep.conditions.push_back(ConditionReport{
            "power quotient flat at n=" + std::to_string(n), vb(fn.flat), fn.witness,
            "bounded check", true, true, -1});
    }

    // graded multiplication injective in degrees 1..n_max
    PresentedModule m_mod_a = base_change(m0, RingMap::identity(Aa), budget);
    for (int n = 1; n <= n_max; ++n) {
        PresentedModule grA = base_change(graded_piece(a, n, PresentedModule::ring_module(A), budget), qmap, budget);
        PresentedModule grM = base_change(graded_piece(a, n, m, budget), qmap, budget);
        PresentedModule dom = tensor(grA, m_mod_a, budget);
        if (dom.rank() != grM.rank())
            throw Error("graded piece generator indexing mismatch");
        std::vector<Vec> cols;
        for (int j = 0; j < dom.rank(); ++j)
            cols.push_back(vec_unit(Aa.ambient(), grM.rank(), j));
        ModuleMap gamma(dom, grM, std::move(cols), budget);
        KernelResult k = kernel(gamma, budget);
        bool inj = k.module.is_zero(budget);
        rep.conditions.push_back(ConditionReport{
            "graded multiplication injective at degree " + std::to_string(n), vb(inj),
            inj ? "" : "kernel nonzero in degree " + std::to_string(n), "bounded check", true,
            true, -1});
    }

    finalize(rep, true, oracle.flat, false);
    return rep;
}

CriterionReport check_local_powers(const Ideal& a, const PresentedModule& m, int n_max,
                                   const std::vector<PresentedModule>& sample_modules,
                                   const Budget& budget) {
    if (!a.ring().same(m.ring())) throw RingMismatchError("local powers");
    const QuotientRing& A = m.ring();
    const RingPtr& amb = A.ambient();
    CriterionReport rep;
    rep.id = "local-powers";

    auto identity_images = [&] {
        std::vector<Polynomial> imgs;
        for (size_t i = 0; i < amb->nvars(); ++i) imgs.push_back(Polynomial::variable(amb, i));
        return imgs;
    };

    PresentedModule a_cyc = PresentedModule::cyclic(A, a.gens());
    TorResult t1 = tor(1, a_cyc, m, budget, false);
    std::vector<Polynomial> amod = A.modulus_gens();
    for (const auto& g : a.gens()) amod.push_back(g);
    QuotientRing Aa = QuotientRing::make(amb, amod, budget);
    RingMap qmap(A, Aa, identity_images(), nullptr, budget);
    FlatnessResult f0 = is_flat(base_change(m, qmap, budget), budget);
    bool hyps = t1.zero && f0.flat;
    rep.conditions.push_back(ConditionReport{
        "hypotheses: Tor_1(A/a, M) = 0 and M/aM flat", vb(hyps),
        hyps ? "" : (!t1.zero ? "Tor_1(A/a, M) != 0" : f0.witness), "", false, false, -1});

    if (!hyps) {
        for (int n = 2; n <= n_max; ++n)
            rep.conditions.push_back(ConditionReport{
                "consequent: power quotient flat at n=" + std::to_string(n),
                Verdict::NotCheckable, "", "hypotheses fail; consequent skipped", false, false, -1});
        rep.conclusion = "hypotheses fail";
        rep.consistency = "consistent";
        return rep;
    }

    bool all_ok = true;
    for (int n = 2; n <= n_max; ++n) {
        Ideal an = ideal_power(a, n);
        std::vector<Polynomial> gens = A.modulus_gens();
        for (const auto& g : an.gens()) gens.push_back(g);
        QuotientRing An = QuotientRing::make(amb, gens, budget);
        RingMap qn(A, An, identity_images(), nullptr, budget);
        FlatnessResult fn = is_flat(base_change(m, qn, budget), budget);
        all_ok = all_ok && fn.flat;
        rep.conditions.push_back(ConditionReport{
            "consequent: power quotient flat at n=" + std::to_string(n), vb(fn.flat),
            fn.witness, "", false, false, -1});
    }
    int idx = 0;
    for (const auto& n_mod : sample_modules) {
        ++idx;
        // certify the sample is annihilated by a power of a
        int kill = -1;
        for (int k = 1; k <= n_max && kill < 0; ++k) {
            Ideal ak = ideal_power(a, k);
            bool killed = true;
            for (const auto& g : ak.gens()) {
                for (int c = 0; c < n_mod.rank() && killed; ++c) {
                    Vec v = vec_zero(amb, n_mod.rank());
                    v[(size_t)c] = g;
                    if (!n_mod.relations().contains(v, budget)) killed = false;
                }
                if (!killed) break;
            }
            if (killed) kill = k;
        }
        if (kill < 0) {
            rep.conditions.push_back(ConditionReport{
                "consequent: Tor_1(M, sample " + std::to_string(idx) + ") = 0",
                Verdict::NotCheckable, "",
                "sample is not visibly annihilated by a power of a within n_max", false, false, -1});
            continue;
        }
        TorResult tn = tor(1, m, n_mod, budget, false);
        all_ok = all_ok && tn.zero;
        rep.conditions.push_back(ConditionReport{
            "consequent: Tor_1(M, sample " + std::to_string(idx) + ") = 0 (killed by a^" +
                std::to_string(kill) + ")",
            vb(tn.zero), tn.zero ? "" : "Tor_1 nonzero", "", false, false, -1});
    }
    rep.conclusion = all_ok ? "consequents hold" : "consequent failed";
    rep.conclusion_flag = all_ok;
    if (!all_ok)
        throw ConsistencyError(
            "local-powers: hypotheses hold exactly but a consequent fails; this "
            "contradicts the statement and indicates an engine defect");
    rep.consistency = "consistent";
    return rep;
}

// -- fiber criteria -----------------------------------------------------------------

CriterionReport check_flat_base_fibers(const RingMap& f, const PresentedModule& m,
                                       const PrimeList& primes,
                                       const std::optional<PresentedModule>& m_over_base,
                                       const Budget& budget) {
    const QuotientRing& R = f.source();
    CriterionReport rep;
    rep.id = "flat-base-fibers";
    add_primes(rep, primes);
    bool base_field = R.ambient()->nvars() == 0 || ring_is_field(R);
    bool surrogate_bounded = !primes.complete;

    // algebra flat over the base
    bool algebra_surrogate = false, module_surrogate = false;
    if (base_field) {
        rep.conditions.push_back(ConditionReport{
            "algebra flat over base", Verdict::Holds, "", "base is a field", false, false, -1});
    } else if (f.is_identity_shape()) {
        rep.conditions.push_back(ConditionReport{
            "algebra flat over base", Verdict::Holds, "", "identity map", false, false, -1});
    } else {
        algebra_surrogate = true;
    }

    // module flat over the base
    if (m_over_base) {
        FlatnessResult fr = is_flat(*m_over_base, budget);
        rep.conditions.push_back(ConditionReport{
            "module flat over base", vb(fr.flat), fr.witness,
            "explicit base-side presentation", false, false, -1});
    } else if (base_field) {
        rep.conditions.push_back(ConditionReport{
            "module flat over base", Verdict::Holds, "", "base is a field", false, false, -1});
    } else if (f.is_identity_shape()) {
        FlatnessResult fr = is_flat(m, budget);
        rep.conditions.push_back(ConditionReport{
            "module flat over base", vb(fr.flat), fr.witness, "identity base map", false, false, -1});
    } else {
        module_surrogate = true;
    }

    // per-prime work: base surrogates where needed, fiber flatness always
    PresentedModule a_mod = PresentedModule::ring_module(f.target());
    std::vector<std::vector<ConditionReport>> slots(primes.primes.size());
    for_each_index(primes.primes.size(), [&](size_t i) {
        const PrimeIdeal& p = primes.primes[i];
        std::vector<ConditionReport>& out = slots[i];
        if (algebra_surrogate && !p.is_zero_ideal()) {
            TorResult t = tor1_over_base(f, p.ideal.gens()[0], a_mod, budget, false);
            out.push_back(ConditionReport{
                "algebra flat over base (surrogate at " + p.to_string() + ")", vb(t.zero),
                t.zero ? "" : "base Tor_1 nonzero on the algebra",
                "surrogate: Tor_1 over the base at the enumerated prime", surrogate_bounded,
                false, (int)i});
        }
        if (module_surrogate && !p.is_zero_ideal()) {
            TorResult t = tor1_over_base(f, p.ideal.gens()[0], m, budget, false);
            out.push_back(ConditionReport{
                "module flat over base (surrogate at " + p.to_string() + ")", vb(t.zero),
                t.zero ? "" : "base Tor_1 nonzero on the module",
                "surrogate: Tor_1 over the base at the enumerated prime", surrogate_bounded,
                false, (int)i});
        }
        Fiber fib = fiber_of(f, p, budget);
        FlatnessResult fr = is_flat(base_change(m, fib.to_fiber, budget), budget);
        out.push_back(ConditionReport{
            "fiber flat at " + p.to_string(), vb(fr.flat), fr.witness, "", false, true, (int)i});
    });
    for (auto& s : slots)
        for (auto& c : s) rep.conditions.push_back(std::move(c));

    FlatnessResult oracle = is_flat(m, budget);
    rep.conclusion = oracle.flat ? "flat" : "not flat";
    rep.conclusion_flag = oracle.flat;
    finalize(rep, true, oracle.flat, true);
    return rep;
}

CriterionReport check_tor_fibers(const RingMap& f, const PresentedModule& m,
                                 const PrimeList& primes, const Budget& budget) {
    const QuotientRing& R = f.source();
    CriterionReport rep;
    rep.id = "tor-fibers";
    add_primes(rep, primes);

    std::vector<std::vector<ConditionReport>> slots(primes.primes.size());
    for_each_index(primes.primes.size(), [&](size_t i) {
        const PrimeIdeal& p = primes.primes[i];
        std::vector<ConditionReport>& out = slots[i];
        PresentedModule quot = quotient_module_at(f, p);
        TorResult t1 = tor(1, quot, m, budget, false);
        out.push_back(ConditionReport{
            "tor vanishing at " + p.to_string(), vb(t1.zero),
            t1.zero ? "" : "Tor_1(A/pA, M) != 0", "", false, true, (int)i});

        // torsionfree quotient clause
        if (!p.is_zero_ideal() || R.ambient()->nvars() == 0 || ring_is_field(R)) {
            // the reduced base is a field, so the quotient is already torsionfree
            out.push_back(ConditionReport{
                "torsionfree tor vanishing at " + p.to_string(), vb(t1.zero),
                t1.zero ? "" : "Tor_1((A/pA)_tf, M) != 0",
                "base residue ring is a field; torsionfree part equals the quotient", false,
                true, (int)i});
        } else {
            TorsionDecomposition td = torsion_decompose(quot, f, budget);
            TorResult ttf = tor(1, td.torsionfree, m, budget, false);
            out.push_back(ConditionReport{
                "torsionfree tor vanishing at " + p.to_string(), vb(ttf.zero),
                ttf.zero ? "" : "Tor_1((A/pA)_tf, M) != 0", "", false, true, (int)i});
        }

        Fiber fib = fiber_of(f, p, budget);
        FlatnessResult fr = is_flat(base_change(m, fib.to_fiber, budget), budget);
        out.push_back(ConditionReport{
            "fiber flat at " + p.to_string(), vb(fr.flat), fr.witness, "", false, true, (int)i});
    });
    for (auto& s : slots)
        for (auto& c : s) rep.conditions.push_back(std::move(c));

    FlatnessResult oracle = is_flat(m, budget);
    rep.conclusion = oracle.flat ? "flat" : "not flat";
    rep.conclusion_flag = oracle.flat;
    finalize(rep, true, oracle.flat, true);
    return rep;
}

CriterionReport check_ideal_tor_fibers(const RingMap& f, const PresentedModule& m,
                                       const std::vector<Ideal>& ideal_corpus,
                                       const PrimeList& primes, bool with_torsionfree,
                                       const Budget& budget) {
    CriterionReport rep;
    rep.id = "ideal-tor-fibers";
    add_primes(rep, primes);

    for (size_t li = 0; li < ideal_corpus.size(); ++li) {
        const Ideal& l = ideal_corpus[li];
        std::vector<Polynomial> imgs;
        for (const auto& g : l.gens()) {
            Polynomial img = f.apply(g);
            if (!img.is_zero()) imgs.push_back(img);
        }
        PresentedModule quot = PresentedModule::cyclic(f.target(), imgs);
        TorResult t1 = tor(1, quot, m, budget, false);
        rep.conditions.push_back(ConditionReport{
            "ideal tor vanishing at corpus ideal #" + std::to_string(li + 1), vb(t1.zero),
            t1.zero ? "" : "Tor_1(A/lA, M) != 0 for l = " + l.to_string(),
            "bounded: finite ideal corpus stands in for all ideals", true, true, -1});
    }

    for (size_t i = 0; i < primes.primes.size(); ++i) {
        const PrimeIdeal& p = primes.primes[i];
        Fiber fib = fiber_of(f, p, budget);
        FlatnessResult fr = is_flat(base_change(m, fib.to_fiber, budget), budget);
        rep.conditions.push_back(ConditionReport{
            "fiber flat at " + p.to_string(), vb(fr.flat), fr.witness, "", false, true, (int)i});
        if (with_torsionfree) {
            PresentedModule quot = quotient_module_at(f, p);
            const QuotientRing& R = f.source();
            if (!p.is_zero_ideal() || R.ambient()->nvars() == 0 || ring_is_field(R)) {
                TorResult t1 = tor(1, quot, m, budget, false);
                rep.conditions.push_back(ConditionReport{
                    "torsionfree tor vanishing at " + p.to_string(), vb(t1.zero),
                    t1.zero ? "" : "Tor_1((A/pA)_tf, M) != 0",
                    "base residue ring is a field", false, true, (int)i});
            } else {
                TorsionDecomposition td = torsion_decompose(quot, f, budget);
                TorResult ttf = tor(1, td.torsionfree, m, budget, false);
                rep.conditions.push_back(ConditionReport{
                    "torsionfree tor vanishing at " + p.to_string(), vb(ttf.zero),
                    ttf.zero ? "" : "Tor_1((A/pA)_tf, M) != 0", "", false, true, (int)i});
            }
        }
    }
    rep.conditions.push_back(ConditionReport{
        "target noetherian", Verdict::Holds, "",
        "all engine rings are finitely presented over fields", false, false, -1});

    FlatnessResult oracle = is_flat(m, budget);
    rep.conclusion = oracle.flat ? "flat" : "not flat";
    rep.conclusion_flag = oracle.flat;
    finalize(rep, true, oracle.flat, true);
    return rep;
}

CriterionReport check_element_slice(const Polynomial& z, const PresentedModule& m,
                                    const std::vector<PresentedModule>& sample_modules,
                                    int tor_index_max, const Budget& budget) {
    const QuotientRing& A = m.ring();
    const RingPtr& amb = A.ambient();
    CriterionReport rep;
    rep.id = "element-slice";

    PresentedModule z_cyc = PresentedModule::cyclic(A, {z});
    TorResult t1 = tor(1, z_cyc, m, budget, false);
    std::vector<Polynomial> zmod = A.modulus_gens();
    zmod.push_back(z);
    QuotientRing Az = QuotientRing::make(amb, zmod, budget);
    std::vector<Polynomial> imgs;
    for (size_t i = 0; i < amb->nvars(); ++i) imgs.push_back(Polynomial::variable(amb, i));
    RingMap qmap(A, Az, std::move(imgs), nullptr, budget);
    FlatnessResult f0 = is_flat(base_change(m, qmap, budget), budget);
    bool hyps = t1.zero && f0.flat;
    rep.conditions.push_back(ConditionReport{
        "hypotheses: Tor_1(M, A/zA) = 0 and M/zM flat over A/zA", vb(hyps),
        hyps ? "" : (!t1.zero ? "Tor_1(M, A/zA) != 0" : f0.witness), "", false, false, -1});
    if (!hyps) {
        rep.conclusion = "hypotheses fail";
        rep.consistency = "consistent";
        for (size_t s = 0; s < sample_modules.size(); ++s)
            rep.conditions.push_back(ConditionReport{
                "consequent: Tor vanishing on sample " + std::to_string(s + 1),
                Verdict::NotCheckable, "", "hypotheses fail; consequent skipped", false, false, -1});
        return rep;
    }

    bool all_ok = true;
    for (size_t s = 0; s < sample_modules.size(); ++s) {
        const PresentedModule& n_mod = sample_modules[s];
        bool killed = true;
        for (int c = 0; c < n_mod.rank() && killed; ++c) {
            Vec v = vec_zero(amb, n_mod.rank());
            v[(size_t)c] = z;
            if (!n_mod.relations().contains(v, budget)) killed = false;
        }
        if (!killed) {
            rep.conditions.push_back(ConditionReport{
                "consequent: Tor vanishing on sample " + std::to_string(s + 1),
                Verdict::NotCheckable, "", "sample is not annihilated by z", false, false, -1});
            continue;
        }
        for (int i = 1; i <= tor_index_max; ++i) {
            TorResult ti = tor(i, m, n_mod, budget, false);
            all_ok = all_ok && ti.zero;
            rep.conditions.push_back(ConditionReport{
                "consequent: Tor_" + std::to_string(i) + "(M, sample " + std::to_string(s + 1) +
                    ") = 0",
                vb(ti.zero), ti.zero ? "" : "Tor nonzero", "", false, false, -1});
        }
    }
    rep.conclusion = all_ok ? "consequents hold" : "consequent failed";
    rep.conclusion_flag = all_ok;
    if (!all_ok)
        throw ConsistencyError(
            "element-slice: hypotheses hold exactly but a consequent fails; engine defect");
    rep.consistency = "consistent";
    return rep;
}

// -- purity -----------------------------------------------------------------------

namespace {

ModuleMap map_mod_ideal(const ModuleMap& phi, const Ideal& I) {
    PresentedModule src = quotient_by_ideal(phi.source(), I);
    PresentedModule tgt = quotient_by_ideal(phi.target(), I);
    return ModuleMap::unchecked(std::move(src), std::move(tgt), phi.columns());
}

ModuleMap fiber_map(const Fiber& fib, const ModuleMap& phi, const Budget& budget) {
    PresentedModule src = base_change(phi.source(), fib.to_fiber, budget);
    PresentedModule tgt = base_change(phi.target(), fib.to_fiber, budget);
    std::vector<Vec> cols;
    for (const auto& c : phi.columns()) cols.push_back(fib.to_fiber.apply_vec(c));
    return ModuleMap::unchecked(std::move(src), std::move(tgt), std::move(cols));
}

std::string injectivity_witness(const ModuleMap& phi, const Budget& budget) {
    KernelResult k = kernel(phi, budget);
    for (const auto& col : k.inclusion.columns()) {
        Vec v = phi.source().ring().nf_vec(col);
        if (!vec_is_zero(v)) return "kernel contains " + vec_to_string(v);
    }
    return "kernel nonzero";
}

}  // namespace

CriterionReport check_pure_fibers(const RingMap& f, const ModuleMap& phi,
                                  const PrimeList& primes, const Budget& budget) {
    const QuotientRing& A = f.target();
    if (!A.same(phi.source().ring())) throw RingMismatchError("pure fibers");
    CriterionReport rep;
    rep.id = "pure-fibers";
    add_primes(rep, primes);
    const QuotientRing& R = f.source();

    for (size_t i = 0; i < primes.primes.size(); ++i) {
        const PrimeIdeal& p = primes.primes[i];
        Ideal pA(A, mapped_ideal_gens(f, p));
        ModuleMap phi_p = map_mod_ideal(phi, pA);
        bool inj1 = kernel_is_zero(phi_p, budget);
        rep.conditions.push_back(ConditionReport{
            "quotient map injective at " + p.to_string(), vb(inj1),
            inj1 ? "" : injectivity_witness(phi_p, budget), "", false, true, (int)i});

        if (!p.is_zero_ideal() || R.ambient()->nvars() == 0 || ring_is_field(R)) {
            rep.conditions.push_back(ConditionReport{
                "torsionfree quotient map injective at " + p.to_string(), vb(inj1),
                inj1 ? "" : "kernel nonzero",
                "base residue ring is a field; torsionfree part equals the quotient", false,
                true, (int)i});
        } else {
            PresentedModule quot = quotient_module_at(f, p);
            TorsionDecomposition td = torsion_decompose(quot, f, budget);
            std::vector<Polynomial> tf_gens;
            for (const auto& v : td.torsion_numerator)
                if (!v[0].is_zero()) tf_gens.push_back(v[0]);
            for (const auto& g : pA.gens()) tf_gens.push_back(g);
            Ideal Q(A, std::move(tf_gens));
            ModuleMap phi_tf = map_mod_ideal(phi, Q);
            bool inj2 = kernel_is_zero(phi_tf, budget);
            rep.conditions.push_back(ConditionReport{
                "torsionfree quotient map injective at " + p.to_string(), vb(inj2),
                inj2 ? "" : injectivity_witness(phi_tf, budget), "", false, true, (int)i});
        }

        Fiber fib = fiber_of(f, p, budget);
        ModuleMap phi_fib = fiber_map(fib, phi, budget);
        try {
            PurityResult pr = is_pure_into_flat(phi_fib, true, budget);
            rep.conditions.push_back(ConditionReport{
                "fiber map pure at " + p.to_string(), vb(pr.pure), pr.witness, "", false, true,
                (int)i});
        } catch (const UnsupportedError& e) {
            rep.conditions.push_back(ConditionReport{
                "fiber map pure at " + p.to_string(), Verdict::NotCheckable, "", e.what(),
                false, false, (int)i});
        }
    }

    PurityResult oracle = is_pure_into_flat(phi, true, budget);
    rep.conclusion = oracle.pure ? "pure" : "not pure";
    rep.conclusion_flag = oracle.pure;
    finalize(rep, true, oracle.pure, true);
    return rep;
}

CriterionReport check_pure_over_base(const ModuleMap& phi, const PrimeList& primes,
                                     const Budget& budget) {
    const QuotientRing& R = phi.source().ring();
    CriterionReport rep;
    rep.id = "pure-base";
    add_primes(rep, primes);
    RingMap id = RingMap::identity(R);

    for (size_t i = 0; i < primes.primes.size(); ++i) {
        const PrimeIdeal& p = primes.primes[i];
        // torsionfreeness of M/pM over R/p
        if (!p.is_zero_ideal() || R.ambient()->nvars() == 0 || ring_is_field(R)) {
            rep.conditions.push_back(ConditionReport{
                "quotient torsionfree at " + p.to_string(), Verdict::Holds, "",
                "base residue ring is a field", false, true, (int)i});
        } else {
            TorsionDecomposition td = torsion_decompose(phi.source(), id, budget);
            bool tfree = td.torsion.is_zero(budget);
            rep.conditions.push_back(ConditionReport{
                "quotient torsionfree at " + p.to_string(), vb(tfree),
                tfree ? "" : "torsion submodule nonzero", "", false, true, (int)i});
        }
        Fiber fib = fiber_of(id, p, budget);
        ModuleMap phi_fib = fiber_map(fib, phi, budget);
        bool inj = kernel_is_zero(phi_fib, budget);
        rep.conditions.push_back(ConditionReport{
            "fiber map injective at " + p.to_string(), vb(inj),
            inj ? "" : injectivity_witness(phi_fib, budget), "", false, true, (int)i});
    }

    PurityResult oracle = is_pure_into_flat(phi, true, budget);
    rep.conclusion = oracle.pure ? "pure" : "not pure";
    rep.conclusion_flag = oracle.pure;
    finalize(rep, true, oracle.pure, true);
    return rep;
}

CriterionReport check_group_purity(const RingMap& f_sharp,
                                   const std::optional<GroupAlgebraModel>& model,
                                   const PrimeList& base_primes, const Budget& budget) {
    CriterionReport rep;
    rep.id = "group-purity";
    add_primes(rep, base_primes);

    bool v1_known = false, v1 = false, v3_known = false, v3 = false;
    if (model) {
        FaithfulResult ff = is_faithfully_flat(model->algebra_as_module, budget);
        v1_known = true;
        v1 = ff.faithfully_flat;
        rep.conditions.push_back(ConditionReport{
            "target algebra faithfully flat as a module", vb(v1), ff.reason,
            "user-supplied module model", false, false, -1});
    } else {
        rep.conditions.push_back(ConditionReport{
            "target algebra faithfully flat as a module", Verdict::NotCheckable, "",
            "no finite module presentation of the target over the source supplied", false,
            false, -1});
    }

    // fiberwise faithful flatness; over a field this reduces to injectivity of
    // the algebra map by the classical subalgebra theorem
    bool v2 = true, v2_known = true;
    for (size_t i = 0; i < base_primes.primes.size(); ++i) {
        const PrimeIdeal& p = base_primes.primes[i];
        if (!(p.ideal.ring().ambient()->nvars() == 0 || ring_is_field(p.ideal.ring()))) {
            rep.conditions.push_back(ConditionReport{
                "fiber faithfully flat at " + p.to_string(), Verdict::NotCheckable, "",
                "only field bases are supported for group fiber checks", false, false, (int)i});
            v2_known = false;
            continue;
        }
        Ideal ker = kernel_of_ring_map(f_sharp, budget);
        bool inj = ker.is_zero(budget);
        std::string wit;
        if (!inj)
            for (const auto& g : ker.quotient_gb(budget)) {
                wit = "kernel contains " + g.to_string();
                break;
            }
        rep.conditions.push_back(ConditionReport{
            "fiber faithfully flat at " + p.to_string(), vb(inj), wit,
            "over a field: faithful flatness of a group-algebra map reduces to injectivity",
            false, false, (int)i});
        v2 = v2 && inj;
    }

    if (model) {
        try {
            PurityResult pr = is_pure_into_flat(model->unit, true, budget);
            v3_known = true;
            v3 = pr.pure;
            rep.conditions.push_back(ConditionReport{
                "algebra map pure", vb(v3), pr.witness, "", false, false, -1});
        } catch (const UnsupportedError& e) {
            rep.conditions.push_back(ConditionReport{
                "algebra map pure", Verdict::NotCheckable, "", e.what(), false, false, -1});
        }
    } else {
        rep.conditions.push_back(ConditionReport{
            "algebra map pure", Verdict::NotCheckable, "",
            "no finite module presentation of the target over the source supplied", false,
            false, -1});
    }

    // the three clauses are equivalent; report and cross-check
    bool all_known = v1_known && v2_known && v3_known;
    if (all_known) {
        bool agree = (v1 == v2) && (v2 == v3);
        rep.conclusion = v1 ? "faithfully flat (equivalently pure)" : "not faithfully flat (not pure)";
        rep.conclusion_flag = v1;
        if (!agree && rep.primes_complete)
            throw ConsistencyError("group-purity: the three clauses disagree on a complete base list");
        rep.consistency = agree ? "consistent (all clauses agree)" : "clauses disagree on an incomplete list";
    } else {
        bool some = (v1_known && v1) || (v2_known && v2 && !base_primes.primes.empty());
        rep.conclusion = v2_known ? (v2 ? "fiberwise faithfully flat" : "not fiberwise faithfully flat")
                                  : "undetermined";
        rep.conclusion_flag = some;
        rep.consistency = "partially checkable";
    }
    return rep;
}

}  // namespace flatcheck
