#include "flatcheck/document.hpp"

#include <algorithm>
#include <ctime>
#include <map>
#include <sstream>

#include <json.hpp>

namespace flatcheck {

using json = nlohmann::ordered_json;

namespace {

json report_to_json(const CriterionReport& rep) {
    json j;
    j["theorem_id"] = rep.id;
    json hyps = json::array();
    for (const auto& c : rep.conditions) {
        json h;
        h["name"] = c.name;
        h["verdict"] = verdict_name(c.verdict);
        if (!c.witness.empty()) h["witness"] = c.witness;
        if (!c.note.empty()) h["note"] = c.note;
        if (c.bounded) h["bounded"] = true;
        hyps.push_back(std::move(h));
    }
    j["hypotheses"] = std::move(hyps);
    json primes = json::array();
    for (const auto& p : rep.primes) {
        json e;
        e["ideal"] = p.ideal_text;
        e["certificate"] = p.certificate;
        e["complete"] = rep.primes_complete;
        primes.push_back(std::move(e));
    }
    j["primes"] = std::move(primes);
    j["conclusion"] = rep.conclusion;
    j["consistency"] = rep.consistency;
    return j;
}

void render_report_text(std::ostream& os, const CriterionReport& rep) {
    os << "criterion: " << rep.id << "\n";
    for (const auto& c : rep.conditions) {
        os << "  [" << verdict_name(c.verdict) << "] " << c.name;
        if (!c.witness.empty()) os << "  -- witness: " << c.witness;
        if (c.bounded) os << "  (bounded)";
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    if (!rep.primes.empty()) {
        os << "  primes (" << (rep.primes_complete ? "complete" : "incomplete") << "):";
        for (const auto& p : rep.primes) os << " " << p.ideal_text;
        os << "\n";
    }
    os << "  conclusion: " << rep.conclusion << "\n";
    os << "  consistency: " << rep.consistency << "\n";
}

struct Workspace {
    FieldPtr field;
    std::map<std::string, QuotientRing> rings;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, PresentedModule> modules;
    std::map<std::string, ModuleMap> maps;
    std::map<std::string, RingMap> ringmaps;

    const QuotientRing& ring(const std::string& n) const {
        auto it = rings.find(n);
        if (it == rings.end()) throw Error("unknown ring '" + n + "'");
        return it->second;
    }
    const Ideal& ideal(const std::string& n) const {
        auto it = ideals.find(n);
        if (it == ideals.end()) throw Error("unknown ideal '" + n + "'");
        return it->second;
    }
    const PresentedModule& module_(const std::string& n) const {
        auto it = modules.find(n);
        if (it == modules.end()) throw Error("unknown module '" + n + "'");
        return it->second;
    }
    const ModuleMap& map_(const std::string& n) const {
        auto it = maps.find(n);
        if (it == maps.end()) throw Error("unknown map '" + n + "'");
        return it->second;
    }
    const RingMap& ringmap(const std::string& n) const {
        auto it = ringmaps.find(n);
        if (it == ringmaps.end()) throw Error("unknown ring map '" + n + "'");
        return it->second;
    }
};

MonomialOrder parse_order(const json& j, const std::string& fallback) {
    if (j.is_null()) {
        if (fallback == "lex") return MonomialOrder::lex();
        return MonomialOrder::grevlex();
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "lex") return MonomialOrder::lex();
        if (s == "grevlex") return MonomialOrder::grevlex();
        throw Error("unknown order '" + s + "'");
    }
    if (j.is_object() && j.contains("block"))
        return MonomialOrder::block(j["block"].get<std::vector<int>>());
    throw Error("bad order specification");
}

FieldPtr parse_field(const json& j, const RunOptions& opts) {
    if (j.is_null()) {
        if (opts.default_field == "q") return Field::rationals();
        return Field::prime_field(opts.default_p);
    }
    std::string kind = j.value("kind", "fp");
    if (kind == "q" || kind == "rationals") return Field::rationals();
    if (kind == "fp") return Field::prime_field(j.value("p", opts.default_p));
    throw Error("unknown field kind '" + kind + "'");
}

Workspace build_workspace(const json& doc, const RunOptions& opts, const Budget& budget) {
    Workspace ws;
    ws.field = parse_field(doc.contains("field") ? doc["field"] : json(), opts);

    // first pass: names only, so dangling references fail before any computation
    std::vector<std::string> ring_names;
    if (doc.contains("rings"))
        for (const auto& r : doc["rings"]) ring_names.push_back(r.at("name").get<std::string>());
    auto known_ring = [&](const std::string& n) {
        return std::find(ring_names.begin(), ring_names.end(), n) != ring_names.end();
    };
    if (doc.contains("rings"))
        for (const auto& r : doc["rings"])
            if (r.contains("ambient") && !known_ring(r["ambient"].get<std::string>()))
                throw Error("ring '" + r.at("name").get<std::string>() +
                            "' references unknown ambient '" + r["ambient"].get<std::string>() + "'");

    if (doc.contains("rings")) {
        for (const auto& r : doc["rings"]) {
            std::string name = r.at("name").get<std::string>();
            RingPtr amb;
            if (r.contains("ambient")) {
                amb = ws.ring(r["ambient"].get<std::string>()).ambient();
            } else {
                std::vector<std::string> vars = r.at("vars").get<std::vector<std::string>>();
                amb = PolyRing::make(ws.field, vars,
                                     parse_order(r.contains("order") ? r["order"] : json(),
                                                 opts.default_order));
            }
            std::vector<Polynomial> mod;
            if (r.contains("modulus"))
                for (const auto& s : r["modulus"])
                    mod.push_back(parse_polynomial(amb, s.get<std::string>()));
            ws.rings.emplace(name, mod.empty() ? QuotientRing::poly_ring(amb)
                                               : QuotientRing::make(amb, std::move(mod), budget));
        }
    }
    if (doc.contains("ideals")) {
        for (const auto& d : doc["ideals"]) {
            const QuotientRing& ring = ws.ring(d.at("ring").get<std::string>());
            std::vector<Polynomial> gens;
            for (const auto& s : d.at("gens"))
                gens.push_back(parse_polynomial(ring.ambient(), s.get<std::string>()));
            ws.ideals.emplace(d.at("name").get<std::string>(), Ideal(ring, std::move(gens)));
        }
    }
    if (doc.contains("modules")) {
        for (const auto& d : doc["modules"]) {
            const QuotientRing& ring = ws.ring(d.at("ring").get<std::string>());
            int rank = d.at("rank").get<int>();
            std::vector<Vec> rels;
            if (d.contains("relations"))
                for (const auto& row : d["relations"]) {
                    if ((int)row.size() != rank)
                        throw Error("relation length does not match the rank");
                    Vec v;
                    for (const auto& s : row)
                        v.push_back(parse_polynomial(ring.ambient(), s.get<std::string>()));
                    rels.push_back(std::move(v));
                }
            ws.modules.emplace(d.at("name").get<std::string>(),
                               PresentedModule(ring, rank, std::move(rels)));
        }
    }
    if (doc.contains("ringmaps")) {
        for (const auto& d : doc["ringmaps"]) {
            const QuotientRing& src = ws.ring(d.at("source").get<std::string>());
            const QuotientRing& tgt = ws.ring(d.at("target").get<std::string>());
            std::vector<Polynomial> images;
            for (const auto& s : d.at("images"))
                images.push_back(parse_polynomial(tgt.ambient(), s.get<std::string>()));
            ws.ringmaps.emplace(d.at("name").get<std::string>(),
                                RingMap(src, tgt, std::move(images), nullptr, budget));
        }
    }
    if (doc.contains("maps")) {
        for (const auto& d : doc["maps"]) {
            const PresentedModule& src = ws.module_(d.at("source").get<std::string>());
            const PresentedModule& tgt = ws.module_(d.at("target").get<std::string>());
            const auto& rows = d.at("matrix");
            if ((int)rows.size() != tgt.rank()) throw Error("matrix row count must equal the target rank");
            std::vector<Vec> cols((size_t)src.rank(), vec_zero(tgt.ring().ambient(), tgt.rank()));
            for (int i = 0; i < tgt.rank(); ++i) {
                if ((int)rows[(size_t)i].size() != src.rank())
                    throw Error("matrix column count must equal the source rank");
                for (int j = 0; j < src.rank(); ++j)
                    cols[(size_t)j][(size_t)i] =
                        parse_polynomial(tgt.ring().ambient(), rows[(size_t)i][(size_t)j].get<std::string>());
            }
            ws.maps.emplace(d.at("name").get<std::string>(),
                            ModuleMap(src, tgt, std::move(cols), budget));
        }
    }
    return ws;
}

struct TaskOutcome {
    int exit_code = 0;
    json result;
    std::string text;
};

int report_exit(const CriterionReport& rep) { return rep.any_condition_fails() ? 2 : 0; }

TaskOutcome run_task(const json& doc, Workspace& ws, const RunOptions& opts,
                     const Budget& budget) {
    const json& task = doc.at("task");
    std::string kind = task.at("kind").get<std::string>();
    TaskOutcome out;
    std::ostringstream text;

    auto enumerate_for = [&](const QuotientRing& r) {
        int bound = task.value("degree_bound", opts.degree_bound);
        return enumerate_primes(r, bound, budget);
    };

    if (kind == "gb") {
        if (task.contains("ideal")) {
            const Ideal& I = ws.ideal(task["ideal"].get<std::string>());
            json basis = json::array();
            text << "reduced groebner basis:\n";
            for (const auto& g : I.reduced_gb(budget)) {
                basis.push_back(g.to_string());
                text << "  " << g.to_string() << "\n";
            }
            out.result["basis"] = std::move(basis);
        } else {
            const PresentedModule& M = ws.module_(task.at("module").get<std::string>());
            json basis = json::array();
            text << "reduced module groebner basis:\n";
            for (const auto& g : M.relations().reduced_gb(budget)) {
                basis.push_back(vec_to_string(g));
                text << "  " << vec_to_string(g) << "\n";
            }
            out.result["basis"] = std::move(basis);
        }
    } else if (kind == "tor") {
        int i = task.value("i", 1);
        TorResult t = tor(i, ws.module_(task.at("left").get<std::string>()),
                          ws.module_(task.at("right").get<std::string>()), budget);
        out.result["index"] = i;
        out.result["zero"] = t.zero;
        out.result["presentation_rank"] = t.module.rank();
        auto dim = k_dimension(t.module, 100000, budget);
        if (dim) out.result["k_dimension"] = *dim;
        text << "Tor_" << i << " is " << (t.zero ? "zero" : "nonzero") << "\n";
        if (dim) text << "  k-dimension: " << *dim << "\n";
    } else if (kind == "torsion") {
        TorsionDecomposition td =
            torsion_decompose(ws.module_(task.at("module").get<std::string>()),
                              ws.ringmap(task.at("ringmap").get<std::string>()), budget);
        bool tz = td.torsion.is_zero(budget);
        out.result["torsion_zero"] = tz;
        out.result["witness"] = td.witness.to_string();
        json gens = json::array();
        for (const auto& v : td.torsion_numerator) gens.push_back(vec_to_string(v));
        out.result["torsion_generators"] = std::move(gens);
        text << "torsion submodule is " << (tz ? "zero" : "nonzero") << "; witness "
             << td.witness.to_string() << "\n";
        for (const auto& v : td.torsion_numerator) text << "  " << vec_to_string(v) << "\n";
    } else if (kind == "isflat") {
        const PresentedModule& M = ws.module_(task.at("module").get<std::string>());
        if (task.value("faithful", false)) {
            FaithfulResult r = is_faithfully_flat(M, budget);
            out.result["flat"] = r.flat;
            out.result["faithfully_flat"] = r.faithfully_flat;
            if (!r.reason.empty()) out.result["witness"] = r.reason;
            text << "verdict: " << (r.faithfully_flat ? "faithfully flat" : "not faithfully flat");
            if (!r.reason.empty()) text << "  -- " << r.reason;
            text << "\n";
            out.exit_code = r.faithfully_flat ? 0 : 2;
        } else {
            FlatnessResult r = is_flat(M, budget);
            out.result["flat"] = r.flat;
            if (!r.witness.empty()) out.result["witness"] = r.witness;
            text << "verdict: " << (r.flat ? "flat" : "not flat");
            if (!r.witness.empty()) text << "  -- " << r.witness;
            text << "\n";
            out.exit_code = r.flat ? 0 : 2;
        }
    } else if (kind == "ispure") {
        PurityResult r = is_pure_into_flat(ws.map_(task.at("map").get<std::string>()), true, budget);
        out.result["injective"] = r.injective;
        out.result["pure"] = r.pure;
        if (!r.witness.empty()) out.result["witness"] = r.witness;
        text << "verdict: " << (r.pure ? "pure" : "not pure");
        if (!r.witness.empty()) text << "  -- " << r.witness;
        text << "\n";
        out.exit_code = r.pure ? 0 : 2;
    } else if (kind == "fibercheck" || kind == "validate") {
        std::string id = task.at("id").get<std::string>();
        CriterionReport rep;
        if (id == "flat-base-fibers") {
            const RingMap& f = ws.ringmap(task.at("ringmap").get<std::string>());
            std::optional<PresentedModule> over_base;
            if (task.contains("module_over_base"))
                over_base = ws.module_(task["module_over_base"].get<std::string>());
            rep = check_flat_base_fibers(f, ws.module_(task.at("module").get<std::string>()),
                                         enumerate_for(f.source()), over_base, budget);
        } else if (id == "tor-fibers") {
            const RingMap& f = ws.ringmap(task.at("ringmap").get<std::string>());
            rep = check_tor_fibers(f, ws.module_(task.at("module").get<std::string>()),
                                   enumerate_for(f.source()), budget);
        } else if (id == "ideal-tor-fibers") {
            const RingMap& f = ws.ringmap(task.at("ringmap").get<std::string>());
            std::vector<Ideal> corpus;
            if (task.contains("ideals"))
                for (const auto& n : task["ideals"]) corpus.push_back(ws.ideal(n.get<std::string>()));
            rep = check_ideal_tor_fibers(f, ws.module_(task.at("module").get<std::string>()), corpus,
                                         enumerate_for(f.source()),
                                         task.value("torsionfree", false), budget);
        } else if (id == "pure-fibers") {
            const RingMap& f = ws.ringmap(task.at("ringmap").get<std::string>());
            rep = check_pure_fibers(f, ws.map_(task.at("map").get<std::string>()),
                                    enumerate_for(f.source()), budget);
        } else if (id == "pure-base") {
            const ModuleMap& phi = ws.map_(task.at("map").get<std::string>());
            rep = check_pure_over_base(phi, enumerate_for(phi.source().ring()), budget);
        } else if (id == "group-purity") {
            const RingMap& f = ws.ringmap(task.at("ringmap").get<std::string>());
            std::optional<GroupAlgebraModel> model;
            if (task.contains("model"))
                model = GroupAlgebraModel{
                    ws.module_(task["model"].at("module").get<std::string>()),
                    ws.map_(task["model"].at("unit").get<std::string>())};
            PrimeList base;
            if (task.contains("base"))
                base = enumerate_for(ws.ring(task["base"].get<std::string>()));
            else {
                RingPtr kamb = PolyRing::make(ws.field, {}, MonomialOrder::grevlex());
                base = enumerate_primes(QuotientRing::poly_ring(kamb), 0, budget);
            }
            rep = check_group_purity(f, model, base, budget);
        } else if (id == "local-criterion") {
            rep = check_local_criterion(ws.ideal(task.at("ideal").get<std::string>()),
                                        ws.module_(task.at("module").get<std::string>()),
                                        task.value("nmax", opts.nmax), budget);
        } else if (id == "local-powers") {
            std::vector<PresentedModule> samples;
            if (task.contains("samples"))
                for (const auto& n : task["samples"]) samples.push_back(ws.module_(n.get<std::string>()));
            rep = check_local_powers(ws.ideal(task.at("ideal").get<std::string>()),
                                     ws.module_(task.at("module").get<std::string>()),
                                     task.value("nmax", opts.nmax), samples, budget);
        } else if (id == "element-slice") {
            const PresentedModule& M = ws.module_(task.at("module").get<std::string>());
            Polynomial z = parse_polynomial(M.ring().ambient(), task.at("element").get<std::string>());
            std::vector<PresentedModule> samples;
            if (task.contains("samples"))
                for (const auto& n : task["samples"]) samples.push_back(ws.module_(n.get<std::string>()));
            rep = check_element_slice(z, M, samples, task.value("tor_max", 2), budget);
        } else {
            throw Error("unknown criterion id '" + id + "'");
        }
        out.result = report_to_json(rep);
        render_report_text(text, rep);
        out.exit_code = report_exit(rep);
    } else if (kind == "counterexample") {
        int d = task.value("d", 4);
        ChainExample ex = make_chain_example(d, ws.field->kind() == FieldKind::PrimeField
                                                    ? ws.field->prime()
                                                    : 101,
                                             budget);
        ClaimResult a = check_colon_stability(ex, budget);
        ClaimResult b = check_torsion_identification(ex, budget);
        BoundaryResult c = check_mod_t_collapse(ex, budget);
        ClaimResult dd = check_tor_obstruction(ex, budget);
        PrimeList primes = enumerate_primes(ex.R, task.value("degree_bound", opts.degree_bound), budget);
        CriterionReport audit = audit_flatness_package(ex, primes, budget);
        out.result["level"] = d;
        out.result["colon_stability"] = json{{"holds", a.holds}, {"detail", a.detail}};
        out.result["torsion_identification"] = json{{"holds", b.holds}, {"detail", b.detail}};
        out.result["mod_t_collapse"] =
            json{{"boundary_as_expected", c.as_expected}, {"detail", c.detail},
                 {"discrepancy", c.discrepancy}};
        out.result["tor_obstruction"] = json{{"holds", dd.holds}, {"detail", dd.detail}};
        out.result["audit"] = report_to_json(audit);
        text << "chain example at level d=" << d << "\n";
        text << "  [" << (a.holds ? "holds" : "FAILS") << "] colon stability: " << a.detail << "\n";
        text << "  [" << (b.holds ? "holds" : "FAILS") << "] torsion identification: " << b.detail
             << "\n";
        text << "  [" << (c.as_expected ? "boundary-as-expected" : "UNEXPECTED")
             << "] collapse mod t: " << c.detail << "\n";
        text << "  [" << (dd.holds ? "holds" : "FAILS") << "] tor obstruction: " << dd.detail
             << "\n";
        render_report_text(text, audit);
        out.exit_code = (a.holds && b.holds && c.as_expected && dd.holds) ? 0 : 2;
    } else if (kind == "diag") {
        GroupDemo demo;
        if (task.contains("demo")) {
            std::string which = task["demo"].get<std::string>();
            std::uint64_t p = ws.field->kind() == FieldKind::PrimeField ? ws.field->prime() : 101;
            if (which == "double-cover") demo = demo_double_cover(p, budget);
            else if (which == "quotient-z2") demo = demo_quotient_to_order2(p, budget);
            else if (which == "identity-z3") demo = demo_identity_torsion(p, 3, budget);
            else throw Error("unknown diag demo '" + which + "'");
        } else {
            DiagGroup src{task.value("source_free", 0),
                          task.value("source_torsion", std::vector<int>{})};
            DiagGroup tgt{task.value("target_free", 0),
                          task.value("target_torsion", std::vector<int>{})};
            std::vector<std::vector<long>> matrix =
                task.at("matrix").get<std::vector<std::vector<long>>>();
            demo.map = diag_morphism(ws.field, src, tgt, matrix, budget);
            RingPtr kamb = PolyRing::make(ws.field, {}, MonomialOrder::grevlex());
            demo.base_primes = enumerate_primes(QuotientRing::poly_ring(kamb), 0, budget);
        }
        CriterionReport rep = check_group_purity(demo.map, demo.model, demo.base_primes, budget);
        out.result = report_to_json(rep);
        render_report_text(text, rep);
        out.exit_code = report_exit(rep);
    } else {
        throw Error("unknown task kind '" + kind + "'");
    }
    out.text = text.str();
    return out;
}

}  // namespace

RunResult run_document(const std::string& json_text, const RunOptions& opts) {
    RunResult rr;
    json output;
    output["tool"] = "flatcheck";
    try {
        json doc = json::parse(json_text);
        Budget budget = opts.budget;
        Workspace ws = build_workspace(doc, opts, budget);
        TaskOutcome outcome = run_task(doc, ws, opts, budget);
        output["task"] = doc.at("task").value("kind", "?");
        output["result"] = outcome.result;
        output["exit_code"] = outcome.exit_code;
        rr.exit_code = outcome.exit_code;
        if (opts.timestamp) {
            std::time_t now = std::time(nullptr);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            output["timestamp"] = buf;
        }
        if (opts.report_format == "structured") {
            rr.output = output.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "flatcheck: task " << output["task"].get<std::string>() << "\n";
            os << outcome.text;
            os << "exit: " << outcome.exit_code << "\n";
            if (opts.timestamp) os << "generated: " << output["timestamp"].get<std::string>() << "\n";
            rr.output = os.str();
        }
        return rr;
    } catch (const json::exception& e) {
        rr.exit_code = 3;
        rr.output = std::string("document error: ") + e.what() + "\n";
        return rr;
    } catch (const ParseError& e) {
        rr.exit_code = 3;
        rr.output = std::string("parse error: ") + e.what() + "\n";
        return rr;
    } catch (const BudgetError& e) {
        rr.exit_code = 3;
        rr.output = std::string("resource error: ") + e.what() + "\n";
        return rr;
    } catch (const UnsupportedError& e) {
        rr.exit_code = 3;
        rr.output = std::string("unsupported: ") + e.what() + "\n";
        return rr;
    } catch (const Error& e) {
        rr.exit_code = 3;
        rr.output = std::string("error: ") + e.what() + "\n";
        return rr;
    }
}

}  // namespace flatcheck
