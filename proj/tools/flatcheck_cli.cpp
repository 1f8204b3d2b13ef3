#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flatcheck/document.hpp"

using namespace flatcheck;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flatcheck: exact fiberwise flatness and purity checks for finitely presented modules"};
    app.require_subcommand(1);

    RunOptions opts;
    bool no_timestamp = false;
    std::string field_flag = "fp101";
    app.add_flag("--no-timestamp", no_timestamp, "suppress the timestamp field in reports");
    app.add_option("--report", opts.report_format, "report format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--field", field_flag, "default coefficient field: q or fp<p>, e.g. fp101");
    app.add_option("--order", opts.default_order, "default monomial order: grevlex|lex");
    app.add_option("--degree-bound", opts.degree_bound, "default prime enumeration degree bound");
    app.add_option("--nmax", opts.nmax, "default truncation level for bounded checks");
    app.add_option("--budget-pairs", opts.budget.max_pairs, "S-pair budget for basis computations");
    app.add_option("--budget-degree", opts.budget.max_degree, "polynomial degree budget");

    std::string doc_path;
    auto* run = app.add_subcommand("run", "run a problem document (JSON); '-' reads stdin");
    run->add_option("document", doc_path, "path to the problem document")->required();

    int level = 4;
    auto* cex = app.add_subcommand("counterexample",
                                   "audit the chain-ideal example at a truncation level");
    cex->add_option("--d", level, "truncation level (>= 3)");

    std::string demo_name = "double-cover";
    auto* diag = app.add_subcommand("diag", "run a diagonalizable group-scheme purity demo");
    diag->add_option("--demo", demo_name, "double-cover | quotient-z2 | identity-z3");

    CLI11_PARSE(app, argc, argv);
    opts.timestamp = !no_timestamp;
    if (field_flag == "q") {
        opts.default_field = "q";
    } else if (field_flag.rfind("fp", 0) == 0) {
        opts.default_field = "fp";
        opts.default_p = std::stoull(field_flag.substr(2));
    } else {
        std::cerr << "unknown field '" << field_flag << "'\n";
        return 3;
    }

    try {
        std::string doc;
        if (run->parsed()) {
            doc = read_input(doc_path);
        } else if (cex->parsed()) {
            doc = std::string("{\"task\":{\"kind\":\"counterexample\",\"d\":") +
                  std::to_string(level) + ",\"degree_bound\":" +
                  std::to_string(opts.degree_bound) + "}}";
        } else if (diag->parsed()) {
            doc = std::string("{\"task\":{\"kind\":\"diag\",\"demo\":\"") + demo_name + "\"}}";
        }
        RunResult rr = run_document(doc, opts);
        std::cout << rr.output;
        return rr.exit_code;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
