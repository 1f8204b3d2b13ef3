#ifndef FLATCHECK_DOCUMENT_HPP
#define FLATCHECK_DOCUMENT_HPP

#include <string>

#include "flatcheck/gallery.hpp"

namespace flatcheck {

struct RunOptions {
    bool timestamp = true;
    std::string report_format = "text";  // "text" | "structured"
    std::string default_field = "fp";
    std::uint64_t default_p = 101;
    std::string default_order = "grevlex";
    int degree_bound = 1;
    int nmax = 3;
    Budget budget;
};

struct RunResult {
    int exit_code = 0;  // 0 completed, 2 condition failed with witness, 3 resource/unsupported
    std::string output;
};

/// Parses a problem document (JSON object syntax with the polynomial grammar
/// embedded in strings), resolves and type-checks all names, dispatches the
/// task, and renders the report. Deterministic for fixed inputs when the
/// timestamp is suppressed.
RunResult run_document(const std::string& json_text, const RunOptions& opts);

}  // namespace flatcheck

#endif
