#pragma once

// Problem-file grammar, dispatch to the engines, and machine-readable result
// documents. The document layout is pinned in docs/result_schema.md; output
// is byte-deterministic for a fixed input and flag set.

#include <optional>
#include <string>
#include <vector>

#include "eulerchar.hpp"
#include "mmp.hpp"
#include "wps.hpp"

namespace chitop {
namespace cli {

enum class Mode { Affine, Quotient, Wps, Resultant, Roots, Mmp, Bounds };

std::string mode_name(Mode m);

struct ProblemFile {
    Mode mode = Mode::Affine;
    VarsPtr vars;
    std::optional<long> quotient_m;
    std::vector<long> quotient_w;
    std::vector<long> weights;
    std::vector<MultiPoly> equations;
    std::vector<std::string> equation_texts;
};

// Grammar: `vars:` (space-separated identifiers), optional
// `quotient: m ; w1 .. wn`, optional `weights: a0 .. an`, one or more `eq:`
// lines over + - * ^ ( ) with integer or rational (p/q) coefficients;
// comments start with '#'. Implicit multiplication is rejected.
ProblemFile parse_problem(const std::string& text);

// Standalone expression parser over a fixed variable set (also used by the
// catalog samples and the mmp run files).
MultiPoly parse_polynomial(const std::string& text, const VarsPtr& vars);

struct RunFlags {
    bool trace = false;
    bool oracle_check = false;
    std::optional<std::vector<std::string>> project_order;
    int max_depth = 0;   // 0: engine default
    int parallel = 1;
    std::optional<long long> reference;       // known value to compare against
    std::string reference_source;
};

// Result document as canonical JSON text.
std::string run(const ProblemFile& problem, const RunFlags& flags);

std::string run_mmp(const std::string& run_json, const mmp::Catalog& catalog);

std::string bounds_value(const std::string& family, const std::vector<long>& params);

// Error document with the same schema as successful runs.
std::string error_document(const Error& e);

} // namespace cli
} // namespace chitop
