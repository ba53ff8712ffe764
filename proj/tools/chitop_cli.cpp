// chitop command-line front end. Links only the C API of the shared library.
//
//   chitop chi FILE [--trace] [--oracle-check] [--project-order x,y,z]
//               [--max-depth N] [--parallel N] [--reference V [--reference-source S]]
//   chitop resultant FILE
//   chitop roots FILE
//   chitop bounds FAMILY PARAMS...
//   chitop mmp RUNFILE [--catalog PATH]
//
// The result document goes to stdout; timing goes to stderr. Exit codes:
// 0 ok, 2 parse, 3 precondition, 4 resource budget, 5 internal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chitop.h"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "chitop: cannot open " << path << "\n";
        std::exit(CHITOP_ERR_PARSE);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int finish(int status, chitop_result* result, char* err) {
    if (result) {
        std::cout << chitop_result_json(result);
    } else if (status != CHITOP_OK) {
        char* doc = nullptr;
        if (chitop_error_json(status, err, &doc) == CHITOP_OK && doc) {
            std::cout << doc;
            chitop_string_free(doc);
        }
    }
    if (status != CHITOP_OK && err)
        std::cerr << "chitop: error " << status << ": " << err << "\n";
    chitop_result_free(result);
    chitop_string_free(err);
    return status;
}

std::string options_json(bool trace, bool oracle, const std::string& order, int max_depth,
                         int parallel, const std::string& reference,
                         const std::string& reference_source) {
    std::ostringstream os;
    os << "{";
    os << "\"trace\":" << (trace ? "true" : "false");
    os << ",\"oracle_check\":" << (oracle ? "true" : "false");
    if (!order.empty()) {
        os << ",\"project_order\":[";
        std::istringstream is(order);
        std::string tok;
        bool first = true;
        while (std::getline(is, tok, ',')) {
            if (!first) os << ",";
            first = false;
            os << "\"" << tok << "\"";
        }
        os << "]";
    }
    if (max_depth > 0) os << ",\"max_depth\":" << max_depth;
    if (parallel > 1) os << ",\"parallel\":" << parallel;
    if (!reference.empty()) {
        os << ",\"reference\":" << reference;
        os << ",\"reference_source\":\"" << reference_source << "\"";
    }
    os << "}";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chitop: exact Euler characteristics of complex algebraic sets"};
    app.set_version_flag("--version", chitop_version());
    app.require_subcommand(1);

    std::string file, order, reference, reference_source, runfile, catalog, family;
    bool trace = false, oracle = false;
    int max_depth = 0, parallel = 1;
    std::vector<long> params;

    auto* chi = app.add_subcommand("chi", "Euler characteristic of a problem file");
    chi->add_option("file", file)->required();
    chi->add_flag("--trace", trace, "include the stratification trace");
    chi->add_flag("--oracle-check", oracle, "recompute along an independent route");
    chi->add_option("--project-order", order, "comma-separated projection variable order");
    chi->add_option("--max-depth", max_depth, "stratification recursion depth cap");
    chi->add_option("--parallel", parallel, "parallel stratum evaluation width");
    chi->add_option("--reference", reference, "known value to compare against");
    chi->add_option("--reference-source", reference_source, "label for the reference value");

    auto* res = app.add_subcommand("resultant", "generalized resultant of univariate equations");
    res->add_option("file", file)->required();

    auto* roots = app.add_subcommand("roots", "common/distinct root counts");
    roots->add_option("file", file)->required();

    auto* bounds = app.add_subcommand("bounds", "bound constants (N, M, L, A, B, D, Dprime, Phi, Psi, PhiBar, Theta)");
    bounds->add_option("family", family)->required();
    bounds->add_option("params", params, "integer parameters");

    auto* mmp = app.add_subcommand("mmp", "replay and validate an MMP run file");
    mmp->add_option("runfile", runfile)->required();
    mmp->add_option("--catalog", catalog, "catalog JSON path");

    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    chitop_result* result = nullptr;
    char* err = nullptr;
    int status = CHITOP_ERR_INTERNAL;

    if (*chi || *res || *roots) {
        chitop_problem* problem = nullptr;
        status = chitop_problem_parse(read_file(file).c_str(), &problem, &err);
        if (status == CHITOP_OK) {
            if (*chi) {
                std::string opts = options_json(trace, oracle, order, max_depth, parallel,
                                                reference, reference_source);
                status = chitop_run(problem, opts.c_str(), &result, &err);
            } else if (*res) {
                status = chitop_run_resultant(problem, &result, &err);
            } else {
                status = chitop_run_roots(problem, &result, &err);
            }
        }
        chitop_problem_free(problem);
    } else if (*bounds) {
        status = chitop_bounds(family.c_str(), params.data(), params.size(), &result, &err);
    } else if (*mmp) {
        status = chitop_mmp_run(read_file(runfile).c_str(), catalog.empty() ? nullptr : catalog.c_str(),
                                &result, &err);
    }

    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "chitop: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return finish(status, result, err);
}
