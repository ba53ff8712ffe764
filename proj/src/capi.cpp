#include "chitop.h"

#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "problem.hpp"

using namespace chitop;

struct chitop_problem {
    cli::ProblemFile file;
};

struct chitop_result {
    std::string json_text;
    bool has_chi = false;
    long long chi = 0;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

std::string describe(const Error& e) {
    if (e.line < 0) return e.what();
    std::string s = "line " + std::to_string(e.line);
    if (e.col >= 0) s += ", col " + std::to_string(e.col);
    return s + ": " + e.what();
}

chitop_result* make_result(std::string json_text) {
    auto* r = new chitop_result;
    r->json_text = std::move(json_text);
    try {
        auto doc = nlohmann::json::parse(r->json_text);
        if (doc.contains("chi")) {
            r->chi = doc["chi"].get<long long>();
            r->has_chi = true;
        }
    } catch (...) {
        // leave chi unset
    }
    return r;
}

int run_guarded(char** err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        set_err(err, describe(e));
        return static_cast<int>(e.kind);
    } catch (const std::bad_alloc&) {
        set_err(err, "out of memory");
        return CHITOP_ERR_RESOURCE;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return CHITOP_ERR_INTERNAL;
    } catch (...) {
        set_err(err, "unknown error");
        return CHITOP_ERR_INTERNAL;
    }
}

// like run_guarded, but failures also leave an error document in *out so
// callers always have a machine-readable result
int run_guarded_result(chitop_result** out, char** err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        set_err(err, describe(e));
        if (out && !*out) *out = make_result(cli::error_document(e));
        return static_cast<int>(e.kind);
    } catch (const std::bad_alloc&) {
        set_err(err, "out of memory");
        if (out && !*out)
            *out = make_result(cli::error_document(Error(ErrorKind::Budget, "out of memory")));
        return CHITOP_ERR_RESOURCE;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        if (out && !*out)
            *out = make_result(cli::error_document(Error(ErrorKind::Internal, e.what())));
        return CHITOP_ERR_INTERNAL;
    }
}

cli::RunFlags flags_from_json(const char* options_json) {
    cli::RunFlags flags;
    if (!options_json || !*options_json) return flags;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(options_json);
    } catch (const std::exception& e) {
        throw parse_error(std::string("options: ") + e.what());
    }
    flags.trace = j.value("trace", false);
    flags.oracle_check = j.value("oracle_check", false);
    if (j.contains("project_order"))
        flags.project_order = j["project_order"].get<std::vector<std::string>>();
    flags.max_depth = j.value("max_depth", 0);
    flags.parallel = j.value("parallel", 1);
    if (j.contains("reference")) flags.reference = j["reference"].get<long long>();
    flags.reference_source = j.value("reference_source", "");
    return flags;
}

} // namespace

extern "C" {

const char* chitop_version(void) { return "0.1.0"; }

int chitop_problem_parse(const char* text, chitop_problem** out, char** err) {
    if (!text || !out) {
        set_err(err, "null argument");
        return CHITOP_ERR_PRECONDITION;
    }
    *out = nullptr;
    return run_guarded(err, [&]() {
        auto* p = new chitop_problem{cli::parse_problem(text)};
        *out = p;
        return CHITOP_OK;
    });
}

void chitop_problem_free(chitop_problem* p) { delete p; }

int chitop_run(const chitop_problem* p, const char* options_json, chitop_result** out,
               char** err) {
    if (!p || !out) {
        set_err(err, "null argument");
        return CHITOP_ERR_PRECONDITION;
    }
    *out = nullptr;
    return run_guarded_result(out, err, [&]() {
        cli::RunFlags flags = flags_from_json(options_json);
        *out = make_result(cli::run(p->file, flags));
        return CHITOP_OK;
    });
}

int chitop_run_resultant(const chitop_problem* p, chitop_result** out, char** err) {
    if (!p || !out) {
        set_err(err, "null argument");
        return CHITOP_ERR_PRECONDITION;
    }
    *out = nullptr;
    return run_guarded_result(out, err, [&]() {
        cli::ProblemFile pf = p->file;
        pf.mode = cli::Mode::Resultant;
        *out = make_result(cli::run(pf, {}));
        return CHITOP_OK;
    });
}

int chitop_run_roots(const chitop_problem* p, chitop_result** out, char** err) {
    if (!p || !out) {
        set_err(err, "null argument");
        return CHITOP_ERR_PRECONDITION;
    }
    *out = nullptr;
    return run_guarded_result(out, err, [&]() {
        cli::ProblemFile pf = p->file;
        pf.mode = cli::Mode::Roots;
        *out = make_result(cli::run(pf, {}));
        return CHITOP_OK;
    });
}

int chitop_bounds(const char* family, const long* params, size_t nparams, chitop_result** out,
                  char** err) {
    if (!family || !out || (nparams > 0 && !params)) {
        set_err(err, "null argument");
        return CHITOP_ERR_PRECONDITION;
    }
    *out = nullptr;
    return run_guarded_result(out, err, [&]() {
        std::vector<long> ps(params, params + nparams);
        *out = make_result(cli::bounds_value(family, ps));
        return CHITOP_OK;
    });
}

int chitop_mmp_run(const char* run_json, const char* catalog_path, chitop_result** out,
                   char** err) {
    if (!run_json || !out) {
        set_err(err, "null argument");
        return CHITOP_ERR_PRECONDITION;
    }
    *out = nullptr;
    return run_guarded_result(out, err, [&]() {
        mmp::Catalog cat;
        if (catalog_path && *catalog_path) cat = mmp::load_catalog(catalog_path);
        *out = make_result(cli::run_mmp(run_json, cat));
        return CHITOP_OK;
    });
}

const char* chitop_result_json(const chitop_result* r) {
    return r ? r->json_text.c_str() : nullptr;
}

int chitop_result_chi(const chitop_result* r, long long* out_chi) {
    if (!r || !out_chi) return CHITOP_ERR_PRECONDITION;
    if (!r->has_chi) return CHITOP_ERR_PRECONDITION;
    *out_chi = r->chi;
    return CHITOP_OK;
}

void chitop_result_free(chitop_result* r) { delete r; }

int chitop_error_json(int code, const char* message, char** out) {
    if (!out) return CHITOP_ERR_PRECONDITION;
    ErrorKind kind;
    switch (code) {
        case CHITOP_ERR_PARSE: kind = ErrorKind::Parse; break;
        case CHITOP_ERR_PRECONDITION: kind = ErrorKind::Precondition; break;
        case CHITOP_ERR_RESOURCE: kind = ErrorKind::Budget; break;
        default: kind = ErrorKind::Internal; break;
    }
    *out = dup_string(cli::error_document(Error(kind, message ? message : "error")));
    return CHITOP_OK;
}

void chitop_string_free(char* s) { std::free(s); }

} // extern "C"
