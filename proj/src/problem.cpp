#include "problem.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace chitop {
namespace cli {

using json = nlohmann::ordered_json;
using eulerchar::AffineLocus;
using eulerchar::ChiEngine;
using eulerchar::ChiOptions;
using groebner::make_ideal;

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Affine: return "affine";
        case Mode::Quotient: return "quotient";
        case Mode::Wps: return "wps";
        case Mode::Resultant: return "resultant";
        case Mode::Roots: return "roots";
        case Mode::Mmp: return "mmp";
        case Mode::Bounds: return "bounds";
    }
    return "?";
}

// ------------------------------------------------------------ expressions

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    Rat value;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        skip_ws();
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) return {Token::End, "", Rat(0), line_, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '/') {
                size_t save = pos_;
                ++pos_;
                size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (pos_ == dstart) {
                    pos_ = save; // lone '/': not a rational literal
                } else {
                    std::string den = s_.substr(dstart, pos_ - dstart);
                    Rat v(num + "/" + den);
                    v.canonicalize();
                    if (v.get_den() == 0) throw parse_error("zero denominator", line_, col);
                    return {Token::Number, num + "/" + den, v, line_, col};
                }
            }
            return {Token::Number, num, Rat(num), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, s_.substr(start, pos_ - start), Rat(0), line_, col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Plus, "+", Rat(0), line_, col};
            case '-': return {Token::Minus, "-", Rat(0), line_, col};
            case '*': return {Token::Star, "*", Rat(0), line_, col};
            case '^': return {Token::Caret, "^", Rat(0), line_, col};
            case '(': return {Token::LParen, "(", Rat(0), line_, col};
            case ')': return {Token::RParen, ")", Rat(0), line_, col};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col);
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_;
};

class ExprParser {
public:
    ExprParser(const std::string& s, const VarsPtr& vars, int line)
        : lex_(s, line), vars_(vars) {
        advance();
    }

    MultiPoly parse() {
        MultiPoly p = expr();
        if (cur_.kind != Token::End)
            throw parse_error("trailing input after expression (implicit multiplication is not allowed)",
                              cur_.line, cur_.col);
        return p;
    }

private:
    void advance() { cur_ = lex_.next(); }

    MultiPoly expr() {
        bool neg = false;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            if (cur_.kind == Token::Minus) neg = !neg;
            advance();
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            advance();
            MultiPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (cur_.kind == Token::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Number || cur_.value.get_den() != 1 || cur_.value < 0)
                throw parse_error("exponent must be a natural number", cur_.line, cur_.col);
            unsigned long e = cur_.value.get_num().get_ui();
            if (e > 1000) throw parse_error("exponent too large", cur_.line, cur_.col);
            advance();
            if (cur_.kind == Token::Caret)
                throw parse_error("chained '^' needs parentheses", cur_.line, cur_.col);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly atom() {
        switch (cur_.kind) {
            case Token::Number: {
                MultiPoly c = MultiPoly::constant(vars_, cur_.value);
                advance();
                return c;
            }
            case Token::Ident: {
                auto idx = vars_->index_of(cur_.text);
                if (!idx)
                    throw parse_error("unknown variable '" + cur_.text + "'", cur_.line, cur_.col);
                MultiPoly v = MultiPoly::variable(vars_, *idx);
                advance();
                return v;
            }
            case Token::Minus: {
                advance();
                return -factor();
            }
            case Token::LParen: {
                advance();
                MultiPoly inner = expr();
                if (cur_.kind != Token::RParen)
                    throw parse_error("expected ')'", cur_.line, cur_.col);
                advance();
                return inner;
            }
            default:
                throw parse_error("expected a number, variable or '('", cur_.line, cur_.col);
        }
    }

    Lexer lex_;
    Token cur_;
    VarsPtr vars_;
};

std::vector<long> parse_longs(const std::string& s, int line) {
    std::vector<long> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("expected an integer, got '" + tok + "'", line, 1);
        }
    }
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

MultiPoly parse_polynomial(const std::string& text, const VarsPtr& vars) {
    return ExprParser(text, vars, 1).parse();
}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<int, std::string>> eq_lines;
    bool have_vars = false;

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trimmed(strip_comment(raw));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value'", lineno, 1);
        std::string key = trimmed(line.substr(0, colon));
        std::string val = trimmed(line.substr(colon + 1));
        if (key == "vars") {
            if (have_vars) throw parse_error("duplicate vars line", lineno, 1);
            std::istringstream vs(val);
            std::vector<std::string> names;
            std::string name;
            while (vs >> name) {
                for (char c : name)
                    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                        throw parse_error("invalid variable name '" + name + "'", lineno, 1);
                if (std::find(names.begin(), names.end(), name) != names.end())
                    throw parse_error("duplicate variable '" + name + "'", lineno, 1);
                names.push_back(name);
            }
            if (names.empty()) throw parse_error("vars line lists no variables", lineno, 1);
            pf.vars = make_vars(names);
            have_vars = true;
        } else if (key == "quotient") {
            auto semi = val.find(';');
            if (semi == std::string::npos)
                throw parse_error("quotient needs 'm ; w1 ... wn'", lineno, 1);
            auto ms = parse_longs(val.substr(0, semi), lineno);
            if (ms.size() != 1 || ms[0] < 1)
                throw parse_error("quotient order must be a single positive integer", lineno, 1);
            pf.quotient_m = ms[0];
            pf.quotient_w = parse_longs(val.substr(semi + 1), lineno);
        } else if (key == "weights") {
            pf.weights = parse_longs(val, lineno);
        } else if (key == "eq") {
            eq_lines.emplace_back(lineno, val);
        } else {
            throw parse_error("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (!have_vars) throw parse_error("missing vars line", lineno, 1);
    if (eq_lines.empty() && pf.weights.empty() && !pf.quotient_m)
        throw parse_error("no equations given", lineno, 1);

    for (auto& [ln, src] : eq_lines) {
        pf.equations.push_back(ExprParser(src, pf.vars, ln).parse());
        pf.equation_texts.push_back(src);
    }
    if (pf.quotient_m && !pf.weights.empty())
        throw parse_error("quotient and weights lines are mutually exclusive", lineno, 1);
    if (pf.quotient_m) {
        if (pf.quotient_w.size() != pf.vars->size())
            throw parse_error("quotient weight count differs from variable count", lineno, 1);
        pf.mode = Mode::Quotient;
    } else if (!pf.weights.empty()) {
        if (pf.weights.size() != pf.vars->size())
            throw parse_error("weight count differs from variable count", lineno, 1);
        pf.mode = Mode::Wps;
    } else {
        pf.mode = Mode::Affine;
    }
    return pf;
}

// ------------------------------------------------------------------ runs

namespace {

ChiEngine make_engine(const RunFlags& flags) {
    ChiOptions opt;
    opt.projection_order = flags.project_order;
    if (flags.max_depth > 0) opt.max_depth = flags.max_depth;
    opt.parallel = flags.parallel;
    opt.trace = flags.trace;
    return ChiEngine(opt);
}

json input_block(const ProblemFile& p) {
    json in;
    in["vars"] = p.vars->names();
    if (p.quotient_m) {
        in["quotient_m"] = *p.quotient_m;
        in["quotient_weights"] = p.quotient_w;
    }
    if (!p.weights.empty()) in["weights"] = p.weights;
    in["equations"] = p.equation_texts;
    return in;
}

json trace_block(const ChiEngine& eng) {
    json t = json::array();
    for (const auto& e : eng.trace()) {
        json r;
        r["depth"] = e.depth;
        r["stratum"] = e.stratum;
        r["fiber"] = e.kind == eulerchar::FiberKind::Line
                         ? "line"
                         : (e.kind == eulerchar::FiberKind::Empty ? "empty" : "finite");
        r["multiplier"] = e.multiplier;
        r["chi"] = e.chi;
        t.push_back(r);
    }
    return t;
}

json doc_header(Mode mode) {
    json doc;
    doc["tool"] = "chitop";
    doc["schema"] = 1;
    doc["mode"] = mode_name(mode);
    return doc;
}

wps::CyclicQuotientLocus quotient_of(const ProblemFile& p) {
    wps::CyclicQuotientLocus q;
    q.order = *p.quotient_m;
    q.action = p.quotient_w;
    q.ideal = make_ideal(p.vars, p.equations);
    return q;
}

wps::WeightedLocus wps_of(const ProblemFile& p) {
    wps::WeightedLocus y;
    y.space.weights = p.weights;
    y.vars = p.vars;
    y.gens = p.equations;
    return y;
}

} // namespace

std::string run(const ProblemFile& problem, const RunFlags& flags) {
    json doc = doc_header(problem.mode);
    doc["input"] = input_block(problem);
    ChiEngine eng = make_engine(flags);

    switch (problem.mode) {
        case Mode::Affine: {
            long long chi = eng.chi_affine(AffineLocus(make_ideal(problem.vars, problem.equations)));
            doc["chi"] = chi;
            if (flags.oracle_check) {
                // independent route: reversed projection order
                ChiOptions opt;
                std::vector<std::string> rev = problem.vars->names();
                std::reverse(rev.begin(), rev.end());
                opt.projection_order = rev;
                ChiEngine alt(opt);
                long long chi2 =
                    alt.chi_affine(AffineLocus(make_ideal(problem.vars, problem.equations)));
                doc["oracle_check"] = {{"method", "reversed projection order"},
                                       {"value", chi2},
                                       {"match", chi2 == chi}};
            }
            break;
        }
        case Mode::Quotient: {
            auto q = quotient_of(problem);
            long long chi = wps::chi_cyclic_quotient(q, eng);
            doc["chi"] = chi;
            if (flags.oracle_check) {
                long long chi2 = wps::chi_quotient_average(q, eng);
                doc["oracle_check"] = {{"method", "group average"},
                                       {"value", chi2},
                                       {"match", chi2 == chi}};
            }
            break;
        }
        case Mode::Wps: {
            auto y = wps_of(problem);
            long long chi = wps::chi_wps(y, eng);
            doc["chi"] = chi;
            if (flags.oracle_check) {
                long long chi2 = wps::chi_wps_via_average(y, eng);
                doc["oracle_check"] = {{"method", "group average"},
                                       {"value", chi2},
                                       {"match", chi2 == chi}};
            }
            break;
        }
        case Mode::Resultant: {
            auto T = resultant::build_T(problem.equations);
            auto rn = exactmath::rank_nullity(T.matrix);
            doc["degrees"] = T.degrees;
            doc["rows"] = T.rows();
            doc["cols"] = T.cols();
            doc["rank"] = rn.rank;
            doc["nullity"] = rn.nullity;
            doc["common_zero_count"] = resultant::common_zero_count(problem.equations);
            break;
        }
        case Mode::Roots: {
            doc["distinct_root_count"] = resultant::distinct_root_count(problem.equations);
            doc["common_zero_count"] = resultant::common_zero_count(problem.equations);
            break;
        }
        default:
            throw precondition_error("mode not handled by run()");
    }

    if (flags.reference) {
        long long engine_val = doc["chi"].get<long long>();
        auto rep = wps::compare_with_reference(engine_val, *flags.reference,
                                               flags.reference_source);
        doc["reference"] = {{"source", rep.source},
                            {"reference_value", rep.reference},
                            {"engine_value", rep.engine},
                            {"match", rep.matches},
                            {"flagged", rep.flagged}};
    }
    if (flags.trace) doc["trace"] = trace_block(eng);
    return doc.dump(2) + "\n";
}

// --------------------------------------------------------------- mmp runs

namespace {

mmp::IntInterval interval_of(const json& j) {
    if (j.is_number_integer()) return mmp::IntInterval(j.get<long>());
    if (j.is_array() && j.size() == 2) {
        mmp::IntInterval iv;
        iv.lo = BigInt(j[0].get<long>());
        iv.hi = BigInt(j[1].get<long>());
        if (iv.lo > iv.hi) throw parse_error("interval with lo > hi");
        return iv;
    }
    throw parse_error("expected an integer or [lo, hi]");
}

json interval_json(const mmp::IntInterval& iv) {
    if (iv.exact()) return json(iv.lo.get_str());
    return json::array({iv.lo.get_str(), iv.hi.get_str()});
}

mmp::ThreefoldState state_of(const json& j, long rho0) {
    mmp::ThreefoldState s;
    auto b = j.at("betti");
    if (!b.is_array() || b.size() != 7) throw parse_error("betti must list b0..b6");
    s.betti.b0 = b[0].get<long>();
    s.betti.b1 = b[1].get<long>();
    s.betti.b2 = b[2].get<long>();
    s.betti.b3 = interval_of(b[3]);
    s.betti.b4 = b[4].get<long>();
    s.betti.b5 = b[5].get<long>();
    s.betti.b6 = b[6].get<long>();
    s.dep = j.value("dep", 0L);
    s.rho = j.value("rho", rho0);
    s.aw = j.value("aw", 0L);
    s.xi = j.value("xi", 0L);
    return s;
}

} // namespace

std::string run_mmp(const std::string& run_json, const mmp::Catalog& catalog) {
    json j;
    try {
        j = json::parse(run_json);
    } catch (const std::exception& e) {
        throw parse_error(std::string("run file: ") + e.what());
    }
    long rho0 = j.at("rho0").get<long>();
    std::vector<mmp::ThreefoldState> states;
    states.push_back(state_of(j.at("initial"), rho0));

    std::vector<mmp::StepRecord> steps;
    for (const auto& js : j.at("steps")) {
        mmp::StepRecord st;
        std::string kind = js.at("kind").get<std::string>();
        if (kind == "div_point")
            st.kind = mmp::StepKind::DivToPoint;
        else if (kind == "div_curve")
            st.kind = mmp::StepKind::DivToCurveLCI;
        else if (kind == "flip")
            st.kind = mmp::StepKind::Flip;
        else if (kind == "flop")
            st.kind = mmp::StepKind::Flop;
        else
            throw parse_error("unknown step kind '" + kind + "'");

        if (st.kind == mmp::StepKind::DivToPoint) {
            if (js.contains("chiE")) {
                st.chiE = interval_of(js.at("chiE"));
            } else if (js.contains("exceptional")) {
                // compute chi(E) from a concrete instantiation through the
                // weighted-projective engine
                const auto& ex = js.at("exceptional");
                auto names = ex.at("vars").get<std::vector<std::string>>();
                VarsPtr vars = make_vars(names);
                std::vector<MultiPoly> eqs;
                for (const auto& t : ex.at("equations"))
                    eqs.push_back(parse_polynomial(t.get<std::string>(), vars));
                wps::BlowupWeight sigma;
                sigma.m = ex.value("sigma_m", 1L);
                sigma.numerators = ex.at("sigma").get<std::vector<long>>();
                if (ex.contains("catalog")) {
                    std::string id = ex.at("catalog").get<std::string>();
                    bool found = false;
                    for (const auto& row : catalog.rows) found = found || row.id == id;
                    if (!found) throw precondition_error("unknown catalog row: " + id);
                    st.catalog_ref = id;
                }
                eulerchar::ChiEngine eng;
                auto e = wps::exceptional_divisor_chi(eqs, sigma, eng);
                st.chiE = mmp::IntInterval(e.chiE);
            } else {
                throw parse_error("div_point step needs chiE or an exceptional block");
            }
        }
        if (st.kind == mmp::StepKind::DivToCurveLCI) st.chiC = interval_of(js.at("chiC"));
        st.dep = js.value("dep", states.back().dep);
        st.rho = js.value("rho", states.back().rho);
        st.aw = js.value("aw", states.back().aw);
        st.xi = js.value("xi", states.back().xi);
        steps.push_back(st);
        states.push_back(mmp::apply_step(states.back(), steps.back()));
    }

    auto violations = mmp::validate_run(states, steps, rho0);

    json doc = doc_header(Mode::Mmp);
    doc["rho0"] = rho0;
    json st = json::array();
    for (const auto& s : states) {
        json row;
        row["betti"] = json::array({s.betti.b0, s.betti.b1, s.betti.b2, interval_json(s.betti.b3),
                                    s.betti.b4, s.betti.b5, s.betti.b6});
        row["chi"] = interval_json(s.betti.chi());
        row["dep"] = s.dep;
        row["aw"] = s.aw;
        row["xi"] = s.xi;
        st.push_back(row);
    }
    doc["states"] = st;
    json viol = json::array();
    size_t hard = 0;
    for (const auto& v : violations) {
        json row;
        row["index"] = v.index;
        row["severity"] = v.severity == mmp::Severity::Violation ? "violation" : "warning";
        row["check"] = v.check;
        row["detail"] = v.detail;
        viol.push_back(row);
        if (v.severity == mmp::Severity::Violation) ++hard;
    }
    doc["violations"] = viol;
    doc["violation_count"] = hard;
    return doc.dump(2) + "\n";
}

// ----------------------------------------------------------------- bounds

std::string bounds_value(const std::string& family, const std::vector<long>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw precondition_error("bounds " + family + " expects " + std::to_string(n) +
                                     " parameters");
    };
    bounds::Big v;
    if (family == "N") {
        need(3);
        v = bounds::bound_N(params[0], params[1], params[2]);
    } else if (family == "M") {
        need(3);
        v = bounds::bound_M(params[0], params[1], params[2]);
    } else if (family == "L") {
        need(5);
        v = bounds::bound_L(params[0], params[1], params[2], params[3], params[4]);
    } else if (family == "A") {
        need(3);
        v = bounds::bound_A(params[0], params[1], params[2]);
    } else if (family == "B") {
        need(3);
        v = bounds::bound_B(params[0], params[1], params[2]);
    } else if (family == "D") {
        need(1);
        v = bounds::bound_D(params[0]);
    } else if (family == "Dprime") {
        need(1);
        v = bounds::bound_Dprime(params[0]);
    } else if (family == "Phi") {
        need(1);
        v = bounds::bound_Phi(params[0]);
    } else if (family == "Psi") {
        need(2);
        v = bounds::bound_Psi(params[0], params[1]);
    } else if (family == "PhiBar") {
        need(1);
        v = bounds::bound_PhiBar(params[0]);
    } else if (family == "Theta") {
        need(3);
        v = bounds::bound_Theta(static_cast<int>(params[0]), params[1], params[2]);
    } else {
        throw precondition_error("unknown bound family: " + family);
    }
    json doc = doc_header(Mode::Bounds);
    doc["family"] = family;
    doc["params"] = params;
    doc["value"] = v.get_str();
    return doc.dump(2) + "\n";
}

std::string error_document(const Error& e) {
    json doc;
    doc["tool"] = "chitop";
    doc["schema"] = 1;
    doc["error"] = {{"code", static_cast<int>(e.kind)},
                    {"kind", e.kind == ErrorKind::Parse
                                 ? "parse"
                                 : e.kind == ErrorKind::Precondition
                                       ? "precondition"
                                       : e.kind == ErrorKind::Budget ? "resource" : "internal"},
                    {"message", e.what()}};
    if (e.line >= 0) doc["error"]["line"] = e.line;
    if (e.col >= 0) doc["error"]["col"] = e.col;
    return doc.dump(2) + "\n";
}

} // namespace cli
} // namespace chitop
