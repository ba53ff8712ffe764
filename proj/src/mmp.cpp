#include "mmp.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chitop {
namespace mmp {

using nlohmann::json;

ThreefoldState apply_step(const ThreefoldState& s, const StepRecord& step) {
    ThreefoldState out = s;
    out.dep = step.dep;
    out.rho = step.rho;
    out.aw = step.aw;
    out.xi = step.xi;
    switch (step.kind) {
        case StepKind::DivToPoint: {
            if (s.betti.b2 < 1 || s.betti.b4 < 1)
                throw precondition_error("divisorial contraction with b2 or b4 already zero");
            if (step.dep > s.dep + 1)
                throw precondition_error("depth may rise by at most one under a contraction");
            out.betti.b2 = s.betti.b2 - 1;
            out.betti.b4 = s.betti.b4 - 1;
            // b3(W) = b3(X) + chi(E) - 3
            out.betti.b3 = {s.betti.b3.lo + step.chiE.lo - 3, s.betti.b3.hi + step.chiE.hi - 3};
            break;
        }
        case StepKind::DivToCurveLCI: {
            if (s.betti.b2 < 1 || s.betti.b4 < 1)
                throw precondition_error("divisorial contraction with b2 or b4 already zero");
            out.betti.b2 = s.betti.b2 - 1;
            out.betti.b4 = s.betti.b4 - 1;
            // b3(W) = b3(X) + chi(C) - 2
            out.betti.b3 = {s.betti.b3.lo + step.chiC.lo - 2, s.betti.b3.hi + step.chiC.hi - 2};
            break;
        }
        case StepKind::Flip: {
            if (s.dep == 0)
                throw precondition_error("no flipping contraction exists at depth zero");
            if (step.dep >= s.dep)
                throw precondition_error("a flip must strictly decrease the depth");
            out.betti.b3 = s.betti.b3.widened(bounds::bound_Phi(s.dep));
            if (out.betti.b3.lo < 0) out.betti.b3.lo = 0;
            break;
        }
        case StepKind::Flop:
            out.betti = s.betti;
            break;
    }
    return out;
}

ThreefoldState apply_step_inverse(const ThreefoldState& s, const StepRecord& step) {
    ThreefoldState out = s;
    switch (step.kind) {
        case StepKind::DivToPoint:
            out.betti.b2 = s.betti.b2 + 1;
            out.betti.b4 = s.betti.b4 + 1;
            out.betti.b3 = {s.betti.b3.lo - step.chiE.hi + 3, s.betti.b3.hi - step.chiE.lo + 3};
            break;
        case StepKind::DivToCurveLCI:
            out.betti.b2 = s.betti.b2 + 1;
            out.betti.b4 = s.betti.b4 + 1;
            out.betti.b3 = {s.betti.b3.lo - step.chiC.hi + 2, s.betti.b3.hi - step.chiC.lo + 2};
            break;
        case StepKind::Flip:
        case StepKind::Flop:
            throw precondition_error("only divisorial steps have a formal inverse here");
    }
    return out;
}

static WeightBoundFormula parse_bound(const json& j) {
    WeightBoundFormula f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "const") {
        f.kind = WeightBoundFormula::Kind::Const;
        f.c = j.at("c").get<long>();
    } else if (kind == "affine") {
        f.kind = WeightBoundFormula::Kind::AffineDep;
        f.a = j.at("a").get<long>();
        f.b = j.at("b").get<long>();
    } else if (kind == "defer_D") {
        f.kind = WeightBoundFormula::Kind::DeferD;
    } else {
        throw parse_error("catalog: unknown bound kind " + kind);
    }
    return f;
}

Catalog parse_catalog(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("catalog: ") + e.what());
    }
    Catalog cat;
    cat.version = j.at("version").get<int>();
    for (const auto& row : j.at("rows")) {
        CatalogEntry e;
        e.id = row.at("id").get<std::string>();
        e.group = row.at("group").get<std::string>();
        e.type = row.at("type").get<std::string>();
        e.ambient_dim = row.at("ambient_dim").get<int>();
        e.quotient = row.value("quotient", "");
        e.equation = row.at("equation").get<std::string>();
        e.blowup_weight = row.at("weight").get<std::string>();
        e.relation = row.value("relation", "");
        e.bound = parse_bound(row.at("bound"));
        e.min_dep = row.value("min_dep", 0L);
        e.note = row.value("note", "");
        if (row.contains("sample")) {
            const auto& s = row.at("sample");
            CatalogSample cs;
            cs.vars = s.at("vars").get<std::vector<std::string>>();
            cs.equations = s.at("equations").get<std::vector<std::string>>();
            cs.sigma_m = s.at("sigma_m").get<long>();
            cs.sigma = s.at("sigma").get<std::vector<long>>();
            cs.dep = s.value("dep", 0L);
            e.sample = std::move(cs);
        }
        cat.rows.push_back(std::move(e));
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open catalog file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_catalog(os.str());
}

std::optional<long> catalog_weight_bound(const CatalogEntry& entry, long dep) {
    switch (entry.bound.kind) {
        case WeightBoundFormula::Kind::Const:
            return entry.bound.c;
        case WeightBoundFormula::Kind::AffineDep:
            return entry.bound.a * dep + entry.bound.b;
        case WeightBoundFormula::Kind::DeferD:
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Violation> validate_run(const std::vector<ThreefoldState>& states,
                                    const std::vector<StepRecord>& steps, long rho0) {
    if (states.size() != steps.size() + 1)
        throw precondition_error("validate_run: need one state per step plus the initial one");
    std::vector<Violation> out;
    auto flag = [&](size_t i, std::string check, std::string detail,
                    Severity sev = Severity::Violation) {
        out.push_back({i, sev, std::move(check), std::move(detail)});
    };

    const ThreefoldState& x0 = states.front();
    BigInt cap = x0.betti.b3.hi + bounds::bound_PhiBar(rho0);

    long non_flop = 0;
    for (const auto& st : steps)
        if (st.kind != StepKind::Flop) ++non_flop;
    if (non_flop > 2 * rho0)
        flag(steps.size(), "step-count",
             "run has " + std::to_string(non_flop) + " non-flop steps, more than 2*rho = " +
                 std::to_string(2 * rho0));

    for (size_t i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        if (s.betti.b0 != x0.betti.b0 || s.betti.b1 != x0.betti.b1 ||
            s.betti.b5 != x0.betti.b5 || s.betti.b6 != x0.betti.b6)
            flag(i, "b0156-constant", "b0, b1, b5, b6 must stay constant along the run");
        if (s.xi > 2 * s.dep)
            flag(i, "xi-depth", "Xi = " + std::to_string(s.xi) + " exceeds 2*dep = " +
                                    std::to_string(2 * s.dep));
        if (s.dep > rho0)
            flag(i, "depth-rho", "dep = " + std::to_string(s.dep) + " exceeds rho = " +
                                     std::to_string(rho0));
        if (s.aw > s.xi)
            flag(i, "aw-xi", "aw exceeds Xi");
        else if (s.aw == s.xi && s.xi > 0)
            flag(i, "aw-xi-strict", "aw equals Xi; the strict inequality is expected",
                 Severity::Warning);
        if (s.betti.b3.hi > cap)
            flag(i, "b3-cap", "b3 exceeds b3(X0) + PhiBar(rho)");
    }

    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& a = states[i];
        const auto& b = states[i + 1];
        bool divisorial =
            steps[i].kind == StepKind::DivToPoint || steps[i].kind == StepKind::DivToCurveLCI;
        long long expect_drop = divisorial ? 1 : 0;
        if (a.betti.b2 - b.betti.b2 != expect_drop)
            flag(i, "b2-step",
                 divisorial ? "divisorial step must drop b2 by exactly one"
                            : "b2 must be unchanged by flips and flops");
        if (a.betti.b4 - b.betti.b4 != expect_drop)
            flag(i, "b4-step",
                 divisorial ? "divisorial step must drop b4 by exactly one"
                            : "b4 must be unchanged by flips and flops");
        if (steps[i].kind == StepKind::Flip) {
            if (a.dep == 0) flag(i, "flip-depth-zero", "flip attempted at depth zero");
            if (b.dep >= a.dep) flag(i, "flip-depth", "flip must strictly decrease the depth");
        }
        if (steps[i].kind == StepKind::DivToPoint && b.dep > a.dep + 1)
            flag(i, "contraction-depth", "depth may rise by at most one under a contraction");
    }
    return out;
}

} // namespace mmp
} // namespace chitop
