#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "mmp.hpp"
#include "test_util.hpp"
#include "wps.hpp"

using namespace chitop;
using namespace chitop::mmp;

static ThreefoldState state(std::initializer_list<long> betti, long dep, long rho,
                            long aw, long xi) {
    ThreefoldState s;
    auto it = betti.begin();
    s.betti.b0 = *it++;
    s.betti.b1 = *it++;
    s.betti.b2 = *it++;
    s.betti.b3 = IntInterval(*it++);
    s.betti.b4 = *it++;
    s.betti.b5 = *it++;
    s.betti.b6 = *it++;
    s.dep = dep;
    s.rho = rho;
    s.aw = aw;
    s.xi = xi;
    return s;
}

static StepRecord div_point(long chiE, long dep, long aw = 0, long xi = 0) {
    StepRecord st;
    st.kind = StepKind::DivToPoint;
    st.chiE = IntInterval(chiE);
    st.dep = dep;
    st.aw = aw;
    st.xi = xi;
    return st;
}

static StepRecord div_curve(long chiC, long dep) {
    StepRecord st;
    st.kind = StepKind::DivToCurveLCI;
    st.chiC = IntInterval(chiC);
    st.dep = dep;
    return st;
}

static StepRecord flip(long dep) {
    StepRecord st;
    st.kind = StepKind::Flip;
    st.dep = dep;
    return st;
}

static StepRecord flop(long dep) {
    StepRecord st;
    st.kind = StepKind::Flop;
    st.dep = dep;
    return st;
}

TEST_CASE("divisorial contraction to a point updates b2, b3, b4") {
    auto s = state({1, 0, 2, 7, 2, 0, 1}, 2, 3, 1, 3);
    auto next = apply_step(s, div_point(5, 2, 1, 3));
    CHECK(next.betti.b0 == 1);
    CHECK(next.betti.b1 == 0);
    CHECK(next.betti.b2 == 1);
    CHECK(next.betti.b3 == IntInterval(9)); // b3 + chi(E) - 3 with chi(E) = 5
    CHECK(next.betti.b4 == 1);
    CHECK(next.betti.b5 == 0);
    CHECK(next.betti.b6 == 1);
}

TEST_CASE("flop leaves the Betti vector alone") {
    auto s = state({1, 0, 3, 11, 3, 0, 1}, 1, 2, 0, 1);
    auto next = apply_step(s, flop(1));
    CHECK(next.betti == s.betti);
}

TEST_CASE("LCI curve with chi(C) = 2 leaves b3 alone") {
    auto s = state({1, 0, 2, 7, 2, 0, 1}, 1, 3, 0, 1);
    auto next = apply_step(s, div_curve(2, 1));
    CHECK(next.betti.b3 == IntInterval(7));
    CHECK(next.betti.b2 == 1);
    CHECK(next.betti.b4 == 1);
}

TEST_CASE("flip widens b3 and requires positive depth") {
    auto s = state({1, 0, 2, 7, 2, 0, 1}, 2, 3, 1, 3);
    auto next = apply_step(s, flip(1));
    CHECK(next.betti.b2 == 2);
    CHECK(next.betti.b3.lo <= 7);
    CHECK(next.betti.b3.hi >= 7);
    CHECK(next.betti.b3.hi - next.betti.b3.lo > 0);

    auto gorenstein = state({1, 0, 2, 7, 2, 0, 1}, 0, 3, 0, 0);
    CHECK_THROWS_AS(apply_step(gorenstein, flip(0)), Error);

    auto bad = apply_step(s, flip(1));
    (void)bad;
    CHECK_THROWS_AS(apply_step(s, flip(2)), Error); // depth must strictly drop
}

TEST_CASE("b2/b4 exhaustion is an error") {
    auto s = state({1, 0, 0, 7, 0, 0, 1}, 1, 3, 0, 1);
    CHECK_THROWS_AS(apply_step(s, div_point(3, 1)), Error);
}

TEST_CASE("divisorial steps invert exactly") {
    testutil::Rng rng(77);
    for (int t = 0; t < 20; ++t) {
        auto s = state({1, 0, rng.pick(1, 5), rng.pick(0, 20), rng.pick(1, 5), 0, 1},
                       rng.pick(0, 3), 3, 0, 0);
        StepRecord st = t % 2 == 0 ? div_point(rng.pick(-10, 10), s.dep)
                                   : div_curve(rng.pick(-4, 4), s.dep);
        auto down = apply_step(s, st);
        auto back = apply_step_inverse(down, st);
        CHECK(back.betti == s.betti);
    }
}

TEST_CASE("catalog loads and weight bounds match the printed formulas") {
    Catalog cat = load_catalog(CHITOP_CATALOG_PATH);
    CHECK(cat.version == 1);
    CHECK(cat.rows.size() >= 50);

    auto find = [&](const std::string& id) -> const CatalogEntry& {
        for (const auto& r : cat.rows)
            if (r.id == id) return r;
        throw std::runtime_error("missing row " + id);
    };

    CHECK(catalog_weight_bound(find("wm-cA/m"), 5) == 6);
    CHECK(catalog_weight_bound(find("wm-cD/3-1"), 9) == 12);
    CHECK(catalog_weight_bound(find("wm-cE/2-1"), 2) == 18);
    CHECK(catalog_weight_bound(find("wm-cAx/4-1"), 7) == 10);
    CHECK(!catalog_weight_bound(find("dc-w-morphism"), 3)); // deferred to D

    // every affine bound formula is nondecreasing in the depth
    for (const auto& r : cat.rows) {
        auto b1 = catalog_weight_bound(r, r.min_dep + 1);
        auto b2 = catalog_weight_bound(r, r.min_dep + 2);
        if (b1 && b2) CHECK(*b1 <= *b2);
    }
}

TEST_CASE("catalog samples: chi(E) stays within the printed bound") {
    Catalog cat = load_catalog(CHITOP_CATALOG_PATH);
    eulerchar::ChiEngine eng;
    int sampled = 0;
    for (const auto& row : cat.rows) {
        if (!row.sample) continue;
        const auto& s = *row.sample;
        VarsPtr vars = make_vars(s.vars);
        std::vector<MultiPoly> eqs;
        for (const auto& t : s.equations) eqs.push_back(cli::parse_polynomial(t, vars));
        wps::BlowupWeight sigma{s.sigma_m, s.sigma};
        auto e = wps::exceptional_divisor_chi(eqs, sigma, eng);
        auto wb = catalog_weight_bound(row, s.dep);
        long weight_bound = wb ? std::max(*wb, e.initial_weight) : e.initial_weight;
        long k = static_cast<long>(s.equations.size());
        bounds::Big cap = bounds::bound_M(row.ambient_dim, weight_bound, k) + 1;
        bounds::Big delta(std::to_string(e.deltaChi));
        if (delta < 0) delta = -delta;
        CHECK(delta <= cap);
        ++sampled;
    }
    CHECK(sampled >= 8);
}

TEST_CASE("validate_run accepts a compliant mixed run") {
    std::vector<ThreefoldState> states;
    std::vector<StepRecord> steps;
    states.push_back(state({1, 0, 4, 9, 4, 0, 1}, 2, 3, 1, 3));
    auto push = [&](const StepRecord& st) {
        steps.push_back(st);
        states.push_back(apply_step(states.back(), st));
    };
    push(div_point(5, 2, 1, 3));
    push(flop(2));
    push(flip(1));
    push(div_curve(2, 1));
    push(flop(1));
    push(div_point(3, 1, 0, 1));

    auto violations = validate_run(states, steps, 3);
    size_t hard = 0;
    for (const auto& v : violations)
        if (v.severity == Severity::Violation) ++hard;
    CHECK(hard == 0);
}

TEST_CASE("validate_run flags each defect class") {
    auto base = state({1, 0, 3, 9, 3, 0, 1}, 1, 3, 0, 1);

    SUBCASE("step count over 2 rho") {
        std::vector<ThreefoldState> states{base};
        std::vector<StepRecord> steps;
        for (int i = 0; i < 3; ++i) {
            steps.push_back(div_point(3, 1));
            states.push_back(apply_step(states.back(), steps.back()));
        }
        auto v = validate_run(states, steps, 1); // allows only 2 non-flop steps
        bool found = false;
        for (const auto& x : v) found = found || x.check == "step-count";
        CHECK(found);
    }

    SUBCASE("divisorial step that does not drop b2") {
        std::vector<ThreefoldState> states{base, base}; // forged: no change
        std::vector<StepRecord> steps{div_point(3, 1)};
        auto v = validate_run(states, steps, 3);
        bool found = false;
        for (const auto& x : v) found = found || x.check == "b2-step";
        CHECK(found);
    }

    SUBCASE("flop that changes b4") {
        auto forged = base;
        forged.betti.b4 -= 1;
        std::vector<ThreefoldState> states{base, forged};
        std::vector<StepRecord> steps{flop(1)};
        auto v = validate_run(states, steps, 3);
        bool found = false;
        for (const auto& x : v) found = found || x.check == "b4-step";
        CHECK(found);
    }

    SUBCASE("xi exceeding twice the depth") {
        auto bad = base;
        bad.xi = 5;
        bad.dep = 1;
        std::vector<ThreefoldState> states{bad};
        auto v = validate_run(states, {}, 3);
        bool found = false;
        for (const auto& x : v) found = found || x.check == "xi-depth";
        CHECK(found);
    }

    SUBCASE("depth exceeding rho") {
        auto bad = base;
        bad.dep = 4;
        bad.xi = 0;
        std::vector<ThreefoldState> states{bad};
        auto v = validate_run(states, {}, 3);
        bool found = false;
        for (const auto& x : v) found = found || x.check == "depth-rho";
        CHECK(found);
    }

    SUBCASE("b3 above the PhiBar cap") {
        auto bad = base;
        bad.betti.b3 = IntInterval(BigInt(0), bounds::bound_PhiBar(3) + bad.betti.b3.hi + 1);
        std::vector<ThreefoldState> states{base, bad};
        std::vector<StepRecord> steps{flop(1)};
        auto v = validate_run(states, steps, 3);
        bool found = false;
        for (const auto& x : v) found = found || x.check == "b3-cap";
        CHECK(found);
    }

    SUBCASE("flip at depth zero") {
        auto gor = base;
        gor.dep = 0;
        gor.xi = 0;
        std::vector<ThreefoldState> states{gor, gor};
        std::vector<StepRecord> steps{flip(0)};
        auto v = validate_run(states, steps, 3);
        bool found = false;
        for (const auto& x : v) found = found || x.check == "flip-depth-zero";
        CHECK(found);
    }
}

TEST_CASE("run-level invariant: b2 drop counts divisorial steps") {
    std::vector<ThreefoldState> states;
    std::vector<StepRecord> steps;
    states.push_back(state({1, 0, 5, 9, 5, 0, 1}, 2, 3, 1, 3));
    int divisorial = 0;
    testutil::Rng rng(79);
    for (int i = 0; i < 8; ++i) {
        StepRecord st;
        long pickKind = rng.pick(0, 2);
        if (pickKind == 0 && states.back().betti.b2 > 1) {
            st = div_point(rng.pick(-3, 6), states.back().dep);
            ++divisorial;
        } else if (pickKind == 1 && states.back().dep > 0) {
            st = flip(states.back().dep - 1);
        } else {
            st = flop(states.back().dep);
        }
        steps.push_back(st);
        states.push_back(apply_step(states.back(), st));
    }
    CHECK(states.front().betti.b2 - states.back().betti.b2 == divisorial);
}

TEST_CASE("interval tracking is sound against exact replays") {
    auto s0 = state({1, 0, 3, 9, 3, 0, 1}, 1, 3, 0, 1);
    // exact replay
    auto exact1 = apply_step(s0, div_point(5, 1));
    auto exact2 = apply_step(exact1, div_curve(2, 1));
    // interval replay: replace the chi values by enclosing intervals
    StepRecord wide1 = div_point(0, 1);
    wide1.chiE = IntInterval(BigInt(-7), BigInt(7));
    StepRecord wide2 = div_curve(0, 1);
    wide2.chiC = IntInterval(BigInt(-3), BigInt(3));
    auto blur1 = apply_step(s0, wide1);
    auto blur2 = apply_step(blur1, wide2);
    CHECK(blur2.betti.b3.contains(exact2.betti.b3));
}
