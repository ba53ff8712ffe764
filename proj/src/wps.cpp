#include "wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chitop {
namespace wps {

using eulerchar::AffineLocus;
using eulerchar::ChiEngine;
using groebner::IdealPtr;
using groebner::make_ideal;

static long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

void check_semi_invariant(const CyclicQuotientLocus& q) {
    if (q.order < 1) throw precondition_error("cyclic quotient of non-positive order");
    size_t n = q.ideal->vars()->size();
    if (q.action.size() != n) throw precondition_error("action weight arity mismatch");
    for (const auto& g : q.ideal->gens()) {
        if (g.is_zero()) continue;
        std::optional<long> w;
        for (const auto& [e, c] : g.terms()) {
            long d = 0;
            for (size_t i = 0; i < n; ++i)
                d = mod_pos(d + q.action[i] * static_cast<long>(e[i]), q.order);
            if (!w)
                w = d;
            else if (*w != d)
                throw precondition_error("generator is not semi-invariant: " + g.str());
        }
    }
}

// quotient by the image of the representation: divide out the kernel
static CyclicQuotientLocus normalized(const CyclicQuotientLocus& q) {
    CyclicQuotientLocus out = q;
    long m = q.order;
    for (auto& a : out.action) a = mod_pos(a, m);
    long g = m;
    for (long a : out.action) g = std::gcd(g, a);
    if (g > 1) {
        out.order = m / g;
        for (auto& a : out.action) a /= g;
    }
    return out;
}

// variables forced to zero by the group element j (on the normalized data)
static std::vector<size_t> fixed_vars(const CyclicQuotientLocus& q, long j) {
    std::vector<size_t> f;
    for (size_t i = 0; i < q.action.size(); ++i)
        if (mod_pos(j * q.action[i], q.order) != 0) f.push_back(i);
    return f;
}

static IdealPtr restrict_to_subspace(const IdealPtr& ideal, const std::vector<size_t>& zeroed) {
    const VarsPtr& vars = ideal->vars();
    std::vector<bool> gone(vars->size(), false);
    for (size_t i : zeroed) gone[i] = true;
    std::vector<std::string> names;
    for (size_t i = 0; i < vars->size(); ++i)
        if (!gone[i]) names.push_back(vars->name(i));
    VarsPtr small = make_vars(names);
    std::vector<MultiPoly> gens;
    for (const auto& g : ideal->gens()) {
        MultiPoly h = g;
        for (size_t i : zeroed) h = h.substituted_value(i, Rat(0));
        // drop zeroed variables from the exponent vectors (descending order
        // keeps earlier indices valid)
        std::vector<size_t> sorted = zeroed;
        std::sort(sorted.rbegin(), sorted.rend());
        MultiPoly cur = h;
        VarsPtr curVars = vars;
        std::vector<std::string> curNames = vars->names();
        for (size_t i : sorted) {
            curNames.erase(curNames.begin() + static_cast<long>(i));
            VarsPtr next = make_vars(curNames);
            cur = cur.dropped_var(i, next);
            curVars = next;
        }
        gens.push_back(std::move(cur));
    }
    return make_ideal(small, std::move(gens));
}

long long chi_cyclic_quotient(const CyclicQuotientLocus& q0, ChiEngine& eng) {
    check_semi_invariant(q0);
    CyclicQuotientLocus q = normalized(q0);
    long m = q.order;
    if (m == 1) return eng.chi_affine(AffineLocus(q.ideal));

    // components of the ramification locus: maximal fixed subspaces, i.e.
    // minimal zero-sets among the nontrivial group elements
    std::set<std::vector<size_t>> raw;
    for (long j = 1; j < m; ++j) raw.insert(fixed_vars(q, j));
    std::vector<std::vector<size_t>> comps;
    for (const auto& f : raw) {
        if (f.empty()) throw internal_error("trivial action after normalization");
        bool minimal = true;
        for (const auto& g : raw) {
            if (g == f) continue;
            if (std::includes(f.begin(), f.end(), g.begin(), g.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) comps.push_back(f);
    }

    long long chiX = eng.chi_affine(AffineLocus(q.ideal));

    long long chiRbar = 0;
    long long chiR = 0;
    size_t nc = comps.size();
    for (size_t mask = 1; mask < (1u << nc); ++mask) {
        std::set<size_t> zeroed;
        int bits = 0;
        for (size_t i = 0; i < nc; ++i)
            if (mask & (1u << i)) {
                zeroed.insert(comps[i].begin(), comps[i].end());
                ++bits;
            }
        std::vector<size_t> z(zeroed.begin(), zeroed.end());
        int sign = bits % 2 == 1 ? 1 : -1;

        IdealPtr restricted = restrict_to_subspace(q.ideal, z);
        chiRbar += sign * eng.chi_affine(AffineLocus(restricted));

        CyclicQuotientLocus sub;
        sub.order = m;
        sub.ideal = restricted;
        for (size_t i = 0; i < q.action.size(); ++i)
            if (!zeroed.count(i)) sub.action.push_back(q.action[i]);
        chiR += sign * chi_cyclic_quotient(sub, eng);
    }

    long long diff = chiX - chiRbar;
    if (diff % m != 0) throw internal_error("branched cover count not divisible by group order");
    return diff / m + chiR;
}

long long chi_quotient_average(const CyclicQuotientLocus& q0, ChiEngine& eng) {
    check_semi_invariant(q0);
    CyclicQuotientLocus q = q0;
    for (auto& a : q.action) a = mod_pos(a, q.order);
    long m = q.order;
    long long acc = 0;
    for (long j = 0; j < m; ++j) {
        std::vector<size_t> z = fixed_vars(q, j);
        IdealPtr restricted = restrict_to_subspace(q.ideal, z);
        acc += eng.chi_affine(AffineLocus(restricted));
    }
    if (acc % m != 0) throw internal_error("group average not divisible by group order");
    return acc / m;
}

static void check_weighted_locus(const WeightedLocus& y) {
    if (y.space.weights.size() != y.vars->size())
        throw precondition_error("weight count differs from variable count");
    for (long a : y.space.weights)
        if (a < 1) throw precondition_error("weights must be positive");
    for (const auto& g : y.gens) {
        auto wd = exactmath::weighted_degree(g, y.space.weights);
        if (!wd.minus_infinity && !wd.homogeneous)
            throw precondition_error("generator is not weighted homogeneous: " + g.str());
    }
}

template <class QuotientChi>
static long long chi_wps_rec(const WeightedLocus& y, ChiEngine& eng, QuotientChi&& qchi) {
    if (y.space.weights.empty()) return 0;
    for (const auto& g : y.gens)
        if (!g.is_zero() && g.is_constant()) return 0;

    IdealPtr cone = make_ideal(y.vars, y.gens);
    MultiPoly x0 = MultiPoly::variable(y.vars, 0);

    // trailing locus Y'' = Y with the chart variable set to zero, inside the
    // smaller weighted space
    auto sub_locus = [&]() {
        WeightedLocus sub;
        sub.space.weights.assign(y.space.weights.begin() + 1, y.space.weights.end());
        std::vector<std::string> names(y.vars->names().begin() + 1, y.vars->names().end());
        sub.vars = make_vars(names);
        for (const auto& g : y.gens) {
            MultiPoly h = g.substituted_value(0, Rat(0));
            sub.gens.push_back(h.dropped_var(0, sub.vars));
        }
        return sub;
    };

    if (groebner::vanishes_on_variety(x0, *cone, eng.budget()))
        return chi_wps_rec(sub_locus(), eng, qchi);

    // chart x0 = 1: A^n modulo mu_{a_0} acting with the remaining weights
    CyclicQuotientLocus chart;
    chart.order = y.space.weights[0];
    std::vector<std::string> names(y.vars->names().begin() + 1, y.vars->names().end());
    VarsPtr small = make_vars(names);
    std::vector<MultiPoly> gens;
    for (const auto& g : y.gens) {
        MultiPoly h = g.substituted_value(0, Rat(1));
        gens.push_back(h.dropped_var(0, small));
    }
    chart.ideal = make_ideal(small, std::move(gens));
    for (size_t i = 1; i < y.space.weights.size(); ++i)
        chart.action.push_back(mod_pos(y.space.weights[i], chart.order));

    return qchi(chart, eng) + chi_wps_rec(sub_locus(), eng, qchi);
}

long long chi_wps(const WeightedLocus& y, ChiEngine& eng) {
    check_weighted_locus(y);
    return chi_wps_rec(y, eng,
                       [](const CyclicQuotientLocus& q, ChiEngine& e) { return chi_cyclic_quotient(q, e); });
}

long long chi_wps_via_average(const WeightedLocus& y, ChiEngine& eng) {
    check_weighted_locus(y);
    return chi_wps_rec(y, eng,
                       [](const CyclicQuotientLocus& q, ChiEngine& e) { return chi_quotient_average(q, e); });
}

ExceptionalChi exceptional_divisor_chi(const std::vector<MultiPoly>& equations,
                                       const BlowupWeight& sigma, ChiEngine& eng,
                                       std::optional<long> max_weight) {
    if (equations.empty()) throw precondition_error("exceptional_divisor_chi: no equations");
    const VarsPtr& vars = equations.front().vars();
    if (sigma.numerators.size() != vars->size())
        throw precondition_error("blow-up weight arity mismatch");
    if (sigma.m < 1) throw precondition_error("blow-up weight denominator must be positive");

    WeightedLocus locus;
    locus.space.weights = sigma.numerators;
    locus.vars = vars;
    long heaviest = 0;
    for (const auto& f : equations) {
        if (f.is_zero()) continue;
        // semi-invariance under (1/m)(a_0..a_n); the initial form is the
        // weighted tangent cone
        std::optional<long> residue;
        long minw = 0;
        bool first = true;
        for (const auto& [e, c] : f.terms()) {
            long w = 0;
            for (size_t i = 0; i < e.size(); ++i)
                w += sigma.numerators[i] * static_cast<long>(e[i]);
            long r = mod_pos(w, sigma.m);
            if (!residue)
                residue = r;
            else if (*residue != r) {
                MultiPoly t(vars);
                t.add_term(e, c);
                throw precondition_error("term not homogenizable under the blow-up weight: " +
                                         t.str());
            }
            minw = first ? w : std::min(minw, w);
            first = false;
        }
        MultiPoly initial(vars);
        for (const auto& [e, c] : f.terms()) {
            long w = 0;
            for (size_t i = 0; i < e.size(); ++i)
                w += sigma.numerators[i] * static_cast<long>(e[i]);
            if (w == minw) initial.add_term(e, c);
        }
        if (max_weight && minw > *max_weight) {
            throw precondition_error("initial form weight " + std::to_string(minw) +
                                     " exceeds the configured bound: " + initial.str());
        }
        heaviest = std::max(heaviest, minw);
        locus.gens.push_back(std::move(initial));
    }
    ExceptionalChi out;
    out.chiE = chi_wps(locus, eng);
    out.deltaChi = out.chiE - 1;
    out.initial_weight = heaviest;
    return out;
}

DiscrepancyReport compare_with_reference(long long engine, long long reference,
                                         std::string source) {
    DiscrepancyReport r;
    r.engine = engine;
    r.reference = reference;
    r.matches = engine == reference;
    r.flagged = !r.matches;
    r.source = std::move(source);
    return r;
}

long long chi_cyclic_quotient(const CyclicQuotientLocus& q) {
    ChiEngine eng;
    return chi_cyclic_quotient(q, eng);
}
long long chi_quotient_average(const CyclicQuotientLocus& q) {
    ChiEngine eng;
    return chi_quotient_average(q, eng);
}
long long chi_wps(const WeightedLocus& y) {
    ChiEngine eng;
    return chi_wps(y, eng);
}

} // namespace wps
} // namespace chitop
