#include "resultant.hpp"

#include <algorithm>

#include "unipoly.hpp"

namespace chitop {
namespace resultant {

// Block layout: row blocks i = 1..k-1, each (d_i + d_k) rows; the first
// column block (width d_k) holds A^i = shifted coefficient columns of g_i,
// column block i (width d_i) holds B^i built from g_k. Entry (p,q) of A^i is
// a_{i, d_i + q - p} for 0 <= p - q <= d_i, so each column repeats the
// coefficient vector one row further down.
template <class Entry>
ResultantMatrixT<Entry> build_T_from_coeffs(const std::vector<std::vector<Entry>>& coeffs,
                                            const Entry& zero) {
    size_t k = coeffs.size();
    if (k < 2) throw precondition_error("generalized resultant needs at least two polynomials");
    std::vector<long> deg(k);
    for (size_t i = 0; i < k; ++i) {
        deg[i] = static_cast<long>(coeffs[i].size()) - 1;
        if (deg[i] < 1) throw precondition_error("condition (A) violated: constant polynomial");
    }
    long dk = deg[k - 1];
    long rows = 0, cols = dk;
    for (size_t i = 0; i + 1 < k; ++i) {
        rows += deg[i] + dk;
        cols += deg[i];
    }
    ExactMatrix<Entry> m(static_cast<size_t>(rows), static_cast<size_t>(cols), zero);

    long row0 = 0;
    long colB = dk; // running start of column block i
    for (size_t i = 0; i + 1 < k; ++i) {
        long di = deg[i];
        // A^i: (di + dk) x dk from g_i
        for (long q = 0; q < dk; ++q) {
            for (long p = q; p <= q + di; ++p) {
                m.at(static_cast<size_t>(row0 + p), static_cast<size_t>(q)) =
                    coeffs[i][static_cast<size_t>(di + q - p)];
            }
        }
        // B^i: (di + dk) x di from g_k
        for (long q = 0; q < di; ++q) {
            for (long p = q; p <= q + dk; ++p) {
                m.at(static_cast<size_t>(row0 + p), static_cast<size_t>(colB + q)) =
                    coeffs[k - 1][static_cast<size_t>(dk + q - p)];
            }
        }
        row0 += di + dk;
        colB += di;
    }
    return {std::move(m), std::move(deg)};
}

template ResultantMatrixT<Rat> build_T_from_coeffs<Rat>(const std::vector<std::vector<Rat>>&,
                                                        const Rat&);
template ResultantMatrixT<MultiPoly>
build_T_from_coeffs<MultiPoly>(const std::vector<std::vector<MultiPoly>>&, const MultiPoly&);

static size_t shared_variable(const std::vector<MultiPoly>& gs) {
    std::optional<size_t> var;
    for (const auto& g : gs)
        for (size_t i = 0; i < g.nvars(); ++i)
            if (g.degree_in(i) > 0) {
                if (var && *var != i)
                    throw precondition_error("inputs are not univariate in a shared variable");
                var = i;
            }
    return var.value_or(0);
}

ResultantMatrix build_T(const std::vector<MultiPoly>& gs) {
    if (gs.size() < 2) throw precondition_error("build_T needs k >= 2 polynomials");
    size_t v = shared_variable(gs);
    std::vector<std::vector<Rat>> coeffs;
    for (const auto& g : gs) {
        UniPoly u = UniPoly::from_multipoly(g, v);
        if (u.degree() < 1) throw precondition_error("condition (A) violated: constant polynomial");
        coeffs.push_back(u.coeffs());
    }
    return build_T_from_coeffs<Rat>(coeffs, Rat(0));
}

size_t common_zero_count(const std::vector<MultiPoly>& gs) {
    std::vector<MultiPoly> live;
    for (const auto& g : gs)
        if (!g.is_zero()) live.push_back(g);
    if (live.empty()) throw precondition_error("common_zero_count: all inputs zero");
    for (const auto& g : live)
        if (g.is_constant()) return 0;
    if (live.size() == 1) {
        size_t v = shared_variable(live);
        return static_cast<size_t>(live[0].degree_in(v));
    }
    ResultantMatrix T = build_T(live);
    return exactmath::rank_nullity(T.matrix).nullity;
}

size_t distinct_root_count(const std::vector<MultiPoly>& gs) {
    std::vector<MultiPoly> live;
    for (const auto& g : gs)
        if (!g.is_zero()) live.push_back(g);
    if (live.empty()) throw precondition_error("distinct_root_count: all inputs zero");
    for (const auto& g : live)
        if (g.is_constant()) return 0;
    size_t v = shared_variable(live);
    bool small = live.size() == 1;
    for (const auto& g : live)
        if (g.degree_in(v) <= 1) small = true;
    if (small) {
        // degree <= 1 falls outside the s0 - s1 lemma; answer by gcd
        MultiPoly g = exactmath::gcd_univariate(live);
        if (g.is_constant()) return 0;
        return static_cast<size_t>(exactmath::squarefree_part(g).degree_in(v));
    }
    std::vector<MultiPoly> with_derivs = live;
    for (const auto& g : live) with_derivs.push_back(g.derivative(v));
    size_t s0 = exactmath::rank_nullity(build_T(live).matrix).nullity;
    size_t s1 = exactmath::rank_nullity(build_T(with_derivs).matrix).nullity;
    return s0 - s1;
}

ProjectionMatrices build_T0_T1(const std::vector<MultiPoly>& fs, const std::string& v) {
    if (fs.empty()) throw precondition_error("build_T0_T1: empty system");
    auto idx = fs.front().vars()->index_of(v);
    if (!idx) throw precondition_error("unknown projection variable: " + v);
    size_t var = *idx;

    ProjectionMatrices out;
    std::vector<std::vector<MultiPoly>> coeffs;
    for (const auto& f : fs) {
        auto cs = f.coefficients_in(var);
        out.degrees.push_back(static_cast<long>(cs.size()) - 1);
        out.leading.push_back(cs.back());
        coeffs.push_back(std::move(cs));
    }
    size_t k = fs.size();
    const MultiPoly zero(fs.front().vars());

    auto deriv_coeffs = [](const std::vector<MultiPoly>& cs) {
        std::vector<MultiPoly> d;
        for (size_t j = 1; j < cs.size(); ++j)
            d.push_back(cs[j].scaled(Rat(static_cast<long>(j))));
        if (d.empty()) d.push_back(MultiPoly(cs.front().vars()));
        return d;
    };

    if (k == 1) {
        long d1 = out.degrees[0];
        out.condition_a0 = d1 >= 2;
        out.condition_a1 = d1 >= 3;
        if (out.condition_a0) {
            auto dc = deriv_coeffs(coeffs[0]);
            out.T0 = build_T_from_coeffs<MultiPoly>({coeffs[0], dc}, zero);
            if (out.condition_a1) {
                auto ddc = deriv_coeffs(dc);
                out.T1 = build_T_from_coeffs<MultiPoly>({coeffs[0], dc, ddc}, zero);
            }
        }
    } else {
        bool a0 = true, a1 = true;
        for (long d : out.degrees) {
            a0 = a0 && d >= 1;
            a1 = a1 && d >= 2;
        }
        out.condition_a0 = a0;
        out.condition_a1 = a1;
        if (a0) out.T0 = build_T_from_coeffs<MultiPoly>(coeffs, zero);
        if (a1) {
            std::vector<std::vector<MultiPoly>> both = coeffs;
            for (const auto& cs : coeffs) both.push_back(deriv_coeffs(cs));
            out.T1 = build_T_from_coeffs<MultiPoly>(both, zero);
        }
    }
    return out;
}

size_t fiber_count(const FiberProfile& profile, size_t deg_f1, size_t k) {
    for (bool v : profile.leading_vanishes)
        if (v) throw precondition_error("fiber_count: vanishing leading coefficient not stratified away");
    if (k == 1) {
        if (!profile.condition_a0)
            throw precondition_error("fiber_count: condition (A^0) required for k = 1");
        if (profile.s0 > deg_f1) throw precondition_error("fiber_count: s0 exceeds degree");
        return deg_f1 - profile.s0;
    }
    if (!profile.condition_a1)
        throw precondition_error("fiber_count: condition (A^1) required for k > 1");
    if (!profile.s1) throw precondition_error("fiber_count: s1 missing");
    if (*profile.s1 > profile.s0) throw precondition_error("fiber_count: s1 exceeds s0");
    return profile.s0 - *profile.s1;
}

} // namespace resultant
} // namespace chitop
