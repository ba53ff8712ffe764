#pragma once

// Shared test helpers: quick polynomial construction through the expression
// parser, seeded random generators, and independent oracles (dense Euclid,
// factored-construction squarefree checks) kept apart from the engine paths
// they validate.

#include <random>
#include <string>
#include <vector>

#include "eulerchar.hpp"
#include "problem.hpp"

namespace testutil {

using namespace chitop;

inline VarsPtr V(std::initializer_list<std::string> names) {
    return make_vars(std::vector<std::string>(names));
}

inline MultiPoly P(const VarsPtr& vars, const std::string& text) {
    return cli::parse_polynomial(text, vars);
}

inline std::vector<MultiPoly> Ps(const VarsPtr& vars, std::initializer_list<std::string> texts) {
    std::vector<MultiPoly> out;
    for (const auto& t : texts) out.push_back(P(vars, t));
    return out;
}

inline groebner::IdealPtr ideal(const VarsPtr& vars, std::initializer_list<std::string> texts) {
    return groebner::make_ideal(vars, Ps(vars, texts));
}

inline eulerchar::AffineLocus locus(const VarsPtr& vars,
                                    std::initializer_list<std::string> texts) {
    return eulerchar::AffineLocus(ideal(vars, texts));
}

// ----------------------------------------------------------- dense Euclid

// Independent univariate engine over Q for oracle purposes: dense ascending
// coefficient vectors, plain long-division Euclid.
using Dense = std::vector<Rat>;

inline void dense_trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Dense dense_rem(Dense a, const Dense& b) {
    dense_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        dense_trim(a);
    }
    return a;
}

inline Dense dense_gcd(Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        Dense r = dense_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat inv = Rat(1) / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

inline long dense_deg(const Dense& p) { return static_cast<long>(p.size()) - 1; }

inline Dense dense_deriv(const Dense& p) {
    Dense d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    dense_trim(d);
    return d;
}

inline Dense to_dense(const MultiPoly& f, size_t var) {
    Dense out;
    for (const auto& [e, c] : f.terms()) {
        size_t k = e[var];
        if (out.size() <= k) out.resize(k + 1, Rat(0));
        out[k] += c;
    }
    dense_trim(out);
    return out;
}

inline MultiPoly from_dense(const Dense& p, const VarsPtr& vars, size_t var) {
    MultiPoly r(vars);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        ExpVec e(vars->size(), 0);
        e[var] = static_cast<unsigned>(i);
        r.add_term(e, p[i]);
    }
    return r;
}

// --------------------------------------------------------------- randoms

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    }

    // random univariate polynomial with the exact degree requested
    Dense dense_poly(long deg, long cmax = 9) {
        Dense p(static_cast<size_t>(deg) + 1, Rat(0));
        for (long i = 0; i <= deg; ++i) p[static_cast<size_t>(i)] = Rat(pick(-cmax, cmax));
        while (p.back() == 0) p.back() = Rat(pick(-cmax, cmax));
        return p;
    }

    // sparse multivariate polynomial: up to `terms` monomials of total
    // degree <= deg
    MultiPoly sparse_poly(const VarsPtr& vars, long deg, long terms, long cmax = 5) {
        MultiPoly p(vars);
        for (long t = 0; t < terms; ++t) {
            ExpVec e(vars->size(), 0);
            long budget = pick(0, deg);
            for (size_t i = 0; i < e.size() && budget > 0; ++i) {
                long take = pick(0, budget);
                e[i] = static_cast<unsigned>(take);
                budget -= take;
            }
            long c = pick(-cmax, cmax);
            if (c != 0) p.add_term(e, Rat(c));
        }
        return p;
    }
};

} // namespace testutil
