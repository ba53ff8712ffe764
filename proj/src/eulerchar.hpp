#pragma once

// Exact topological Euler characteristics of affine algebraic sets over C,
// by projection-fiber stratification. One projection step splits the base
// into: the full-rank locus of T^0 (fibers of known constant size), the
// vanishing-leading-coefficient strata (handled by truncation and
// inclusion-exclusion), and the remaining locus, where fiber cardinality is
// integrated against chi over the rank level sets of T^0 and T^1.

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "resultant.hpp"

namespace chitop {
namespace eulerchar {

struct AffineLocus {
    size_t n = 0;
    groebner::IdealPtr ideal;

    AffineLocus() = default;
    AffineLocus(groebner::IdealPtr id) : n(id->vars()->size()), ideal(std::move(id)) {}
};

struct ConstructibleExpr {
    std::vector<std::pair<long long, AffineLocus>> parts;
};

enum class FiberKind { Empty, Finite, Line };

struct StratumReport {
    int depth = 0;
    std::string stratum;
    FiberKind kind = FiberKind::Finite;
    long long multiplier = 0; // fiber cardinality for Finite
    long long chi = 0;
};

struct ChiOptions {
    std::optional<std::vector<std::string>> projection_order;
    long gb_pair_limit = 400000;
    long node_budget = 2000000;
    int max_depth = 96;
    int parallel = 1;
    bool trace = false;
};

struct UnionChi {
    long long exact = 0;
    BigInt bound; // (2^k - 1) * M when M is supplied
};

class ChiEngine {
public:
    explicit ChiEngine(ChiOptions opt = {});

    long long chi_affine(const AffineLocus& locus);
    long long chi_affine(const groebner::IdealPtr& ideal) { return chi_affine(AffineLocus(ideal)); }

    // chi of the preimage of V(J) under the projection dropping `v`, where
    // the fibers are cut by fs. J lives in the variables of fs minus v.
    long long chi_fiberwise(const groebner::IdealPtr& J, const std::vector<MultiPoly>& fs,
                            const std::string& v);

    long long chi_constructible(const ConstructibleExpr& e);

    UnionChi union_chi(const std::vector<AffineLocus>& loci,
                       const std::optional<BigInt>& M = std::nullopt);

    long long chi_base_univariate(const groebner::IdealPtr& ideal);

    const groebner::GbBudget& budget() const { return gb_; }
    const std::vector<StratumReport>& trace() const { return trace_; }
    const ChiOptions& options() const { return opt_; }

private:
    long long chi_ideal(const groebner::IdealPtr& ideal, int depth);
    long long chi_preimage(const groebner::IdealPtr& J, const std::vector<MultiPoly>& fs,
                           int depth);

    size_t choose_projection_var(const VarsPtr& vars, const std::vector<MultiPoly>& gens) const;
    void charge_node();
    void record(int depth, std::string what, FiberKind kind, long long mult, long long chi);

    ChiOptions opt_;
    groebner::GbBudget gb_;
    std::atomic<long> nodes_{0};
    std::mutex memo_mu_;
    std::map<std::string, long long> memo_;
    std::mutex trace_mu_;
    std::vector<StratumReport> trace_;
};

// Convenience wrappers with a fresh default engine (the operations are pure).
long long chi_affine(const AffineLocus& locus,
                     const std::optional<std::vector<std::string>>& order = std::nullopt);
long long chi_fiberwise(const groebner::IdealPtr& J, const std::vector<MultiPoly>& fs,
                        const std::string& v);
long long chi_constructible(const ConstructibleExpr& e);
UnionChi union_chi(const std::vector<AffineLocus>& loci,
                   const std::optional<BigInt>& M = std::nullopt);
long long chi_base_univariate(const groebner::IdealPtr& ideal);

} // namespace eulerchar
} // namespace chitop
