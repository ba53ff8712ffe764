#pragma once

// Minimal ideal-theoretic decision procedures: Buchberger completion in
// degrevlex, normal forms, membership, radical membership through the
// auxiliary-variable construction, Nullstellensatz emptiness, and generic
// rank of a polynomial matrix on a variety.

#include <atomic>
#include <memory>
#include <mutex>

#include "matrix.hpp"
#include "poly.hpp"

namespace chitop {
namespace groebner {

struct GbBudget {
    // S-pairs processed before the engine gives up loudly.
    long pair_limit = 200000;
    std::shared_ptr<std::atomic<long>> pairs_used = std::make_shared<std::atomic<long>>(0);

    void charge(long n) const;
};

class IdealBasis {
public:
    IdealBasis() = default;
    IdealBasis(VarsPtr vars, std::vector<MultiPoly> gens);
    IdealBasis(const IdealBasis& o) : vars_(o.vars_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lk(o.mu_);
        reduced_ = o.reduced_;
    }
    IdealBasis& operator=(const IdealBasis& o) {
        if (this != &o) {
            vars_ = o.vars_;
            gens_ = o.gens_;
            std::lock_guard<std::mutex> lk(o.mu_);
            reduced_ = o.reduced_;
        }
        return *this;
    }

    const VarsPtr& vars() const { return vars_; }
    const std::vector<MultiPoly>& gens() const { return gens_; }

    // Reduced Groebner basis, computed once per value and cached. Canonical
    // for the ideal: monic, autoreduced, sorted.
    const std::vector<MultiPoly>& reduced(const GbBudget& budget) const;

    bool contains_unit(const GbBudget& budget) const;
    bool all_zero() const;

    IdealBasis with_extra(std::vector<MultiPoly> extra) const;

    // Canonical key for memoization: reduced basis rendered as text.
    std::string key(const GbBudget& budget) const;

private:
    VarsPtr vars_;
    std::vector<MultiPoly> gens_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const std::vector<MultiPoly>> reduced_;
};

using IdealPtr = std::shared_ptr<const IdealBasis>;

inline IdealPtr make_ideal(VarsPtr vars, std::vector<MultiPoly> gens) {
    return std::make_shared<IdealBasis>(std::move(vars), std::move(gens));
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

IdealBasis reduce_basis(const IdealBasis& b, const GbBudget& budget);

bool ideal_membership(const MultiPoly& p, const IdealBasis& b, const GbBudget& budget);

// True iff p vanishes at every point of V(b) over an algebraically closed
// field (radical membership, 1 in b + (1 - y*p)).
bool vanishes_on_variety(const MultiPoly& p, const IdealBasis& b, const GbBudget& budget);

bool is_empty_variety(const IdealBasis& b, const GbBudget& budget);

// Largest t such that some t x t minor of m does not vanish identically on
// V(b); 0 for the empty variety or an identically vanishing matrix.
size_t generic_rank(const PolyMatrix& m, const IdealBasis& b, const GbBudget& budget);

} // namespace groebner
} // namespace chitop
