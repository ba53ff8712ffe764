#pragma once

// Euler characteristics in weighted projective spaces and cyclic quotients.
// The quotient chi runs through the branched-cover identity
// chi(X/G) = (chi(X) - chi(Rbar))/|G| + chi(R); the group-average route
// chi(X/G) = (1/|G|) sum_g chi(X^g) is kept alongside as an independent
// cross-check.

#include "eulerchar.hpp"

namespace chitop {
namespace wps {

struct WeightedSpace {
    std::vector<long> weights; // a_0..a_n, all >= 1
};

struct WeightedLocus {
    WeightedSpace space;
    VarsPtr vars; // one name per weight
    std::vector<MultiPoly> gens;
};

struct CyclicQuotientLocus {
    long order = 1;              // m
    std::vector<long> action;    // weights mod m, one per variable
    groebner::IdealPtr ideal;
};

// Throws Precondition unless every generator is semi-invariant (all terms of
// one generator share the action weight mod m).
void check_semi_invariant(const CyclicQuotientLocus& q);

long long chi_cyclic_quotient(const CyclicQuotientLocus& q, eulerchar::ChiEngine& eng);
long long chi_quotient_average(const CyclicQuotientLocus& q, eulerchar::ChiEngine& eng);

// Weighted-homogeneity of every generator is a precondition.
long long chi_wps(const WeightedLocus& y, eulerchar::ChiEngine& eng);
// Same chart recursion with the group-average quotient route; oracle side of
// the dual-route check.
long long chi_wps_via_average(const WeightedLocus& y, eulerchar::ChiEngine& eng);

struct BlowupWeight {
    long m = 1;                 // sigma = (1/m)(a_0..a_n)
    std::vector<long> numerators;
};

struct ExceptionalChi {
    long long chiE = 0;
    long long deltaChi = 0;     // chi(E) - chi(point)
    long initial_weight = 0;    // max sigma-weight among the initial forms
};

// chi of the exceptional divisor of the weighted blow-up: the locus of the
// sigma-initial forms inside P(a_0..a_n). Equations must be semi-invariant
// for (1/m)(a_0..a_n); violations name the offending term. When max_weight
// is supplied, initial forms heavier than it are rejected.
ExceptionalChi exceptional_divisor_chi(const std::vector<MultiPoly>& equations,
                                       const BlowupWeight& sigma, eulerchar::ChiEngine& eng,
                                       std::optional<long> max_weight = std::nullopt);

struct DiscrepancyReport {
    long long engine = 0;
    long long reference = 0;
    bool matches = false;
    bool flagged = false; // raised whenever the two disagree
    std::string source;
};

DiscrepancyReport compare_with_reference(long long engine, long long reference,
                                         std::string source);

// Convenience wrappers on a fresh engine.
long long chi_cyclic_quotient(const CyclicQuotientLocus& q);
long long chi_quotient_average(const CyclicQuotientLocus& q);
long long chi_wps(const WeightedLocus& y);

} // namespace wps
} // namespace chitop
