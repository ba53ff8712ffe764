#pragma once

// The generalized resultant: block matrices T_{g_1..g_k} whose nullity
// counts common zeros with multiplicity, the derived matrices T^0/T^1 for
// fiberwise root counting, and the fiber-count formulas.

#include <optional>

#include "matrix.hpp"
#include "poly.hpp"

namespace chitop {
namespace resultant {

template <class Entry>
struct ResultantMatrixT {
    ExactMatrix<Entry> matrix;
    std::vector<long> degrees; // d_1..d_k of the inputs
    size_t rows() const { return matrix.rows(); }
    size_t cols() const { return matrix.cols(); }
};

using ResultantMatrix = ResultantMatrixT<Rat>;
using PolyResultantMatrix = ResultantMatrixT<MultiPoly>;

// T for univariate scalar polynomials; k >= 2, every deg g_i >= 1.
ResultantMatrix build_T(const std::vector<MultiPoly>& gs);

// Generic block construction from ascending coefficient lists.
template <class Entry>
ResultantMatrixT<Entry> build_T_from_coeffs(const std::vector<std::vector<Entry>>& coeffs,
                                            const Entry& zero);

// deg gcd(gs), computed as the nullity of T (Lemma "number of common zeros
// is exactly the nullity, counted with multiplicity").
size_t common_zero_count(const std::vector<MultiPoly>& gs);

// Number of distinct common roots: s0 - s1 when every degree exceeds 1,
// gcd + squarefree fallback otherwise.
size_t distinct_root_count(const std::vector<MultiPoly>& gs);

struct FiberProfile {
    size_t s0 = 0;
    std::optional<size_t> s1;
    std::vector<bool> leading_vanishes;
    bool condition_a0 = false;
    bool condition_a1 = false;
};

struct ProjectionMatrices {
    std::optional<PolyResultantMatrix> T0;
    std::optional<PolyResultantMatrix> T1;
    bool condition_a0 = false;
    bool condition_a1 = false;
    std::vector<long> degrees;        // degrees in the projection variable
    std::vector<MultiPoly> leading;   // leading coefficients (polynomials)
};

// T^0/T^1 for fs viewed as univariate in `v` with polynomial coefficients.
// k = 1 uses the pair (f, f') resp. the triple (f, f', f''). Absent
// conditions are encoded in the flags, not errors.
ProjectionMatrices build_T0_T1(const std::vector<MultiPoly>& fs, const std::string& v);

// Lemma on fiber cardinality: k = 1 gives deg f1 - s0, k > 1 gives s0 - s1.
size_t fiber_count(const FiberProfile& profile, size_t deg_f1, size_t k);

} // namespace resultant
} // namespace chitop
