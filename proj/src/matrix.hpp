#pragma once

// Exact matrices over Rat or MultiPoly entries, with fraction-free
// elimination for rank and determinants.

#include <vector>

#include "poly.hpp"

namespace chitop {

template <class T>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols, T fill = T())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const T& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

using RatMatrix = ExactMatrix<Rat>;
using PolyMatrix = ExactMatrix<MultiPoly>;

struct RankNullity {
    size_t rank;
    size_t nullity;
};

namespace exactmath {

// Exact rank by fraction-free (Bareiss-style) elimination on the
// denominator-cleared integer matrix.
RankNullity rank_nullity(const RatMatrix& m);

// Determinant of a square polynomial matrix, fraction-free.
MultiPoly det_bareiss(const PolyMatrix& m);

// All t x t minors in deterministic (row-subset, col-subset) lexicographic
// order.
std::vector<MultiPoly> minors_ideal(const PolyMatrix& m, size_t t);

} // namespace exactmath

// Iterates over t-subsets of {0..n-1} in lexicographic order.
class SubsetIter {
public:
    SubsetIter(size_t n, size_t t);
    bool valid() const { return valid_; }
    const std::vector<size_t>& operator*() const { return idx_; }
    void next();

private:
    size_t n_;
    std::vector<size_t> idx_;
    bool valid_;
};

} // namespace chitop
