#include "matrix.hpp"

namespace chitop {

SubsetIter::SubsetIter(size_t n, size_t t) : n_(n), idx_(t), valid_(t <= n) {
    for (size_t i = 0; i < t; ++i) idx_[i] = i;
}

void SubsetIter::next() {
    if (idx_.empty()) {
        valid_ = false;
        return;
    }
    size_t t = idx_.size();
    size_t i = t;
    while (i-- > 0) {
        if (idx_[i] + (t - i) <= n_ - 1 + 0) {
            if (idx_[i] + 1 <= n_ - (t - i)) {
                ++idx_[i];
                for (size_t j = i + 1; j < t; ++j) idx_[j] = idx_[j - 1] + 1;
                return;
            }
        }
    }
    valid_ = false;
}

namespace exactmath {

RankNullity rank_nullity(const RatMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    // clear denominators row by row; rank is unchanged
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (size_t r = 0; r < rows; ++r) {
        BigInt lcm = 1;
        for (size_t c = 0; c < cols; ++c) {
            const Rat& x = m.at(r, c);
            BigInt den = x.get_den();
            BigInt g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (size_t c = 0; c < cols; ++c) {
            const Rat& x = m.at(r, c);
            a[r][c] = x.get_num() * (lcm / x.get_den());
        }
    }
    size_t rank = 0;
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t pivot = pr;
        while (pivot < rows && a[pivot][pc] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pr], a[pivot]);
        for (size_t r = pr + 1; r < rows; ++r) {
            if (a[r][pc] == 0) continue;
            // integer row elimination; scale keeps entries integral
            BigInt f1 = a[pr][pc], f2 = a[r][pc];
            BigInt g;
            mpz_gcd(g.get_mpz_t(), f1.get_mpz_t(), f2.get_mpz_t());
            f1 /= g;
            f2 /= g;
            for (size_t c = pc; c < cols; ++c) a[r][c] = a[r][c] * f1 - a[pr][c] * f2;
        }
        ++rank;
        ++pr;
    }
    return {rank, cols - rank};
}

MultiPoly det_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) throw precondition_error("determinant of empty matrix");
    const VarsPtr& vars = m.at(0, 0).vars();
    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);

    int sign = 1;
    MultiPoly prev = MultiPoly::constant(vars, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        // pivot: prefer the sparsest nonzero entry in the column
        size_t pivot = n;
        size_t best = SIZE_MAX;
        for (size_t r = k; r < n; ++r) {
            if (a[r][k].is_zero()) continue;
            size_t nt = a[r][k].terms().size();
            if (nt < best) {
                best = nt;
                pivot = r;
            }
        }
        if (pivot == n) return MultiPoly(vars); // zero column => det 0
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (size_t r = k + 1; r < n; ++r) {
            for (size_t c = k + 1; c < n; ++c) {
                MultiPoly num = a[r][c] * a[k][k] - a[r][k] * a[k][c];
                a[r][c] = num.is_zero() ? num : exact_divide(num, prev);
            }
            a[r][k] = MultiPoly(vars);
        }
        prev = a[k][k];
    }
    MultiPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::vector<MultiPoly> minors_ideal(const PolyMatrix& m, size_t t) {
    if (t == 0) throw precondition_error("minors of size zero");
    if (t > std::min(m.rows(), m.cols()))
        throw precondition_error("minor size exceeds matrix dimensions");
    std::vector<MultiPoly> out;
    const VarsPtr& vars = m.at(0, 0).vars();
    for (SubsetIter ri(m.rows(), t); ri.valid(); ri.next()) {
        for (SubsetIter ci(m.cols(), t); ci.valid(); ci.next()) {
            PolyMatrix sub(t, t, MultiPoly(vars));
            for (size_t i = 0; i < t; ++i)
                for (size_t j = 0; j < t; ++j) sub.at(i, j) = m.at((*ri)[i], (*ci)[j]);
            out.push_back(det_bareiss(sub));
        }
    }
    return out;
}

} // namespace exactmath

} // namespace chitop
