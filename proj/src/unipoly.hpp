#pragma once

// Dense univariate polynomials over Q. Internal engine for the Euclidean
// paths (gcd, squarefree part, division); the public surface works on
// MultiPoly values.

#include <vector>

#include "poly.hpp"

namespace chitop {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly from_multipoly(const MultiPoly& f, size_t var);
    MultiPoly to_multipoly(const VarsPtr& vars, size_t var) const;

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;

    // division with remainder; divisor must be nonzero
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic, gcd(0,0)=0
    UniPoly squarefree_part() const; // monic, same distinct roots

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_; // ascending powers
};

} // namespace chitop
