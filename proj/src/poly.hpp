#pragma once

// Sparse exact-rational multivariate polynomials over a fixed, ordered
// variable set. Terms are kept in a map sorted by descending
// degree-reverse-lexicographic order, so begin() is always the leading term
// and iteration order is canonical.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace chitop {

using Rat = mpq_class;
using BigInt = mpz_class;

// Reduced rational with positive denominator. mpq_class arithmetic keeps
// results canonical as long as inputs are; raw (num, den) pairs must pass
// through here.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<size_t> index_of(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

private:
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VarSet>;

inline VarsPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

using ExpVec = std::vector<unsigned>;

inline unsigned exp_total(const ExpVec& e) {
    unsigned t = 0;
    for (unsigned x : e) t += x;
    return t;
}

// true iff a > b in degrevlex
bool drl_greater(const ExpVec& a, const ExpVec& b);

struct DrlDescending {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return drl_greater(a, b); }
};

class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rat, DrlDescending>;

    MultiPoly() = default;
    explicit MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(VarsPtr vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(VarsPtr vars, const Rat& c);
    static MultiPoly variable(VarsPtr vars, size_t i, unsigned power = 1);
    static MultiPoly from_terms(VarsPtr vars, std::vector<std::pair<ExpVec, Rat>> terms);

    const VarsPtr& vars() const { return vars_; }
    size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0); }
    Rat constant_value() const;

    const ExpVec& leading_exp() const;
    const Rat& leading_coeff() const;

    long total_degree() const; // -1 for the zero polynomial
    long degree_in(size_t var) const;

    void add_term(const ExpVec& e, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const Rat& c) const;
    MultiPoly pow(unsigned e) const;
    MultiPoly monic() const; // divide by leading coefficient

    MultiPoly derivative(size_t var) const;

    // Coefficients of v^0, v^1, ... as polynomials with zero exponent in v.
    std::vector<MultiPoly> coefficients_in(size_t var) const;
    static MultiPoly from_coefficients(size_t var, const std::vector<MultiPoly>& coeffs, VarsPtr vars);

    // General substitution: var := value (a polynomial over the same VarSet).
    MultiPoly substituted(size_t var, const MultiPoly& value) const;
    MultiPoly substituted_value(size_t var, const Rat& value) const;
    // Requires degree_in(var) == 0: re-expresses over a VarSet without `var`.
    MultiPoly dropped_var(size_t var, const VarsPtr& smaller) const;
    // Inverse of dropped_var: embeds into a larger VarSet; `where[i]` gives
    // the position of our variable i in the larger set.
    MultiPoly embedded(const VarsPtr& larger, const std::vector<size_t>& where) const;

    Rat eval(const std::vector<Rat>& point) const;

    // Canonical display, deterministic. "0" for the zero polynomial.
    std::string str() const;
    // Total order usable as a map key (vars are assumed compatible).
    static int compare(const MultiPoly& a, const MultiPoly& b);
    bool operator<(const MultiPoly& o) const { return compare(*this, o) < 0; }

private:
    VarsPtr vars_;
    TermMap terms_;
};

// Multivariate exact division: returns f/d when d divides f exactly in the
// polynomial ring; throws Internal otherwise. Used by fraction-free
// elimination where divisibility is guaranteed.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& d);

struct WeightedDegree {
    bool minus_infinity = false; // the zero polynomial
    long degree = 0;
    bool homogeneous = false;
};

namespace exactmath {

std::vector<MultiPoly> univariate_view(const MultiPoly& f, const std::string& var);
MultiPoly formal_derivative(const MultiPoly& f, const std::string& var);
MultiPoly gcd_univariate(const std::vector<MultiPoly>& gs);
MultiPoly squarefree_part(const MultiPoly& g);
WeightedDegree weighted_degree(const MultiPoly& f, const std::vector<long>& w);

} // namespace exactmath

} // namespace chitop
