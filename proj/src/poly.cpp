#include "poly.hpp"

#include <algorithm>
#include <sstream>

#include "unipoly.hpp"

namespace chitop {

bool drl_greater(const ExpVec& a, const ExpVec& b) {
    unsigned da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    // equal total degree: greater iff the last differing exponent is smaller
    size_t n = std::min(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

MultiPoly MultiPoly::constant(VarsPtr vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(ExpVec(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarsPtr vars, size_t i, unsigned power) {
    MultiPoly p(std::move(vars));
    if (i >= p.nvars()) throw internal_error("variable index out of range");
    if (power == 0) return constant(p.vars_, 1);
    ExpVec e(p.nvars(), 0);
    e[i] = power;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

MultiPoly MultiPoly::from_terms(VarsPtr vars, std::vector<std::pair<ExpVec, Rat>> terms) {
    MultiPoly p(std::move(vars));
    for (auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw internal_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

const ExpVec& MultiPoly::leading_exp() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(exp_total(terms_.begin()->first));
}

long MultiPoly::degree_in(size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
    return terms_.empty() ? -1 : std::max(d, 0L);
}

void MultiPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    if (e.size() != nvars()) throw internal_error("exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(vars_);
    if (is_zero() || o.is_zero()) return r;
    ExpVec e(nvars());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(vars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading_coeff());
}

MultiPoly MultiPoly::derivative(size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec de = e;
        de[var] -= 1;
        r.add_term(de, c * Rat(static_cast<long>(e[var])));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(size_t var) const {
    long d = degree_in(var);
    if (d < 0) d = 0;
    std::vector<MultiPoly> out(static_cast<size_t>(d) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        ExpVec re = e;
        unsigned k = re[var];
        re[var] = 0;
        out[k].add_term(re, c);
    }
    // trailing entry nonzero unless f == 0
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

MultiPoly MultiPoly::from_coefficients(size_t var, const std::vector<MultiPoly>& coeffs, VarsPtr vars) {
    MultiPoly r(std::move(vars));
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            ExpVec ee = e;
            ee[var] += static_cast<unsigned>(k);
            r.add_term(ee, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::substituted(size_t var, const MultiPoly& value) const {
    auto coeffs = coefficients_in(var);
    MultiPoly r(vars_);
    MultiPoly p = constant(vars_, 1);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) p = p * value;
        r += coeffs[k] * p;
    }
    return r;
}

MultiPoly MultiPoly::substituted_value(size_t var, const Rat& value) const {
    return substituted(var, constant(vars_, value));
}

MultiPoly MultiPoly::dropped_var(size_t var, const VarsPtr& smaller) const {
    if (degree_in(var) > 0) throw internal_error("dropped_var: polynomial still involves variable");
    MultiPoly r(smaller);
    for (const auto& [e, c] : terms_) {
        ExpVec re;
        re.reserve(e.size() - 1);
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var) re.push_back(e[i]);
        r.add_term(re, c);
    }
    return r;
}

MultiPoly MultiPoly::embedded(const VarsPtr& larger, const std::vector<size_t>& where) const {
    MultiPoly r(larger);
    for (const auto& [e, c] : terms_) {
        ExpVec re(larger->size(), 0);
        for (size_t i = 0; i < e.size(); ++i) re[where[i]] = e[i];
        r.add_term(re, c);
    }
    return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool hasVar = exp_total(e) > 0;
        if (!hasVar || a != 1) {
            os << a.get_str();
            if (hasVar) os << "*";
        }
        bool firstVar = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstVar) os << "*";
            firstVar = false;
            os << vars_->name(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return drl_greater(ia->first, ib->first) ? 1 : -1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& d) {
    if (d.is_zero()) throw internal_error("exact_divide by zero");
    MultiPoly q(f.vars());
    MultiPoly r = f;
    const ExpVec& lde = d.leading_exp();
    const Rat& ldc = d.leading_coeff();
    while (!r.is_zero()) {
        const ExpVec& lre = r.leading_exp();
        ExpVec qe(lre.size());
        for (size_t i = 0; i < lre.size(); ++i) {
            if (lre[i] < lde[i]) throw internal_error("exact_divide: not divisible");
            qe[i] = lre[i] - lde[i];
        }
        Rat qc = r.leading_coeff() / ldc;
        MultiPoly qt(f.vars());
        qt.add_term(qe, qc);
        q += qt;
        r -= qt * d;
    }
    return q;
}

namespace exactmath {

static size_t var_index_or_throw(const MultiPoly& f, const std::string& var) {
    auto idx = f.vars()->index_of(var);
    if (!idx) throw precondition_error("unknown variable: " + var);
    return *idx;
}

std::vector<MultiPoly> univariate_view(const MultiPoly& f, const std::string& var) {
    return f.coefficients_in(var_index_or_throw(f, var));
}

MultiPoly formal_derivative(const MultiPoly& f, const std::string& var) {
    return f.derivative(var_index_or_throw(f, var));
}

// Inputs must be univariate in one shared variable. Implemented on the dense
// univariate engine; result is monic.
MultiPoly gcd_univariate(const std::vector<MultiPoly>& gs) {
    if (gs.empty()) throw precondition_error("gcd of empty list");
    const VarsPtr& vars = gs.front().vars();
    std::optional<size_t> var;
    for (const auto& g : gs) {
        for (size_t i = 0; i < g.nvars(); ++i) {
            if (g.degree_in(i) > 0) {
                if (var && *var != i)
                    throw precondition_error("gcd_univariate: inputs involve different variables");
                var = i;
            }
        }
    }
    size_t v = var.value_or(0);
    UniPoly acc; // zero
    for (const auto& g : gs) acc = UniPoly::gcd(acc, UniPoly::from_multipoly(g, v));
    if (acc.is_zero()) throw precondition_error("gcd_univariate: all inputs zero");
    return acc.to_multipoly(vars, v);
}

MultiPoly squarefree_part(const MultiPoly& g) {
    if (g.is_zero()) throw precondition_error("squarefree_part of zero polynomial");
    std::optional<size_t> var;
    for (size_t i = 0; i < g.nvars(); ++i)
        if (g.degree_in(i) > 0) {
            if (var) throw precondition_error("squarefree_part: input not univariate");
            var = i;
        }
    size_t v = var.value_or(0);
    UniPoly u = UniPoly::from_multipoly(g, v);
    return u.squarefree_part().to_multipoly(g.vars(), v);
}

WeightedDegree weighted_degree(const MultiPoly& f, const std::vector<long>& w) {
    if (w.size() != f.nvars()) throw precondition_error("weighted_degree: weight arity mismatch");
    WeightedDegree out;
    if (f.is_zero()) {
        out.minus_infinity = true;
        return out;
    }
    bool first = true;
    bool homog = true;
    long best = 0;
    for (const auto& [e, c] : f.terms()) {
        long d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += w[i] * static_cast<long>(e[i]);
        if (first) {
            best = d;
            first = false;
        } else {
            if (d != best) homog = false;
            best = std::max(best, d);
        }
    }
    out.degree = best;
    out.homogeneous = homog;
    return out;
}

} // namespace exactmath

} // namespace chitop
