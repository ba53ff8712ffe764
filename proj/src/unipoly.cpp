#include "unipoly.hpp"

namespace chitop {

UniPoly UniPoly::from_multipoly(const MultiPoly& f, size_t var) {
    std::vector<Rat> c;
    for (const auto& [e, coeff] : f.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw precondition_error("polynomial is not univariate in the requested variable");
        size_t k = e[var];
        if (c.size() <= k) c.resize(k + 1, Rat(0));
        c[k] += coeff;
    }
    return UniPoly(std::move(c));
}

MultiPoly UniPoly::to_multipoly(const VarsPtr& vars, size_t var) const {
    MultiPoly r(vars);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        ExpVec e(vars->size(), 0);
        e[var] = static_cast<unsigned>(k);
        r.add_term(e, c_[k]);
    }
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rat inv = Rat(1) / c_.back();
    for (auto& x : r.c_) x *= inv;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw internal_error("univariate division by zero");
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo;
    long db = b.degree();
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rat(0));
    const Rat& lead = b.c_.back();
    while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        size_t shift = rem.size() - 1 - db;
        Rat f = rem.back() / lead;
        quo[shift] = f;
        for (size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= f * b.c_[i];
        rem.pop_back(); // leading term cancelled exactly
    }
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x.monic();
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) throw precondition_error("squarefree part of zero polynomial");
    if (degree() == 0) return monic();
    UniPoly g = gcd(*this, derivative());
    UniPoly q, r;
    divmod(*this, g, q, r);
    if (!r.is_zero()) throw internal_error("squarefree division not exact");
    return q.monic();
}

} // namespace chitop
