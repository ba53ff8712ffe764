#include "groebner.hpp"

#include <algorithm>
#include <sstream>

namespace chitop {
namespace groebner {

void GbBudget::charge(long n) const {
    long used = pairs_used->fetch_add(n) + n;
    if (used > pair_limit) throw budget_error("Groebner pair budget exceeded");
}

IdealBasis::IdealBasis(VarsPtr vars, std::vector<MultiPoly> gens)
    : vars_(std::move(vars)), gens_(std::move(gens)) {
    if (gens_.empty()) gens_.push_back(MultiPoly::zero(vars_));
}

bool IdealBasis::all_zero() const {
    for (const auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

IdealBasis IdealBasis::with_extra(std::vector<MultiPoly> extra) const {
    std::vector<MultiPoly> gens = gens_;
    for (auto& p : extra) gens.push_back(std::move(p));
    return IdealBasis(vars_, std::move(gens));
}

static bool divides(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

static ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem(p.vars());
    MultiPoly cur = p;
    while (!cur.is_zero()) {
        const ExpVec& le = cur.leading_exp();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const ExpVec& ge = g.leading_exp();
            if (!divides(ge, le)) continue;
            ExpVec q(le.size());
            for (size_t i = 0; i < le.size(); ++i) q[i] = le[i] - ge[i];
            MultiPoly t(p.vars());
            t.add_term(q, cur.leading_coeff() / g.leading_coeff());
            cur -= t * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly t(p.vars());
            t.add_term(le, cur.leading_coeff());
            rem += t;
            cur -= t;
        }
    }
    return rem;
}

static MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
    const ExpVec& fe = f.leading_exp();
    const ExpVec& ge = g.leading_exp();
    ExpVec l = exp_lcm(fe, ge);
    MultiPoly mf(f.vars()), mg(f.vars());
    ExpVec qf(l.size()), qg(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        qf[i] = l[i] - fe[i];
        qg[i] = l[i] - ge[i];
    }
    mf.add_term(qf, Rat(1) / f.leading_coeff());
    mg.add_term(qg, Rat(1) / g.leading_coeff());
    return mf * f - mg * g;
}

static std::vector<MultiPoly> buchberger(const VarsPtr& vars, std::vector<MultiPoly> gens,
                                         const GbBudget& budget) {
    (void)vars;
    std::vector<MultiPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return basis;

    struct Pair {
        size_t i, j;
        unsigned lcm_deg;
    };
    auto make_pair = [&](size_t i, size_t j) {
        ExpVec l = exp_lcm(basis[i].leading_exp(), basis[j].leading_exp());
        return Pair{i, j, exp_total(l)};
    };
    std::vector<Pair> pending;
    // done[i*N+j]: the pair has been treated (reduced or legitimately skipped)
    auto done_key = [](size_t i, size_t j) { return std::pair<size_t, size_t>(std::min(i, j), std::max(i, j)); };
    std::map<std::pair<size_t, size_t>, bool> done;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pending.push_back(make_pair(i, j));

    while (!pending.empty()) {
        budget.charge(1);
        // normal selection: smallest lcm degree first
        size_t best = 0;
        for (size_t t = 1; t < pending.size(); ++t)
            if (pending[t].lcm_deg < pending[best].lcm_deg) best = t;
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        done[done_key(pr.i, pr.j)] = true;

        const MultiPoly& f = basis[pr.i];
        const MultiPoly& g = basis[pr.j];
        const ExpVec& fe = f.leading_exp();
        const ExpVec& ge = g.leading_exp();
        // first criterion: coprime leading monomials reduce to zero
        bool coprime = true;
        for (size_t t = 0; t < fe.size(); ++t)
            if (fe[t] > 0 && ge[t] > 0) {
                coprime = false;
                break;
            }
        if (coprime) continue;
        // chain criterion: lt(k) | lcm(i,j) with both subsidiary pairs treated
        ExpVec l = exp_lcm(fe, ge);
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(basis[k].leading_exp(), l)) continue;
            if (done.count(done_key(pr.i, k)) && done.count(done_key(pr.j, k))) chained = true;
        }
        if (chained) continue;

        MultiPoly s = normal_form(s_poly(f, g), basis);
        if (s.is_zero()) continue;
        s = s.monic();
        size_t idx = basis.size();
        basis.push_back(s);
        for (size_t i = 0; i < idx; ++i) pending.push_back(make_pair(i, idx));
    }
    return basis;
}

static std::vector<MultiPoly> autoreduce(std::vector<MultiPoly> basis) {
    // drop redundant leading terms, then tail-reduce
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(basis[j].leading_exp(), basis[i].leading_exp())) {
                // ties (equal leading monomials) keep the first occurrence
                if (basis[j].leading_exp() == basis[i].leading_exp())
                    redundant = j < i;
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return MultiPoly::compare(a, b) > 0; });
    return out;
}

const std::vector<MultiPoly>& IdealBasis::reduced(const GbBudget& budget) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (reduced_) return *reduced_;
    }
    auto gb = autoreduce(buchberger(vars_, gens_, budget));
    std::lock_guard<std::mutex> lk(mu_);
    if (!reduced_) reduced_ = std::make_shared<const std::vector<MultiPoly>>(std::move(gb));
    return *reduced_;
}

bool IdealBasis::contains_unit(const GbBudget& budget) const {
    const auto& rb = reduced(budget);
    for (const auto& g : rb)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

std::string IdealBasis::key(const GbBudget& budget) const {
    const auto& rb = reduced(budget);
    std::ostringstream os;
    os << vars_->size() << ":";
    for (const auto& g : rb) os << g.str() << ";";
    return os.str();
}

IdealBasis reduce_basis(const IdealBasis& b, const GbBudget& budget) {
    return IdealBasis(b.vars(), b.reduced(budget));
}

bool ideal_membership(const MultiPoly& p, const IdealBasis& b, const GbBudget& budget) {
    return normal_form(p, b.reduced(budget)).is_zero();
}

bool is_empty_variety(const IdealBasis& b, const GbBudget& budget) {
    return b.contains_unit(budget);
}

bool vanishes_on_variety(const MultiPoly& p, const IdealBasis& b, const GbBudget& budget) {
    if (p.is_zero()) return true;
    const auto& rb = b.reduced(budget);
    if (normal_form(p, rb).is_zero()) return true; // membership implies vanishing
    if (is_empty_variety(b, budget)) return true;
    if (p.is_constant()) return false; // nonzero constant on a nonempty variety
    // cheap power shortcut before the full radical test
    if (normal_form(p * p, rb).is_zero()) return true;

    // Rabinowitsch: 1 in b + (1 - y*p) over vars + fresh y
    std::vector<std::string> names = b.vars()->names();
    std::string aux = "_rad";
    while (b.vars()->index_of(aux)) aux += "_";
    names.push_back(aux);
    VarsPtr ext = make_vars(names);
    std::vector<size_t> where(b.vars()->size());
    for (size_t i = 0; i < where.size(); ++i) where[i] = i;
    std::vector<MultiPoly> gens;
    for (const auto& g : rb) gens.push_back(g.embedded(ext, where));
    MultiPoly y = MultiPoly::variable(ext, ext->size() - 1);
    gens.push_back(MultiPoly::constant(ext, 1) - y * p.embedded(ext, where));
    IdealBasis extended(ext, std::move(gens));
    return extended.contains_unit(budget);
}

size_t generic_rank(const PolyMatrix& m, const IdealBasis& b, const GbBudget& budget) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (is_empty_variety(b, budget)) return 0;
    const auto& rb = b.reduced(budget);
    size_t tmax = std::min(m.rows(), m.cols());
    for (size_t t = tmax; t >= 1; --t) {
        for (SubsetIter ri(m.rows(), t); ri.valid(); ri.next()) {
            for (SubsetIter ci(m.cols(), t); ci.valid(); ci.next()) {
                PolyMatrix sub(t, t, MultiPoly(m.at(0, 0).vars()));
                for (size_t i = 0; i < t; ++i)
                    for (size_t j = 0; j < t; ++j) sub.at(i, j) = m.at((*ri)[i], (*ci)[j]);
                MultiPoly minor = normal_form(exactmath::det_bareiss(sub), rb);
                if (minor.is_zero()) continue;
                if (!vanishes_on_variety(minor, b, budget)) return t;
            }
        }
    }
    return 0;
}

} // namespace groebner
} // namespace chitop
