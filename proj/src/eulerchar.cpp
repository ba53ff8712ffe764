#include "eulerchar.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "unipoly.hpp"

namespace chitop {
namespace eulerchar {

using groebner::IdealBasis;
using groebner::IdealPtr;
using groebner::make_ideal;

namespace {

// chi depends on the variety only, so a generator that lives in a single
// variable may be replaced by its squarefree part; this keeps the degrees of
// later resultant matrices from inheriting multiplicities.
MultiPoly squarefree_if_univariate(const MultiPoly& f) {
    if (f.is_zero() || f.is_constant()) return f;
    size_t used = 0;
    for (size_t i = 0; i < f.nvars(); ++i)
        if (f.degree_in(i) > 0) ++used;
    if (used != 1) return f;
    return exactmath::squarefree_part(f);
}

std::vector<MultiPoly> squarefree_pass(const std::vector<MultiPoly>& gens, bool& changed) {
    std::vector<MultiPoly> out;
    changed = false;
    for (const auto& g : gens) {
        MultiPoly h = squarefree_if_univariate(g);
        if (h != g) changed = true;
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace

ChiEngine::ChiEngine(ChiOptions opt) : opt_(std::move(opt)) {
    gb_.pair_limit = opt_.gb_pair_limit;
}

void ChiEngine::charge_node() {
    long used = nodes_.fetch_add(1) + 1;
    if (used > opt_.node_budget) throw budget_error("chi node budget exceeded");
}

void ChiEngine::record(int depth, std::string what, FiberKind kind, long long mult, long long chi) {
    if (!opt_.trace) return;
    std::lock_guard<std::mutex> lk(trace_mu_);
    trace_.push_back({depth, std::move(what), kind, mult, chi});
}

long long ChiEngine::chi_base_univariate(const IdealPtr& ideal) {
    const auto& rb = ideal->reduced(gb_);
    if (rb.empty()) return 1; // the affine line
    // principal ideal domain: the reduced basis is a single generator
    MultiPoly g = rb.front();
    if (g.is_constant()) return 0;
    size_t v = 0;
    for (size_t i = 0; i < g.nvars(); ++i)
        if (g.degree_in(i) > 0) v = i;
    return exactmath::squarefree_part(g).degree_in(v);
}

size_t ChiEngine::choose_projection_var(const VarsPtr& vars,
                                        const std::vector<MultiPoly>& gens) const {
    size_t n = vars->size();
    if (opt_.projection_order) {
        // project the variable listed last among those still present
        for (size_t t = opt_.projection_order->size(); t-- > 0;) {
            auto idx = vars->index_of((*opt_.projection_order)[t]);
            if (idx) return *idx;
        }
    }
    // cheapest fiber first: smallest positive degree across the generators
    size_t best = n - 1;
    long best_deg = -1;
    for (size_t i = 0; i < n; ++i) {
        long d = 0;
        for (const auto& g : gens) d = std::max(d, g.degree_in(i));
        if (d > 0 && (best_deg < 0 || d < best_deg)) {
            best = i;
            best_deg = d;
        }
    }
    return best;
}

long long ChiEngine::chi_affine(const AffineLocus& locus) {
    if (!locus.ideal) throw precondition_error("chi_affine: missing ideal");
    if (locus.ideal->vars()->size() != locus.n)
        throw precondition_error("chi_affine: ambient dimension mismatch");
    return chi_ideal(locus.ideal, 0);
}

long long ChiEngine::chi_ideal(const IdealPtr& ideal_in, int depth) {
    charge_node();
    if (depth > opt_.max_depth) throw budget_error("chi recursion depth exceeded");

    IdealPtr ideal = ideal_in;
    {
        bool changed = false;
        auto gens = squarefree_pass(ideal->reduced(gb_), changed);
        if (changed) ideal = make_ideal(ideal->vars(), std::move(gens));
    }

    const auto& rb = ideal->reduced(gb_);
    size_t n = ideal->vars()->size();
    for (const auto& g : rb)
        if (!g.is_zero() && g.is_constant()) return 0; // empty variety
    if (rb.empty()) return 1;                          // chi(A^n) = 1
    if (n == 1) return chi_base_univariate(ideal);

    std::string key = ideal->key(gb_);
    {
        std::lock_guard<std::mutex> lk(memo_mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    size_t v = choose_projection_var(ideal->vars(), rb);

    // move v to the last slot
    const auto& names = ideal->vars()->names();
    std::vector<std::string> reordered;
    std::vector<size_t> where(n);
    for (size_t i = 0; i < n; ++i)
        if (i != v) {
            where[i] = reordered.size();
            reordered.push_back(names[i]);
        }
    where[v] = n - 1;
    reordered.push_back(names[v]);
    VarsPtr full = make_vars(reordered);
    std::vector<std::string> smaller(reordered.begin(), reordered.end() - 1);
    VarsPtr small = make_vars(smaller);

    std::vector<MultiPoly> fs;
    for (const auto& g : rb) fs.push_back(g.embedded(full, where));
    IdealPtr J = make_ideal(small, {});

    long long result = chi_preimage(J, fs, depth + 1);
    {
        std::lock_guard<std::mutex> lk(memo_mu_);
        memo_.emplace(std::move(key), result);
    }
    return result;
}

long long ChiEngine::chi_fiberwise(const IdealPtr& J, const std::vector<MultiPoly>& fs,
                                   const std::string& v) {
    if (fs.empty()) return chi_ideal(J, 0);
    const VarsPtr& fvars = fs.front().vars();
    auto idx = fvars->index_of(v);
    if (!idx) throw precondition_error("chi_fiberwise: unknown projection variable " + v);
    size_t n = fvars->size();
    // reorder so v is last and the base variables match J's order
    std::vector<std::string> reordered = J->vars()->names();
    reordered.push_back(v);
    if (reordered.size() != n)
        throw precondition_error("chi_fiberwise: base ideal variable count mismatch");
    std::vector<size_t> where(n);
    for (size_t i = 0; i < n; ++i) {
        if (i == *idx) {
            where[i] = n - 1;
            continue;
        }
        auto pos = J->vars()->index_of(fvars->name(i));
        if (!pos) throw precondition_error("chi_fiberwise: variable sets do not match");
        where[i] = *pos;
    }
    VarsPtr full = make_vars(reordered);
    std::vector<MultiPoly> moved;
    for (const auto& f : fs) moved.push_back(f.embedded(full, where));
    return chi_preimage(J, moved, 1);
}

namespace {

struct FiberGen {
    std::vector<MultiPoly> coeffs; // over the base variables, ascending
    size_t original;               // index into fs
    long deg() const { return static_cast<long>(coeffs.size()) - 1; }
    const MultiPoly& lead() const { return coeffs.back(); }
};

} // namespace

long long ChiEngine::chi_preimage(const IdealPtr& J_in, const std::vector<MultiPoly>& fs,
                                  int depth) {
    charge_node();
    if (depth > opt_.max_depth) throw budget_error("chi recursion depth exceeded");
    IdealPtr J = J_in;
    {
        bool changed = false;
        auto gens = squarefree_pass(J->reduced(gb_), changed);
        if (changed) J = make_ideal(J->vars(), std::move(gens));
    }
    if (groebner::is_empty_variety(*J, gb_)) return 0;

    const VarsPtr& small = J->vars();
    size_t v = small->size(); // the projection variable is the last slot of fs' vars

    // Effective restriction of each generator to Z = V(J): delete leading
    // coefficients that vanish identically on Z, drop generators that vanish
    // entirely.
    std::vector<FiberGen> gens;
    for (size_t gi = 0; gi < fs.size(); ++gi) {
        auto lifted = fs[gi].coefficients_in(v);
        std::vector<MultiPoly> coeffs;
        for (auto& c : lifted) coeffs.push_back(c.dropped_var(v, small));
        while (!coeffs.empty() && groebner::vanishes_on_variety(coeffs.back(), *J, gb_))
            coeffs.pop_back();
        if (coeffs.empty()) continue;
        gens.push_back({std::move(coeffs), gi});
    }

    if (gens.empty()) {
        // every generator vanishes on Z: the preimage is Z x A^1
        long long c = chi_ideal(J, depth + 1);
        record(depth, "cylinder", FiberKind::Line, 1, c);
        return c;
    }

    // degree-0 generators restrict the base and disappear from the fiber
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].deg() != 0) continue;
        const MultiPoly& c = gens[i].coeffs[0];
        if (c.is_constant()) return 0; // nonzero constant on Z: empty sheets
        std::vector<MultiPoly> rest;
        for (size_t gj = 0; gj < fs.size(); ++gj)
            if (gj != gens[i].original) rest.push_back(fs[gj]);
        IdealPtr J2 = make_ideal(small, J->with_extra({c}).gens());
        return chi_preimage(J2, rest, depth + 1);
    }

    size_t k = gens.size();

    if (k == 1 && gens[0].deg() == 1) {
        // f = a1 v + a0 over Z: graph off V(a1), cylinder over V(a1, a0)
        const MultiPoly& a1 = gens[0].lead();
        IdealPtr J1 = make_ideal(small, J->with_extra({a1}).gens());
        long long chiZ = chi_ideal(J, depth + 1);
        long long chiZ0 = chi_ideal(J1, depth + 1);
        long long under = chi_preimage(J1, fs, depth + 1);
        record(depth, "graph of degree-1 section", FiberKind::Finite, 1, chiZ - chiZ0);
        return (chiZ - chiZ0) + under;
    }

    // ---- Case I: condition (A^0) holds -----------------------------------
    const MultiPoly zero(small);
    std::vector<std::vector<MultiPoly>> lists;
    for (const auto& g : gens) lists.push_back(g.coeffs);
    auto deriv_list = [&](const std::vector<MultiPoly>& cs) {
        std::vector<MultiPoly> d;
        for (size_t j = 1; j < cs.size(); ++j) d.push_back(cs[j].scaled(Rat(static_cast<long>(j))));
        return d;
    };

    resultant::PolyResultantMatrix T0 =
        k == 1 ? resultant::build_T_from_coeffs<MultiPoly>({lists[0], deriv_list(lists[0])}, zero)
               : resultant::build_T_from_coeffs<MultiPoly>(lists, zero);
    size_t c0 = T0.cols();

    // Jbase + the t x t minors of T, as a reduced ideal. Entries are reduced
    // against the base first (det(A mod I) = det(A) mod I), each minor is
    // reduced against the growing ideal, and accumulation stops as soon as
    // the sum becomes the unit ideal.
    auto with_minors = [&](const resultant::PolyResultantMatrix& T, size_t t,
                           const IdealPtr& base) -> IdealPtr {
        if (t > std::min(T.rows(), T.cols())) return base; // no minors: no condition
        const auto& base_rb = base->reduced(gb_);
        PolyMatrix reduced(T.rows(), T.cols(), zero);
        for (size_t r = 0; r < T.rows(); ++r)
            for (size_t c = 0; c < T.cols(); ++c)
                reduced.at(r, c) = groebner::normal_form(T.matrix.at(r, c), base_rb);
        IdealPtr cur = base;
        for (SubsetIter ri(T.rows(), t); ri.valid(); ri.next()) {
            for (SubsetIter ci(T.cols(), t); ci.valid(); ci.next()) {
                charge_node();
                const auto& rb = cur->reduced(gb_);
                PolyMatrix sub(t, t, zero);
                for (size_t i = 0; i < t; ++i)
                    for (size_t j = 0; j < t; ++j)
                        sub.at(i, j) = groebner::normal_form(reduced.at((*ri)[i], (*ci)[j]), rb);
                MultiPoly minor = groebner::normal_form(exactmath::det_bareiss(sub), rb);
                if (minor.is_zero()) continue;
                std::vector<MultiPoly> next = rb;
                next.push_back(squarefree_if_univariate(minor).monic());
                cur = make_ideal(small, std::move(next));
                if (cur->contains_unit(gb_)) return cur;
            }
        }
        return cur;
    };

    long long chiZ = chi_ideal(J, depth + 1);
    long d1 = gens[0].deg();

    IdealPtr Jp = with_minors(T0, c0, J);
    if (groebner::is_empty_variety(*Jp, gb_)) {
        // T^0 has full rank everywhere on Z
        long long total = (k == 1) ? static_cast<long long>(d1) * chiZ : 0;
        record(depth, "T0 full rank on all of Z", k == 1 ? FiberKind::Finite : FiberKind::Empty,
               k == 1 ? d1 : 0, total);
        return total;
    }
    long long chiZp = chi_ideal(Jp, depth + 1);

    long long total = 0;
    if (k == 1) {
        total += static_cast<long long>(d1) * (chiZ - chiZp);
        record(depth, "Z'' (T0 full rank)", FiberKind::Finite, d1, chiZ - chiZp);
    } else {
        record(depth, "Z'' (T0 full rank)", FiberKind::Empty, 0, chiZ - chiZp);
    }

    // ---- Z_-: some leading coefficient vanishes; truncate and recurse ----
    for (size_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<MultiPoly> extra;
        int bits = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                extra.push_back(gens[i].lead());
                ++bits;
            }
        IdealPtr JS = make_ideal(small, Jp->with_extra(extra).gens());
        long long piece = chi_preimage(JS, fs, depth + 1);
        total += (bits % 2 == 1) ? piece : -piece;
    }

    // ---- Z_+: T0 singular, all leading coefficients alive ----------------
    // chi of (base stratum minus the leading-coefficient loci) by
    // inclusion-exclusion over the leads
    auto chi_plus = [&](const IdealPtr& base) -> long long {
        std::vector<std::function<long long()>> jobs;
        std::vector<int> signs;
        for (size_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<MultiPoly> add;
            int bits = 0;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) {
                    add.push_back(gens[i].lead());
                    ++bits;
                }
            IdealPtr JI = mask == 0 ? base : make_ideal(small, base->with_extra(add).gens());
            signs.push_back(bits % 2 == 0 ? 1 : -1);
            jobs.push_back([this, JI, depth]() { return chi_ideal(JI, depth + 1); });
        }
        long long acc = 0;
        // tracing needs a deterministic entry order, so it runs serial
        if (opt_.parallel > 1 && !opt_.trace && depth <= 2) {
            std::vector<std::future<long long>> futs;
            for (auto& j : jobs) futs.push_back(std::async(std::launch::async, j));
            for (size_t i = 0; i < futs.size(); ++i) acc += signs[i] * futs[i].get();
        } else {
            for (size_t i = 0; i < jobs.size(); ++i) acc += signs[i] * jobs[i]();
        }
        return acc;
    };

    long min_d = gens[0].deg();
    for (const auto& g : gens) min_d = std::min(min_d, g.deg());

    if (k == 1) {
        if (d1 == 2) {
            // (A^1) fails: the projection is one-to-one over Z_+
            long long cp = chi_plus(Jp);
            total += cp;
            record(depth, "Z_+ one-to-one (A1 fails)", FiberKind::Finite, 1, cp);
        } else {
            long long cp = chi_plus(Jp);
            total += static_cast<long long>(d1) * cp;
            // integrate s0 against chi over its level sets
            for (long s = 1; s <= d1 - 1; ++s) {
                IdealPtr level_ideal = with_minors(T0, c0 - static_cast<size_t>(s) + 1, Jp);
                if (groebner::is_empty_variety(*level_ideal, gb_)) break; // deeper levels empty
                long long level = chi_plus(level_ideal);
                total -= level;
                record(depth, "Z_+ level s0>=" + std::to_string(s), FiberKind::Finite, -1, level);
            }
        }
    } else {
        if (min_d == 1) {
            long long cp = chi_plus(Jp);
            total += cp;
            record(depth, "Z_+ one-to-one (A1 fails)", FiberKind::Finite, 1, cp);
        } else {
            for (long s = 1; s <= min_d; ++s) {
                IdealPtr level_ideal = with_minors(T0, c0 - static_cast<size_t>(s) + 1, Jp);
                if (groebner::is_empty_variety(*level_ideal, gb_)) break;
                long long level = chi_plus(level_ideal);
                total += level;
                record(depth, "Z_+ level s0>=" + std::to_string(s), FiberKind::Finite, 1, level);
            }
            std::vector<std::vector<MultiPoly>> both = lists;
            for (const auto& cs : lists) both.push_back(deriv_list(cs));
            resultant::PolyResultantMatrix T1 =
                resultant::build_T_from_coeffs<MultiPoly>(both, zero);
            size_t c1 = T1.cols();
            for (long s = 1; s <= min_d - 1; ++s) {
                IdealPtr level_ideal = with_minors(T1, c1 - static_cast<size_t>(s) + 1, Jp);
                if (groebner::is_empty_variety(*level_ideal, gb_)) break;
                long long level = chi_plus(level_ideal);
                total -= level;
                record(depth, "Z_+ level s1>=" + std::to_string(s), FiberKind::Finite, -1, level);
            }
        }
    }
    return total;
}

long long ChiEngine::chi_constructible(const ConstructibleExpr& e) {
    long long acc = 0;
    for (const auto& [c, locus] : e.parts) acc += c * chi_affine(locus);
    return acc;
}

UnionChi ChiEngine::union_chi(const std::vector<AffineLocus>& loci,
                              const std::optional<BigInt>& M) {
    if (loci.empty()) throw precondition_error("union_chi: empty list");
    size_t k = loci.size();
    const VarsPtr& vars = loci.front().ideal->vars();
    for (const auto& l : loci)
        if (l.ideal->vars()->size() != vars->size())
            throw precondition_error("union_chi: ambient spaces differ");
    UnionChi out;
    for (size_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<MultiPoly> gens;
        int bits = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                for (const auto& g : loci[i].ideal->gens()) gens.push_back(g);
                ++bits;
            }
        long long piece = chi_affine(AffineLocus(make_ideal(vars, std::move(gens))));
        out.exact += (bits % 2 == 1) ? piece : -piece;
    }
    if (M) {
        BigInt pow2 = 1;
        pow2 <<= k;
        out.bound = (pow2 - 1) * (*M);
    }
    return out;
}

// ------------------------------------------------------------ wrappers ---

long long chi_affine(const AffineLocus& locus,
                     const std::optional<std::vector<std::string>>& order) {
    ChiOptions opt;
    opt.projection_order = order;
    ChiEngine eng(opt);
    return eng.chi_affine(locus);
}

long long chi_fiberwise(const groebner::IdealPtr& J, const std::vector<MultiPoly>& fs,
                        const std::string& v) {
    ChiEngine eng;
    return eng.chi_fiberwise(J, fs, v);
}

long long chi_constructible(const ConstructibleExpr& e) {
    ChiEngine eng;
    return eng.chi_constructible(e);
}

UnionChi union_chi(const std::vector<AffineLocus>& loci, const std::optional<BigInt>& M) {
    ChiEngine eng;
    return eng.union_chi(loci, M);
}

long long chi_base_univariate(const groebner::IdealPtr& ideal) {
    ChiEngine eng;
    return eng.chi_base_univariate(ideal);
}

} // namespace eulerchar
} // namespace chitop
