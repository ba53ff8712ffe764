#include "bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace chitop {
namespace bounds {

namespace {

std::mutex memo_mu;
std::map<std::tuple<long, long, long>, Big> memo_N;
std::map<std::tuple<long, long, long>, Big> memo_M;
std::map<long, Big> memo_D;
std::map<long, Big> memo_Dp;
std::map<long, Big> memo_Phi;

Big pow_big(const Big& b, unsigned long e) {
    Big r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void check_params(long n, long d, long k) {
    if (n < 1 || d < 1 || k < 1) throw precondition_error("bound parameters must be >= 1");
    if (n > 64) throw budget_error("bound dimension exceeds the memo budget");
}

} // namespace

Big bound_N(long n, long d, long k) {
    check_params(n, d, k);
    if (n == 1) return Big(d); // exact base: at most d roots
    auto key = std::make_tuple(n, d, k);
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo_N.find(key);
        if (it != memo_N.end()) return it->second;
    }
    Big v = 2 * Big(d) * pow_big(4 * Big(d) - 1, static_cast<unsigned long>(2 * n - 1));
    std::lock_guard<std::mutex> lk(memo_mu);
    memo_N.emplace(key, v);
    return v;
}

Big bound_L(long n, long d, long k, long e, long l) {
    if (e < 0 || l < 0) throw precondition_error("bound_L: e, l must be >= 0");
    // the preimage is itself an algebraic set in A^n cut by k + l polynomials
    // of degree <= max(d, e)
    return bound_N(n, std::max(d, e), k + l);
}

Big bound_A(long n, long d, long k) {
    check_params(n, d, k);
    // ramification cover: < 2^n coordinate-subspace components, each
    // intersection cut by at most n extra coordinates
    Big comps = pow_big(Big(2), static_cast<unsigned long>(1) << n) - 1;
    return comps * bound_N(n, d, k + n);
}

Big bound_B(long n, long d, long k) {
    check_params(n, d, k);
    Big comps = pow_big(Big(2), static_cast<unsigned long>(1) << n) - 1;
    if (n == 1) return comps * 2 * Big(d);
    return comps * 2 * bound_M(n - 1, d, k);
}

Big bound_M(long n, long d, long k) {
    check_params(n, d, k);
    if (n == 1) return Big(d);
    auto key = std::make_tuple(n, d, k);
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo_M.find(key);
        if (it != memo_M.end()) return it->second;
    }
    Big v = bound_M(n - 1, d, k) + bound_N(n, d, k) + bound_A(n, d, k) + bound_B(n, d, k);
    std::lock_guard<std::mutex> lk(memo_mu);
    memo_M.emplace(key, v);
    return v;
}

namespace {

long clamp1(long x) { return std::max(x, 1L); }

// weight-bound cases of the w-morphism classification, per singularity type:
// (ambient M-index, generator count, weight bound as a function of dep)
struct DCase {
    long n, k;
    long (*weight)(long dep);
};

const DCase D_CASES[] = {
    {4, 1, [](long dep) { return dep + 1; }},        // cA/m
    {4, 1, [](long dep) { return 2 * dep - 4; }},    // cAx/4
    {4, 1, [](long dep) { return 2 * dep - 2; }},    // cAx/2
    {4, 1, [](long) { return 12L; }},                // cD/3
    {4, 1, [](long) { return 18L; }},                // cE/2
    {4, 1, [](long) { return 6L; }},                 // cD/2 hypersurface, first table row
    {4, 1, [](long dep) { return 4 * dep + 4; }},    // cD/2 hypersurface, remaining rows
    {5, 2, [](long) { return 6L; }},                 // cD/2 in A^5, first row
    {5, 2, [](long dep) { return 4 * dep + 2; }},    // cD/2 in A^5, remaining rows
};

// chi-difference cases for general divisorial contractions to points:
// weight bounds by depth of the source, one entry per printed table family
const DCase DP_CASES[] = {
    {3, 1, [](long) { return 1L; }},                 // smooth point
    {3, 1, [](long) { return 2L; }},                 // ordinary blow-up
    {4, 1, [](long dep) { return 2 * dep; }},        // ordinary type, A^4 rows
    {4, 1, [](long dep) { return dep; }},
    {5, 2, [](long dep) { return 2 * dep; }},        // ordinary type, A^5 rows
    {5, 2, [](long dep) { return dep + 1; }},
    {4, 1, [](long dep) { return 4 * dep - 6; }},    // exceptional a=1, cD
    {4, 1, [](long dep) { return 2 * dep + 1; }},
    {5, 2, [](long dep) { return 2 * dep + 1; }},
    {5, 2, [](long dep) { return 2 * dep; }},
    {4, 1, [](long) { return 30L; }},                // exceptional a=1, cE
    {5, 2, [](long) { return 30L; }},
    {4, 1, [](long dep) { return dep; }},            // exceptional a=1, cD/2
    {4, 1, [](long) { return 4L; }},
    {5, 2, [](long dep) { return dep + 1; }},
    {5, 2, [](long dep) { return dep; }},
    {4, 1, [](long) { return 6L; }},                 // exceptional a=1, cE/2
    {5, 2, [](long dep) { return dep; }},            // exceptional a=2
    {5, 2, [](long dep) { return 2 * dep; }},        // Gorenstein, discrepancy > 1
    {4, 1, [](long dep) { return 2 * dep; }},
    {4, 1, [](long) { return 6L; }},
    {5, 2, [](long) { return 10L; }},
    {4, 1, [](long) { return 14L; }},
};

} // namespace

Big bound_D(long dep) {
    if (dep < 0) throw precondition_error("bound_D: dep must be >= 0");
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo_D.find(dep);
        if (it != memo_D.end()) return it->second;
    }
    Big best = 0;
    for (const auto& c : D_CASES)
        best = std::max(best, Big(bound_M(c.n, clamp1(c.weight(dep)), c.k) + 1));
    std::lock_guard<std::mutex> lk(memo_mu);
    memo_D.emplace(dep, best);
    return best;
}

Big bound_Dprime(long dep) {
    if (dep < 0) throw precondition_error("bound_Dprime: dep must be >= 0");
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo_Dp.find(dep);
        if (it != memo_Dp.end()) return it->second;
    }
    Big best = bound_D(dep + 1); // w-morphism case defers through depdiv
    for (const auto& c : DP_CASES)
        best = std::max(best, Big(bound_M(c.n, clamp1(c.weight(dep)), c.k) + 1));
    std::lock_guard<std::mutex> lk(memo_mu);
    memo_Dp.emplace(dep, best);
    return best;
}

Big bound_Phi(long dep) {
    if (dep < 0) return Big(0);
    if (dep == 0) return bound_Dprime(0) + 2; // Gorenstein: no flipping contraction
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo_Phi.find(dep);
        if (it != memo_Phi.end()) return it->second;
    }
    Big dprime = bound_Dprime(dep);
    Big tail = bound_Phi(dep - 1) + bound_Psi(dep, dep);
    Big v = std::max(Big(dprime + 2), std::max(tail, Big(dprime + tail)));
    std::lock_guard<std::mutex> lk(memo_mu);
    memo_Phi.emplace(dep, v);
    return v;
}

Big bound_Psi(long step, long dep) {
    if (step < 0 || dep < 0) throw precondition_error("bound_Psi: parameters must be >= 0");
    if (step == 0) return bound_D(dep);
    return bound_Phi(dep - 1) + bound_Psi(step - 1, dep);
}

Big bound_PhiBar(long rho) {
    if (rho < 0) throw precondition_error("bound_PhiBar: rho must be >= 0");
    return 2 * Big(rho) * bound_Phi(rho);
}

Big bound_Theta(int i, long rho, long n_steps) {
    if (rho < 0 || n_steps < 0) throw precondition_error("bound_Theta: parameters must be >= 0");
    switch (i) {
        case 0:
        case 1:
        case 5:
        case 6:
            return Big(0);
        case 2:
        case 4:
            return Big(n_steps); // rho(Y/X), the number of contraction steps
        case 3:
            return Big(n_steps) * (bound_Dprime(rho) + 2);
        default:
            throw precondition_error("bound_Theta: i must be in 0..6");
    }
}

} // namespace bounds
} // namespace chitop
