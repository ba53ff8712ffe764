#pragma once

// Computable bound constants, all arbitrary-precision integers:
//   N^n_{d,k}  chi bound for algebraic sets in A^n cut by k polys of deg <= d
//   M^n_{d,k}  chi bound in weighted projective space with n+1 weights
//   L^n_{d,k,e,l}  chi bound for the preimage of a degree-e, l-generator base
//   A, B       ramification pieces of the M-recursion
//   D, D'      chi-difference bounds for divisorial contractions, by depth
//   Phi, Psi, PhiBar, Theta  the b3 ledger constants
//
// The base case N^1 = M^1 = d is exact. Above dimension one the faithful
// unrolling of the stratification bound is not materializable (its generator
// counts feed binomials whose results feed the next level), so N is closed
// off by a Milnor-type dominator 2d(4d-1)^(2n-1), which soundly bounds the
// total Betti number of any algebraic subset of C^n = R^(2n) cut in degree
// <= d, independent of k. The M/A/B/D/D'/Phi/Psi combinations follow the
// printed formulas on top of it.

#include <gmpxx.h>

#include "errors.hpp"

namespace chitop {
namespace bounds {

using Big = mpz_class;

Big bound_N(long n, long d, long k);
Big bound_M(long n, long d, long k);
Big bound_L(long n, long d, long k, long e, long l);
Big bound_A(long n, long d, long k);
Big bound_B(long n, long d, long k);

Big bound_D(long dep);
Big bound_Dprime(long dep);

Big bound_Phi(long dep);             // Phi(dep < 0) = 0
Big bound_Psi(long step, long dep);
Big bound_PhiBar(long rho);
Big bound_Theta(int i, long rho, long n_steps);

} // namespace bounds
} // namespace chitop
