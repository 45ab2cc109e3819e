#ifndef CMTRIG_NUMBERS_HPP
#define CMTRIG_NUMBERS_HPP

#include <cmtrig/prec_real.hpp>
#include <cmtrig/rational.hpp>

namespace cmtrig
{

/// Bernoulli number B_n with B_1 = -1/2, from the exact recurrence
/// sum_{k=0}^{n} C(n+1, k) B_k = 0. Results are cached.
Rational bernoulli(int n);

/// Euler (secant) number E_n, 1/cosh t = sum E_n t^n / n!, from the
/// recurrence sum_{k even} C(n, k) E_k = 0 for even n >= 2.
BigInt euler(int n);

/// zeta(2m) = |B_2m| (2 pi)^{2m} / (2 (2m)!).
PrecReal zeta_even(int m, Precision prec);

/// sum_{p >= 0} (2p + 1)^{-x} = (1 - 2^{-x}) zeta(x), for x > 1.
PrecReal odd_sum(const PrecReal &x, Precision prec);
PrecReal odd_sum(long x, Precision prec);

/// psi^{(m)}(x) = (-1)^{m+1} m! sum_{k >= 0} (x + k)^{-(m+1)}, m >= 1, x > 0.
PrecReal polygamma(int m, const PrecReal &x, Precision prec);

/// psi^{(2m)}(1/4) - psi^{(2m)}(3/4), m >= 1.
PrecReal kolbig_gap(int m, Precision prec);

} // namespace cmtrig

#endif
