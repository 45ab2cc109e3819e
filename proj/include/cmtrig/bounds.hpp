#ifndef CMTRIG_BOUNDS_HPP
#define CMTRIG_BOUNDS_HPP

#include <cmtrig/angle.hpp>
#include <cmtrig/grid.hpp>
#include <cmtrig/prec_real.hpp>
#include <cmtrig/rational.hpp>

#include <string>
#include <vector>

namespace cmtrig
{

/// Best constant in g^{(n)}(x) + g^{(n)}(y) - g^{(n)}(x+y) >= lambda_n for
/// even n: (2/(n+2)) (2^{n+2} - 1)^2 |B_{n+2}|.
Rational lambda_lower(int n);

/// Best constant in g^{(n)}(x+y) - g^{(n)}(x) - g^{(n)}(y) >= mu_n for odd
/// n: 2 |E_{n+1}|.
BigInt mu_lower(int n);

/// g^{(n)}(x) + g^{(n)}(y) - g^{(n)}(x+y) for x, y > 0 and x + y <= pi.
PrecReal p_n(int n, const Angle &x, const Angle &y, Precision prec);

/// g^{(n)}(pi - y) + g^{(n)}(y) - g^{(n)}(pi), even n, 0 < y < pi.
PrecReal q_n(int n, const Angle &y, Precision prec);
/// g^{(n)}(pi - y) + g^{(n)}(y), odd n, 0 < y < pi.
PrecReal r_n(int n, const Angle &y, Precision prec);

/// Check the bound on the triangular grid x = i pi/N, y = j pi/N with
/// i, j >= 1 and i + j <= N, where N is grid_density rounded up to an even
/// number so that (pi/2, pi/2) is a grid point. That point must have a
/// margin enclosure containing zero; every other point needs a certified
/// positive margin. Points whose margin straddles zero are retried once at
/// doubled precision before counting as inconclusive.
GridReport verify_simplex(int n, int grid_density, Precision prec, Execution exec = Execution::parallel);

struct ProbeResult {
    std::vector<Rational> x_over_pi;
    std::vector<PrecReal> values; // |P_n(x, x)|
    std::string stop_reason;
};

/// |P_n(x, x)| at x = pi/2, pi/4, pi/8, ... until the pole guard of g_deriv
/// refuses x (or max_steps points have been produced).
ProbeResult unboundedness_probe(int n, Precision prec, int max_steps = 4096);

} // namespace cmtrig

#endif
