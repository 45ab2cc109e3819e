#ifndef CMTRIG_TRIG_DERIV_HPP
#define CMTRIG_TRIG_DERIV_HPP

#include <cmtrig/angle.hpp>
#include <cmtrig/prec_real.hpp>

namespace cmtrig
{

/// A series value together with how it was obtained. tail_bound is already
/// included in value's radius.
struct SeriesEval {
    PrecReal value;
    long terms_used = 0;
    Mag tail_bound;
};

enum class SeriesMethod {
    automatic,       // direct when the integral tail allows it cheaply, else Euler-Maclaurin
    direct,          // symmetric partial sum |p| <= P0 plus the integral tail bound
    euler_maclaurin, // finite head plus a remainder-bounded Euler-Maclaurin tail
};

/// Largest symmetric cut-off the automatic method sums directly.
inline constexpr long direct_term_limit = 4096;

/// u^{(n)}(t pi) for u(z) = 1/(1 - sin z), from the bilateral pole series
///
///   u^{(n)}(t pi) = 2 (n+1)! / pi^{n+2} * sum_{p in Z} (1/2 + 2p - t)^{-(n+2)}.
///
/// Requires -1/2 <= t < 1/2 (by midpoint) and a radius small enough that
/// t stays in [-3/4, 1/2). With |d_p| >= 2|p| - 3/2 on both sides, the part
/// of the sum with |p| > P0 is at most
///
///   2 * integral_{P0}^{inf} (2q - 3/2)^{-(n+2)} dq = 1 / ((n+1) (2 P0 - 3/2)^{n+1}),
///
/// which (times the prefactor) is the tail bound of the direct method.
SeriesEval u_deriv_series(int n, const PrecReal &t, Precision prec, const Mag &tol,
                          SeriesMethod method = SeriesMethod::automatic);

/// g^{(n)}(x) for g(x) = 1/(1 - cos x), 0 < x < 2pi, through the series:
/// g^{(n)}(x) = (-1)^n u^{(n)}(pi/2 - x) on (0, pi], and the reflection
/// g^{(n)}(x) = (-1)^n g^{(n)}(2pi - x) on (pi, 2pi). Throws
/// std::domain_error when 1 - cos x < 2^{-P/2}.
SeriesEval g_deriv_eval(int n, const Angle &x, Precision prec, SeriesMethod method = SeriesMethod::automatic);
PrecReal g_deriv(int n, const Angle &x, Precision prec);

/// g^{(n)}(pi/2): for even n, 2 (n+1)!/pi^{n+2} * 2^{n+2} * odd_sum(n+2);
/// for odd n, exactly -|E_{n+1}|.
PrecReal g_half_pi(int n, Precision prec);

/// g^{(n)}(pi): for even n, 2 (n+1)!/pi^{n+2} * 2 * odd_sum(n+2); 0 for odd n.
PrecReal g_pi(int n, Precision prec);

} // namespace cmtrig

#endif
