#include <cmtrig/numbers.hpp>
#include <cmtrig/power_sum.hpp>
#include <cmtrig/trig_deriv.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cmtrig
{

namespace
{

// 2 (n+1)! / pi^{n+2}
PrecReal prefactor(int n, mpfr_prec_t wp)
{
    const BigInt num = 2 * factorial(static_cast<unsigned long>(n) + 1);
    return PrecReal::from_bigint(num, wp) / pow_int(PrecReal::pi(wp), n + 2L);
}

// 1 / ((n+1) (2 p0 - 3/2)^{n+1}), rounded up.
Mag direct_tail(int n, long p0)
{
    Mag den;
    mpfr_set_si(den.raw(), 4 * p0 - 3, MPFR_RNDD);
    mpfr_div_2ui(den.raw(), den.raw(), 1, MPFR_RNDD);
    mpfr_pow_ui(den.raw(), den.raw(), static_cast<unsigned long>(n) + 1, MPFR_RNDD);
    mpfr_mul_ui(den.raw(), den.raw(), static_cast<unsigned long>(n) + 1, MPFR_RNDD);
    return Mag::div_by_lower(Mag(1.0), den);
}

constexpr long infeasible_cutoff = std::numeric_limits<long>::max();

// Smallest p0 >= 1 with direct_tail(n, p0) <= tol.
long choose_cutoff(int n, const Mag &tol)
{
    if (tol.is_zero()) {
        return infeasible_cutoff;
    }
    mpfr_t lg;
    mpfr_init2(lg, 64);
    mpfr_log(lg, tol.raw(), MPFR_RNDD);
    const double log_tol = mpfr_get_d(lg, MPFR_RNDD);
    mpfr_clear(lg);
    const double log_y = -(std::log(n + 1.0) + log_tol) / (n + 1.0);
    if (log_y > 40.0) {
        return infeasible_cutoff;
    }
    long p0 = std::max(1L, static_cast<long>(std::ceil((std::exp(log_y) + 1.5) / 2.0)));
    while (!(direct_tail(n, p0) <= tol)) {
        ++p0;
    }
    return p0;
}

constexpr long forced_direct_limit = 10'000'000;

} // namespace

SeriesEval u_deriv_series(int n, const PrecReal &t, Precision prec, const Mag &tol, SeriesMethod method)
{
    if (n < 0) {
        throw std::invalid_argument("u_deriv_series: order must be nonnegative");
    }
    if (mpfr_cmp_d(t.mid(), -0.5) < 0 || mpfr_cmp_d(t.mid(), 0.5) >= 0) {
        throw std::domain_error("u_deriv_series: t must lie in [-1/2, 1/2), got " + t.mid_string(20));
    }
    const auto wp = prec.working_bits();
    const long s = n + 2L;
    const PrecReal alpha = PrecReal::from_rational(make_rational(1, 2), wp) - t.with_precision(wp);
    if (!alpha.is_positive() || !(alpha - PrecReal::from_rational(make_rational(5, 4), wp)).is_negative()) {
        throw std::domain_error("u_deriv_series: enclosure of t is too wide for the tail bound");
    }

    const PrecReal c = prefactor(n, wp);
    const Mag c_up = c.abs_upper();
    // Normalized target, with slack for the upward rounding of the products below.
    const Mag tol_sum = Mag::div_by_lower(tol, c_up) * Mag(0.99);

    const long p0 = choose_cutoff(n, tol_sum);
    const bool direct = method == SeriesMethod::direct || (method == SeriesMethod::automatic && p0 <= direct_term_limit);

    if (direct) {
        if (p0 > forced_direct_limit) {
            throw std::domain_error("u_deriv_series: direct summation to this tolerance needs too many terms");
        }
        PrecReal sum(wp);
        for (long p = -p0; p <= p0; ++p) {
            sum += pow_int(alpha + 2 * p, -s);
        }
        const Mag tail = c_up * direct_tail(n, p0);
        PrecReal value = c * sum;
        value.add_error(tail);
        return SeriesEval{std::move(value), 2 * p0 + 1, tail};
    }

    // sum = 2^{-s} [ sum_{p>=0} (p + alpha/2)^{-s} + (-1)^s sum_{q>=1} (q - alpha/2)^{-s} ]
    const Mag tol_each = tol_sum * Mag::pow2(s - 1);
    const PrecReal half_alpha = mul_2si(alpha, -1);
    const PowerSum right = shifted_power_sum(half_alpha, s, wp, tol_each);
    const PowerSum left = shifted_power_sum(1 - half_alpha, s, wp, tol_each);
    const PrecReal bilateral = mul_2si(s % 2 == 0 ? right.value + left.value : right.value - left.value, -s);
    const Mag tail = c_up * Mag::pow2(-s) * (right.remainder + left.remainder);
    return SeriesEval{c * bilateral, right.direct_terms + left.direct_terms, tail};
}

SeriesEval g_deriv_eval(int n, const Angle &x, Precision prec, SeriesMethod method)
{
    if (n < 0) {
        throw std::invalid_argument("g_deriv: order must be nonnegative");
    }
    if (x.compare_pi_times(Rational(0)) <= 0 || x.compare_pi_times(Rational(2)) >= 0) {
        throw std::domain_error("g_deriv: x must lie in (0, 2pi), got " + x.to_string());
    }
    const auto wp = prec.working_bits();
    if (Mag::abs_upper(x.one_minus_cos(wp).mid()) < Mag::pow2(-(prec.bits() / 2))) {
        throw std::domain_error("g_deriv: x = " + x.to_string() + " is inside the pole guard");
    }

    // On (pi, 2pi) reflect: g^{(n)}(x) = (-1)^n g^{(n)}(2pi - x).
    const bool reflect = x.compare_pi_times(Rational(1)) > 0;
    const Angle y = reflect ? Angle::pi_times(2) - x : x;
    const PrecReal t = PrecReal::from_rational(make_rational(1, 2), wp) - y.over_pi(wp);

    // Aim for an absolute error of 2^{-wp} relative to the nearest-pole term.
    const PrecReal alpha = PrecReal::from_rational(make_rational(1, 2), wp) - t;
    const PrecReal leading = prefactor(n, wp) * pow_int(alpha, -(n + 2L));
    const Mag scale = Mag(1.0) < leading.abs_upper() ? leading.abs_upper() : Mag(1.0);
    const Mag tol = Mag::pow2(-wp) * scale;

    SeriesEval e = u_deriv_series(n, t, prec, tol, method);
    // (-1)^n from the inner u(pi/2 - y), and another (-1)^n for the reflection.
    if (!reflect && n % 2 == 1) {
        e.value = -e.value;
    }
    return e;
}

PrecReal g_deriv(int n, const Angle &x, Precision prec)
{
    return g_deriv_eval(n, x, prec).value;
}

PrecReal g_half_pi(int n, Precision prec)
{
    if (n < 0) {
        throw std::invalid_argument("g_half_pi: order must be nonnegative");
    }
    const auto wp = prec.working_bits();
    if (n % 2 == 1) {
        return PrecReal::from_bigint(-BigInt(abs(euler(n + 1))), wp);
    }
    return mul_2si(prefactor(n, wp) * odd_sum(n + 2L, prec), n + 2L);
}

PrecReal g_pi(int n, Precision prec)
{
    if (n < 0) {
        throw std::invalid_argument("g_pi: order must be nonnegative");
    }
    const auto wp = prec.working_bits();
    if (n % 2 == 1) {
        return PrecReal(wp);
    }
    return mul_2si(prefactor(n, wp) * odd_sum(n + 2L, prec), 1);
}

} // namespace cmtrig
