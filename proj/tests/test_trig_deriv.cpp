#include "oracles.hpp"

#include <cmtrig/numbers.hpp>
#include <cmtrig/trig_deriv.hpp>
#include <cmtrig/trig_rational.hpp>

#include <catch_amalgamated.hpp>

#include <vector>

using namespace cmtrig;

namespace
{

const Precision P128(128);

// 50 exact multiples of pi spread over [0.2, 2pi - 0.2].
std::vector<Rational> full_grid()
{
    std::vector<Rational> qs;
    const Rational lo = make_rational(2, 31);
    const Rational step = (Rational(2) - 2 * lo) / 49;
    for (int i = 0; i < 50; ++i) {
        qs.push_back(Rational(lo + i * step));
    }
    return qs;
}

bool midpoints_within(const PrecReal &a, const PrecReal &b, double eps)
{
    return midpoint_distance(a, b) <= Mag(eps);
}

} // namespace

TEST_CASE("u_deriv_series: small values")
{
    const auto wp = P128.working_bits();
    const Mag tol(1e-30);
    const auto u0 = u_deriv_series(0, PrecReal(wp), P128, tol);
    CHECK(u0.value.contains(BigInt(1)));
    CHECK(u0.tail_bound <= tol);
    CHECK(u_deriv_series(0, PrecReal::from_rational(make_rational(-1, 2), wp), P128, tol)
              .value.contains(make_rational(1, 2)));
    CHECK(u_deriv_series(1, PrecReal(wp), P128, tol).value.contains(BigInt(1)));
    // u'' = (2 cos^2 - sin (1 - sin)) / (1 - sin)^3, which is 2 at 0.
    CHECK(u_deriv_series(2, PrecReal(wp), P128, tol).value.contains(BigInt(2)));
}

TEST_CASE("u_deriv_series: domain")
{
    const auto wp = P128.working_bits();
    const Mag tol(1e-30);
    CHECK_THROWS_AS(u_deriv_series(0, PrecReal::from_rational(make_rational(1, 2), wp), P128, tol), std::domain_error);
    CHECK_THROWS_AS(u_deriv_series(0, PrecReal::from_rational(make_rational(-3, 5), wp), P128, tol),
                    std::domain_error);
    CHECK_THROWS_AS(u_deriv_series(-1, PrecReal(wp), P128, tol), std::invalid_argument);
}

TEST_CASE("property: u_deriv_series honours the tolerance")
{
    oracle::Gen gen(31337);
    const auto wp = P128.working_bits();
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(gen.integer(0, 20));
        const Rational t = gen.rational(-500, 499, 1000);
        const double tol_d = std::pow(10.0, -gen.real(5, 60));
        INFO("n = " << n << ", t = " << to_string(t) << ", tol = " << tol_d);
        const auto e = u_deriv_series(n, PrecReal::from_rational(t, wp), P128, Mag(tol_d));
        CHECK(e.tail_bound <= Mag(tol_d));
        CHECK(e.tail_bound <= e.value.rad());
    }
}

TEST_CASE("direct summation and Euler-Maclaurin agree")
{
    const auto wp = P128.working_bits();
    for (int n : {0, 1, 2, 5, 9}) {
        for (const Rational &t : {make_rational(-1, 2), make_rational(-1, 5), Rational(0), make_rational(3, 7)}) {
            INFO("n = " << n << ", t = " << to_string(t));
            const auto x = PrecReal::from_rational(t, wp);
            // The direct tail decays like P^{-(n+1)}, so low orders get looser targets.
            const Mag tol(n == 0 ? 1e-6 : n == 1 ? 1e-12 : 1e-20);
            const auto d = u_deriv_series(n, x, P128, tol, SeriesMethod::direct);
            const auto em = u_deriv_series(n, x, P128, tol, SeriesMethod::euler_maclaurin);
            CHECK(d.value.overlaps(em.value));
            CHECK(d.tail_bound <= tol);
            CHECK(em.tail_bound <= tol);
        }
    }
}

TEST_CASE("direct summation refuses hopeless tolerances")
{
    const auto wp = P128.working_bits();
    CHECK_THROWS_AS(u_deriv_series(0, PrecReal(wp), P128, Mag(1e-40), SeriesMethod::direct), std::domain_error);
}

TEST_CASE("g_deriv: small values")
{
    CHECK(g_deriv(0, Angle::pi_times(1, 2), P128).contains(BigInt(1)));
    CHECK(g_deriv(1, Angle::pi_times(1), P128).contains(BigInt(0)));
    CHECK(g_deriv(0, Angle::pi_times(4, 3), P128).contains(make_rational(2, 3)));
    CHECK(g_deriv(1, Angle::pi_times(1, 2), P128).contains(BigInt(-1)));
    CHECK(g_deriv(0, Angle::pi_times(1, 3), P128).contains(BigInt(2)));
    CHECK(g_deriv(2, Angle::pi_times(1), P128).contains(make_rational(1, 4)));
    CHECK(g_deriv(3, Angle::pi_times(1, 2), P128).contains(BigInt(-5)));
    CHECK(g_deriv(0, Angle::pi_times(1, 2), P128).rad() <= Mag(1e-70));
}

TEST_CASE("g_deriv: domain and pole guard")
{
    CHECK_THROWS_AS(g_deriv(0, Angle::pi_times(0), P128), std::domain_error);
    CHECK_THROWS_AS(g_deriv(0, Angle::pi_times(2), P128), std::domain_error);
    CHECK_THROWS_AS(g_deriv(0, Angle::pi_times(-1, 2), P128), std::domain_error);
    CHECK_THROWS_AS(g_deriv(0, Angle::pi_times(5, 2), P128), std::domain_error);
    CHECK_THROWS_AS(g_deriv(-1, Angle::pi_times(1), P128), std::invalid_argument);
    // 1 - cos x ~ x^2/2 < 2^{-64} once x < 2^{-31.5}.
    const BigInt big = BigInt(1) << 40;
    CHECK_THROWS_AS(g_deriv(0, Angle::pi_times(make_rational(BigInt(1), big)), P128), std::domain_error);
    CHECK_NOTHROW(g_deriv(0, Angle::pi_times(make_rational(1, 1 << 20)), P128));
}

TEST_CASE("g_deriv_exact: closed forms")
{
    const auto g0 = g_deriv_exact(0);
    CHECK(g0 == TrigRational({BigInt(1)}, {}, 1));
    CHECK(g_deriv_exact(1) == TrigRational({}, {BigInt(-1)}, 2));
    CHECK(g_deriv_exact(2) == TrigRational({BigInt(2), BigInt(-1), BigInt(-1)}, {}, 3));
    CHECK(g_deriv_exact(3) == TrigRational({}, {BigInt(-5), BigInt(4), BigInt(1)}, 4));
    CHECK(g_deriv_exact(7).derivative() == g_deriv_exact(8));
    CHECK_THROWS_AS(g_deriv_exact(-1), std::invalid_argument);
}

TEST_CASE("eval_trig_rational: small values")
{
    CHECK(eval_trig_rational(g_deriv_exact(2), Angle::pi_times(1, 2), P128).contains(BigInt(2)));
    CHECK(eval_trig_rational(g_deriv_exact(2), Angle::pi_times(1), P128).contains(make_rational(1, 4)));
    CHECK(eval_trig_rational(g_deriv_exact(3), Angle::pi_times(1, 2), P128).contains(BigInt(-5)));
    CHECK(eval_trig_rational(g_deriv_exact(3), Angle::pi_times(1, 2), P128).is_exact());
    CHECK_THROWS_AS(eval_trig_rational(g_deriv_exact(0), Angle::pi_times(2), P128), std::domain_error);
    CHECK_THROWS_AS(eval_trig_rational(g_deriv_exact(0), Angle::pi_times(make_rational(1, 1 << 20)), P128,
                                       Mag::pow2(-20)),
                    std::domain_error);
}

TEST_CASE("numerator_at: exact values at rational points")
{
    // At pi/2: c = 0, s = 1.
    CHECK(g_deriv_exact(3).numerator_at(0, 1) == -5);
    // At pi: odd orders vanish.
    for (int n = 0; n <= 12; ++n) {
        CHECK((g_deriv_exact(n).numerator_at(-1, 0) == 0) == (n % 2 == 1));
    }
}

TEST_CASE("series and symbolic routes agree with each other and the pole sum")
{
    const auto grid = full_grid();
    for (int n = 0; n <= 20; ++n) {
        for (const Rational &q : grid) {
            INFO("n = " << n << ", x = " << to_string(q) << " pi");
            const Angle x = Angle::pi_times(q);
            const auto series = g_deriv(n, x, P128);
            const auto symbolic = eval_trig_rational(g_deriv_exact(n), x, P128);
            CHECK(series.overlaps(symbolic));
            CHECK(midpoints_within(series, symbolic, 1e-25));
            if (n >= 2 && n % 3 == 2) {
                CHECK(oracle::overlaps(series, oracle::g_deriv_pole_sum(n, q, 2000)));
            }
        }
    }
}

TEST_CASE("pole-sum oracle pins the series to high relative accuracy")
{
    for (int n : {6, 10, 16}) {
        for (const Rational &q : {make_rational(1, 5), make_rational(2, 3), make_rational(13, 10)}) {
            INFO("n = " << n << ", x = " << to_string(q) << " pi");
            const auto b = oracle::g_deriv_pole_sum(n, q, 20000);
            const auto v = g_deriv(n, Angle::pi_times(q), P128);
            CHECK(oracle::overlaps(v, b));
            CHECK(oracle::width(b) <= 1e-20 * std::abs(v.to_double()));
        }
    }
}

TEST_CASE("reflection symmetry")
{
    for (int n = 0; n <= 10; ++n) {
        for (int i = 1; i < 20; ++i) {
            const Rational q = make_rational(i, 20);
            const auto a = g_deriv(n, Angle::pi_times(q), P128);
            const auto b = g_deriv(n, Angle::pi_times(Rational(2 - q)), P128);
            CHECK(a.overlaps(n % 2 == 0 ? b : -b));
        }
    }
}

TEST_CASE("sign pattern on both halves")
{
    for (int n = 0; n <= 20; ++n) {
        for (int i = 1; i < 24; ++i) {
            const Rational q = make_rational(i, 24);
            INFO("n = " << n << ", x = " << to_string(q) << " pi");
            const auto left = g_deriv(n, Angle::pi_times(q), P128);
            CHECK((n % 2 == 0 ? left : -left).is_positive());
            CHECK(g_deriv(n, Angle::pi_times(Rational(1 + q)), P128).is_positive());
        }
        if (n % 2 == 1) {
            CHECK(g_pi(n, P128).is_exact_zero());
        }
    }
}

TEST_CASE("closed forms at pi/2 and pi")
{
    CHECK(g_half_pi(0, P128).contains(BigInt(1)));
    CHECK(g_half_pi(1, P128).contains(BigInt(-1)));
    CHECK(g_half_pi(1, P128).is_exact());
    CHECK(g_half_pi(3, P128).contains(BigInt(-5)));
    CHECK(g_pi(0, P128).contains(make_rational(1, 2)));
    CHECK(g_pi(2, P128).contains(make_rational(1, 4)));
    CHECK(g_pi(5, P128).is_exact_zero());
    for (int n = 0; n <= 20; ++n) {
        INFO("n = " << n);
        const auto half_series = g_deriv(n, Angle::pi_times(1, 2), P128);
        const auto half_symbolic = eval_trig_rational(g_deriv_exact(n), Angle::pi_times(1, 2), P128);
        const auto pi_series = g_deriv(n, Angle::pi_times(1), P128);
        const auto pi_symbolic = eval_trig_rational(g_deriv_exact(n), Angle::pi_times(1), P128);
        CHECK(g_half_pi(n, P128).overlaps(half_series));
        CHECK(g_half_pi(n, P128).overlaps(half_symbolic));
        CHECK(g_pi(n, P128).overlaps(pi_series));
        CHECK(g_pi(n, P128).overlaps(pi_symbolic));
        CHECK(midpoints_within(g_half_pi(n, P128), half_series, 1e-25));
        CHECK(midpoints_within(g_pi(n, P128), pi_series, 1e-25));
    }
    CHECK_THROWS_AS(g_half_pi(-1, P128), std::invalid_argument);
    CHECK_THROWS_AS(g_pi(-1, P128), std::invalid_argument);
}

TEST_CASE("decimal arguments near pi")
{
    const Angle x = Angle::parse("3.14159265358979", P128.working_bits());
    const auto v = g_deriv(1, x, P128);
    CHECK(v.contains_zero());
    CHECK(v.rad() <= Mag(1e-13));
}
