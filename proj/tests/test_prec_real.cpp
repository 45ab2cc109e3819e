#include "oracles.hpp"

#include <cmtrig/angle.hpp>
#include <cmtrig/prec_real.hpp>
#include <cmtrig/rational.hpp>

#include <catch_amalgamated.hpp>


using namespace cmtrig;

namespace
{

// [f(q) rounded down, f(q) rounded up] at the oracle precision. q itself is
// rounded to 512 bits first; the bracket is widened by |q| 2^-480, which
// covers that rounding for every f used here (Lipschitz below 2^30 on the
// sampled range).
oracle::Bracket mpfr_bracket(const Rational &q, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t))
{
    oracle::Bracket b;
    oracle::Float x;
    oracle::Float slack;
    mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_abs(slack.get(), x.get(), MPFR_RNDU);
    mpfr_mul_2si(slack.get(), slack.get(), -480, MPFR_RNDU);
    f(b.lo.get(), x.get(), MPFR_RNDD);
    f(b.hi.get(), x.get(), MPFR_RNDU);
    mpfr_sub(b.lo.get(), b.lo.get(), slack.get(), MPFR_RNDD);
    mpfr_add(b.hi.get(), b.hi.get(), slack.get(), MPFR_RNDU);
    return b;
}

} // namespace

TEST_CASE("working precision doubles the requested digits")
{
    CHECK(Precision(128).working_bits() == 260);
    CHECK(Precision(128).digits() == 39);
    CHECK(Precision(53).working_bits() >= 106);
    CHECK(Precision(64).doubled() == Precision(128));
    CHECK_THROWS_AS(Precision(52), std::invalid_argument);
}

TEST_CASE("rationals are canonical and parse strictly")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK(parse_rational("-15/4") == make_rational(-15, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("exact inputs stay exact where the arithmetic is exact")
{
    const auto a = PrecReal::from_int(3, 64);
    const auto b = PrecReal::from_int(-5, 64);
    CHECK((a + b).is_exact());
    CHECK((a * b).contains(BigInt(-15)));
    CHECK((a * b).is_exact());
    CHECK(mul_2si(a, -3).contains(make_rational(3, 8)));
    CHECK(mul_2si(a, -3).is_exact());
    CHECK(PrecReal(64).is_exact_zero());
    CHECK((a / PrecReal::from_int(3, 64) - 1).contains_zero());
}

TEST_CASE("division by an enclosure of zero is refused")
{
    PrecReal z = PrecReal::from_int(0, 64);
    z.add_error(Mag(1e-10));
    CHECK_THROWS_AS(PrecReal::from_int(1, 64) / z, std::domain_error);
    CHECK_THROWS_AS(log(z), std::domain_error);
}

TEST_CASE("decimal literals carry one unit in the last digit")
{
    const auto x = PrecReal::from_decimal("3.14", 128);
    CHECK(x.contains(make_rational(314, 100)));
    CHECK(x.contains(make_rational(3145, 1000)));
    CHECK_FALSE(x.contains(make_rational(316, 100)));
    CHECK(PrecReal::from_decimal("12", 64).is_exact());
    CHECK(PrecReal::from_decimal("2.5e-3", 128).contains(make_rational(26, 10000)));
    CHECK_THROWS_AS(PrecReal::from_decimal("abc", 64), std::invalid_argument);
}

TEST_CASE("property: field operations enclose the exact rational result")
{
    oracle::Gen gen(20240601);
    for (int trial = 0; trial < 400; ++trial) {
        const mpfr_prec_t prec = gen.integer(53, 300);
        const Rational p = gen.rational(-100000, 100000, gen.integer(1, 997));
        Rational q = gen.rational(-100000, 100000, gen.integer(1, 997));
        if (q == 0) {
            q = 1;
        }
        auto a = PrecReal::from_rational(p, prec);
        auto b = PrecReal::from_rational(q, prec);
        // Give the inputs some width of their own; the exact values stay inside.
        a.add_error(Mag(1e-30));
        b.add_error(Mag(1e-30));
        INFO("p = " << to_string(p) << ", q = " << to_string(q) << ", prec = " << prec);
        CHECK((a + b).contains(Rational(p + q)));
        CHECK((a - b).contains(Rational(p - q)));
        CHECK((a * b).contains(Rational(p * q)));
        CHECK((a / b).contains(Rational(p / q)));
        CHECK(sqr(a).contains(Rational(p * p)));
        CHECK(pow_int(b, -3).contains(Rational(1 / (q * q * q))));
        CHECK((a * 7 - 2).contains(Rational(7 * p - 2)));
    }
}

TEST_CASE("property: elementary functions enclose correctly rounded MPFR values")
{
    oracle::Gen gen(77);
    for (int trial = 0; trial < 300; ++trial) {
        const mpfr_prec_t prec = gen.integer(53, 400);
        const Rational q = gen.rational(1, 200000, gen.integer(1, 9999));
        const auto x = PrecReal::from_rational(q, prec);
        INFO("x = " << to_string(q) << ", prec = " << prec);
        CHECK(oracle::contains(sqrt(x), mpfr_bracket(q, mpfr_sqrt)));
        CHECK(oracle::contains(exp(x / 1000), mpfr_bracket(q / 1000, mpfr_exp)));
        CHECK(oracle::contains(log(x), mpfr_bracket(q, mpfr_log)));
        CHECK(oracle::contains(sin(x), mpfr_bracket(q, mpfr_sin)));
        CHECK(oracle::contains(cos(x), mpfr_bracket(q, mpfr_cos)));
    }
}

TEST_CASE("property: radii propagate through function composition")
{
    oracle::Gen gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational q = gen.rational(1, 3000, 1000);
        auto x = PrecReal::from_rational(q, 128);
        x.add_error(Mag(1e-20));
        // Every point of the input ball maps inside the output ball.
        const auto y = exp(sin(x)) / (1 + sqr(cos(x)));
        const Rational step = make_rational(BigInt(1), BigInt(BigInt(1) << 67));
        for (const Rational &shift : {Rational(0), Rational(step), Rational(-step)}) {
            const auto xs = PrecReal::from_rational(Rational(q + shift), 256);
            const auto ys = exp(sin(xs)) / (1 + sqr(cos(xs)));
            CHECK(y.overlaps(ys));
        }
    }
}

TEST_CASE("pi and midpoint utilities")
{
    const auto pi = PrecReal::pi(200);
    CHECK(oracle::overlaps(pi, oracle::pi_times(Rational(1))));
    CHECK(pi.rad() <= Mag::pow2(-198));
    CHECK(compare_midpoints(pi, PrecReal::from_int(3, 64)) > 0);
    CHECK(midpoint_distance(pi, pi).is_zero());
}

TEST_CASE("angles: exact sin and cos on the quarter lattice")
{
    const auto half = Angle::pi_times(1, 2).sin_cos(128);
    CHECK(half.sin.contains(BigInt(1)));
    CHECK(half.sin.is_exact());
    CHECK(half.cos.is_exact_zero());
    const auto pi = Angle::pi_times(1).sin_cos(128);
    CHECK(pi.sin.is_exact_zero());
    CHECK(pi.cos.contains(BigInt(-1)));
    CHECK(pi.cos.is_exact());
    const auto wrap = Angle::pi_times(-7, 2).sin_cos(128);
    CHECK(wrap.sin.contains(BigInt(1)));
    CHECK(Angle::pi_times(2, 3).one_minus_cos(128).contains(make_rational(3, 2)));
}

TEST_CASE("angles: parsing forms")
{
    CHECK(*Angle::parse("pi", 128).pi_multiple() == Rational(1));
    CHECK(*Angle::parse("pi/2", 128).pi_multiple() == make_rational(1, 2));
    CHECK(*Angle::parse("3pi/4", 128).pi_multiple() == make_rational(3, 4));
    CHECK(*Angle::parse("3*pi/4", 128).pi_multiple() == make_rational(3, 4));
    CHECK(*Angle::parse("2/3 pi", 128).pi_multiple() == make_rational(2, 3));
    CHECK(*Angle::parse("-pi/4", 128).pi_multiple() == make_rational(-1, 4));
    CHECK_FALSE(Angle::parse("0.5", 128).is_pi_multiple());
    CHECK(Angle::parse("1/3", 128).value(128).contains(make_rational(1, 3)));
    CHECK_THROWS_AS(Angle::parse("pi/0", 128), std::invalid_argument);
    CHECK_THROWS_AS(Angle::parse("", 128), std::invalid_argument);
}

TEST_CASE("angles: arithmetic keeps pi multiples exact")
{
    const Angle a = Angle::pi_times(1, 3) + Angle::pi_times(1, 6);
    REQUIRE(a.is_pi_multiple());
    CHECK(*a.pi_multiple() == make_rational(1, 2));
    CHECK(*(2 * a).pi_multiple() == Rational(1));
    CHECK(*(Angle::pi_times(2) - a).pi_multiple() == make_rational(3, 2));
    CHECK(a.compare(Angle::pi_times(1, 2)) == 0);
    CHECK(Angle::from_real(PrecReal::from_int(3, 128)).compare_pi_times(Rational(1)) < 0);
    CHECK(Angle::pi_times(3, 4).to_string() == "3*pi/4");
}
