#include <cmtrig/numbers.hpp>
#include <cmtrig/power_sum.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cmtrig
{

namespace
{

struct Exponent {
    PrecReal value;
    std::optional<long> integer;
};

PrecReal neg_power(const PrecReal &x, const Exponent &s)
{
    if (s.integer) {
        return pow_int(x, -*s.integer);
    }
    return pow(x, -s.value);
}

constexpr int max_corrections = 400;
constexpr int max_restarts = 16;

PowerSum evaluate(const PrecReal &shift_in, const Exponent &s, mpfr_prec_t prec, const std::optional<Mag> &tol)
{
    const PrecReal shift = shift_in.with_precision(prec);
    if (!shift.is_positive()) {
        throw std::domain_error("shifted power sum needs a positive shift");
    }
    if (!(s.value - 1).is_positive()) {
        throw std::domain_error("shifted power sum diverges for exponent <= 1");
    }
    const PrecReal first = neg_power(shift, s);
    const Mag target = tol ? *tol : Mag::pow2(-static_cast<long>(prec)) * first.abs_lower();

    // X ~ prec/5 + s keeps the number of correction terms near prec/5.
    const double s_mid = s.value.to_double();
    long terms = std::max(1L, static_cast<long>(std::ceil(static_cast<double>(prec) / 5.0 + s_mid + 2.0
                                                          - shift.to_double())));

    for (int attempt = 0; attempt < max_restarts; ++attempt, terms = 2 * terms + 16) {
        PrecReal direct = first;
        for (long k = 1; k < terms; ++k) {
            direct += neg_power(shift + k, s);
        }

        const PrecReal x = shift + terms;
        const PrecReal x_neg_s = neg_power(x, s);
        PrecReal tail = x_neg_s * x / (s.value - 1) + mul_2si(x_neg_s, -1);
        PrecReal x_pow = x_neg_s / x;
        const PrecReal inv_x2 = PrecReal::from_int(1, prec) / sqr(x);
        PrecReal rising = s.value.with_precision(prec);
        Mag previous;

        for (int j = 1; j <= max_corrections; ++j) {
            const Rational weight = bernoulli(2 * j) / Rational(factorial(2UL * static_cast<unsigned long>(j)));
            const PrecReal c = PrecReal::from_rational(weight, prec) * rising * x_pow;
            const Mag size = c.abs_upper();
            const Mag bound = size + size;
            if (bound <= target) {
                PrecReal value = direct + tail;
                value.add_error(bound);
                return PowerSum{std::move(value), terms, j - 1, bound};
            }
            if (j > 1 && previous <= size) {
                break; // asymptotic terms stopped shrinking: move X further out
            }
            tail += c;
            previous = size;
            rising = rising * (s.value + (2 * j - 1)) * (s.value + 2 * j);
            x_pow = x_pow * inv_x2;
        }
    }
    throw std::runtime_error("shifted power sum failed to reach the requested tolerance");
}

} // namespace

PowerSum shifted_power_sum(const PrecReal &shift, long s, mpfr_prec_t prec, std::optional<Mag> tol)
{
    if (s < 2) {
        throw std::domain_error("shifted power sum needs an integer exponent >= 2");
    }
    return evaluate(shift, Exponent{PrecReal::from_int(s, prec), s}, prec, tol);
}

PowerSum shifted_power_sum(const PrecReal &shift, const PrecReal &s, mpfr_prec_t prec, std::optional<Mag> tol)
{
    return evaluate(shift, Exponent{s.with_precision(prec), std::nullopt}, prec, tol);
}

} // namespace cmtrig
