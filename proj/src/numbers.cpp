#include <cmtrig/numbers.hpp>
#include <cmtrig/power_sum.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmtrig
{

namespace
{

void require_nonnegative(int n, const char *what)
{
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": index must be nonnegative, got " + std::to_string(n));
    }
}

// Grow-only caches; entries never change once written.
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

std::mutex euler_mutex;
std::vector<BigInt> euler_cache{BigInt(1)};

} // namespace

Rational bernoulli(int n)
{
    require_nonnegative(n, "bernoulli");
    if (n >= 3 && n % 2 == 1) {
        return Rational(0);
    }
    const std::lock_guard lock(bernoulli_mutex);
    auto &b = bernoulli_cache;
    for (auto m = static_cast<int>(b.size()); m <= n; ++m) {
        // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
        Rational acc(0);
        for (int k = 0; k < m; ++k) {
            if (k >= 3 && k % 2 == 1) {
                continue;
            }
            acc += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(k))) * b[k];
        }
        Rational bm = -acc / (m + 1);
        bm.canonicalize();
        b.push_back(std::move(bm));
    }
    return b[static_cast<std::size_t>(n)];
}

BigInt euler(int n)
{
    require_nonnegative(n, "euler");
    if (n % 2 == 1) {
        return BigInt(0);
    }
    const std::lock_guard lock(euler_mutex);
    auto &e = euler_cache; // e[i] holds E_{2i}
    for (auto i = static_cast<int>(e.size()); 2 * i <= n; ++i) {
        const int m = 2 * i;
        BigInt acc(0);
        for (int k = 0; k < i; ++k) {
            acc += binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(2 * k)) * e[k];
        }
        e.push_back(-acc);
    }
    return e[static_cast<std::size_t>(n / 2)];
}

PrecReal zeta_even(int m, Precision prec)
{
    if (m < 1) {
        throw std::invalid_argument("zeta_even: m must be >= 1, got " + std::to_string(m));
    }
    const auto wp = prec.working_bits();
    const Rational b = abs(bernoulli(2 * m));
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * m));
    const Rational coeff = make_rational(b.get_num() * two_pow, 2 * b.get_den() * factorial(2UL * m));
    return PrecReal::from_rational(coeff, wp) * pow_int(PrecReal::pi(wp), 2L * m);
}

PrecReal odd_sum(const PrecReal &x, Precision prec)
{
    const auto wp = prec.working_bits();
    if (!(x - 1).is_positive()) {
        throw std::domain_error("odd_sum: series diverges unless x > 1");
    }
    if (x.is_exact() && mpfr_integer_p(x.mid()) && mpfr_fits_slong_p(x.mid(), MPFR_RNDN)) {
        return odd_sum(mpfr_get_si(x.mid(), MPFR_RNDN), prec);
    }
    const PrecReal s = x.with_precision(wp);
    // sum (2p+1)^{-s} = 2^{-s} sum (p + 1/2)^{-s}
    const PowerSum sum = shifted_power_sum(PrecReal::from_rational(make_rational(1, 2), wp), s, wp);
    return exp(-s * log(PrecReal::from_int(2, wp))) * sum.value;
}

PrecReal odd_sum(long x, Precision prec)
{
    if (x <= 1) {
        throw std::domain_error("odd_sum: series diverges unless x > 1, got " + std::to_string(x));
    }
    const auto wp = prec.working_bits();
    if (x % 2 == 0) {
        const PrecReal factor = 1 - mul_2si(PrecReal::from_int(1, wp), -x);
        return factor * zeta_even(static_cast<int>(x / 2), prec);
    }
    const PowerSum sum = shifted_power_sum(PrecReal::from_rational(make_rational(1, 2), wp), x, wp);
    return mul_2si(sum.value, -x);
}

PrecReal polygamma(int m, const PrecReal &x, Precision prec)
{
    if (m < 1) {
        throw std::domain_error("polygamma: order must be >= 1, got " + std::to_string(m));
    }
    if (!x.is_positive()) {
        throw std::domain_error("polygamma: argument must be > 0");
    }
    const auto wp = prec.working_bits();
    const PowerSum sum = shifted_power_sum(x.with_precision(wp), m + 1L, wp);
    const PrecReal scaled = PrecReal::from_bigint(factorial(static_cast<unsigned long>(m)), wp) * sum.value;
    return (m % 2 == 1) ? scaled : -scaled;
}

PrecReal kolbig_gap(int m, Precision prec)
{
    if (m < 1) {
        throw std::invalid_argument("kolbig_gap: m must be >= 1, got " + std::to_string(m));
    }
    const auto wp = prec.working_bits();
    const PrecReal quarter = PrecReal::from_rational(make_rational(1, 4), wp);
    const PrecReal three_quarters = PrecReal::from_rational(make_rational(3, 4), wp);
    return polygamma(2 * m, quarter, prec) - polygamma(2 * m, three_quarters, prec);
}

} // namespace cmtrig
