#include "oracles.hpp"

#include <stdexcept>
#include <vector>

namespace oracle
{

Float::Float()
{
    mpfr_init2(m_v, bits);
    mpfr_set_zero(m_v, 1);
}

Float::Float(long v) : Float()
{
    mpfr_set_si(m_v, v, MPFR_RNDN);
}

Float::Float(const Float &o)
{
    mpfr_init2(m_v, bits);
    mpfr_set(m_v, o.m_v, MPFR_RNDN);
}

Float &Float::operator=(const Float &o)
{
    mpfr_set(m_v, o.m_v, MPFR_RNDN);
    return *this;
}

Float::~Float()
{
    mpfr_clear(m_v);
}

double Float::to_double() const
{
    return mpfr_get_d(m_v, MPFR_RNDN);
}

std::string Float::str(int digits) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits, m_v);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string Bracket::str() const
{
    return "[" + lo.str() + ", " + hi.str() + "]";
}

namespace
{

// Widen [s, s] to [s - slack - below, s + slack + above], slack = |s| 2^-e.
Bracket around(const Float &s, long slack_exp, const Float &below, const Float &above)
{
    Float slack;
    mpfr_abs(slack.get(), s.get(), MPFR_RNDU);
    mpfr_mul_2si(slack.get(), slack.get(), -slack_exp, MPFR_RNDU);
    Bracket b;
    mpfr_sub(b.lo.get(), s.get(), slack.get(), MPFR_RNDD);
    mpfr_sub(b.lo.get(), b.lo.get(), below.get(), MPFR_RNDD);
    mpfr_add(b.hi.get(), s.get(), slack.get(), MPFR_RNDU);
    mpfr_add(b.hi.get(), b.hi.get(), above.get(), MPFR_RNDU);
    return b;
}

Float from_rational(const Rational &q)
{
    Float f;
    mpfr_set_q(f.get(), q.get_mpq_t(), MPFR_RNDN);
    return f;
}

} // namespace

Bracket point(const Rational &q)
{
    Bracket b;
    mpfr_set_q(b.lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b.hi.get(), q.get_mpq_t(), MPFR_RNDU);
    return b;
}

Bracket pi_times(const Rational &q)
{
    Bracket b;
    Float plo, phi;
    mpfr_const_pi(plo.get(), MPFR_RNDD);
    mpfr_const_pi(phi.get(), MPFR_RNDU);
    if (q >= 0) {
        mpfr_mul_q(b.lo.get(), plo.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(b.hi.get(), phi.get(), q.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(b.lo.get(), phi.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(b.hi.get(), plo.get(), q.get_mpq_t(), MPFR_RNDU);
    }
    return b;
}

bool overlaps(const cmtrig::PrecReal &v, const Bracket &b)
{
    Float lo, hi;
    mpfr_sub(lo.get(), v.mid(), v.rad().raw(), MPFR_RNDD);
    mpfr_add(hi.get(), v.mid(), v.rad().raw(), MPFR_RNDU);
    return mpfr_lessequal_p(lo.get(), b.hi.get()) && mpfr_lessequal_p(b.lo.get(), hi.get());
}

bool contains(const cmtrig::PrecReal &v, const Bracket &b)
{
    Float lo, hi;
    mpfr_sub(lo.get(), v.mid(), v.rad().raw(), MPFR_RNDU);
    mpfr_add(hi.get(), v.mid(), v.rad().raw(), MPFR_RNDD);
    return mpfr_lessequal_p(lo.get(), b.lo.get()) && mpfr_lessequal_p(b.hi.get(), hi.get());
}

double distance(const cmtrig::PrecReal &v, const Bracket &b)
{
    Float mid, half;
    mpfr_add(mid.get(), b.lo.get(), b.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    mpfr_sub(half.get(), b.hi.get(), b.lo.get(), MPFR_RNDU);
    mpfr_div_2ui(half.get(), half.get(), 1, MPFR_RNDU);
    mpfr_sub(mid.get(), v.mid(), mid.get(), MPFR_RNDN);
    mpfr_abs(mid.get(), mid.get(), MPFR_RNDU);
    mpfr_add(mid.get(), mid.get(), half.get(), MPFR_RNDU);
    return mpfr_get_d(mid.get(), MPFR_RNDU);
}

double width(const Bracket &b)
{
    Float w;
    mpfr_sub(w.get(), b.hi.get(), b.lo.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

Rational bernoulli_akiyama_tanigawa(int n)
{
    if (n < 0) {
        throw std::invalid_argument("negative index");
    }
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
            a[static_cast<std::size_t>(j - 1)].canonicalize();
        }
    }
    // The algorithm produces B_1 = +1/2.
    return n == 1 ? Rational(-1, 2) : a[0];
}

BigInt euler_boustrophedon(int n)
{
    if (n < 0) {
        throw std::invalid_argument("negative index");
    }
    if (n % 2 == 1) {
        return 0;
    }
    std::vector<BigInt> prev{BigInt(1)};
    for (int row = 1; row <= n; ++row) {
        std::vector<BigInt> cur(static_cast<std::size_t>(row) + 1);
        cur[0] = 0;
        for (int k = 1; k <= row; ++k) {
            cur[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(row - k)];
        }
        prev = std::move(cur);
    }
    const BigInt zigzag = prev.back();
    return (n / 2) % 2 == 0 ? zigzag : BigInt(-zigzag);
}

Bracket zeta_direct(long s, long K)
{
    Float sum, term;
    for (long k = K; k >= 1; --k) {
        mpfr_set_si(term.get(), k, MPFR_RNDN);
        mpfr_pow_si(term.get(), term.get(), -s, MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    Float tail;
    mpfr_set_si(tail.get(), K, MPFR_RNDU);
    mpfr_pow_si(tail.get(), tail.get(), 1 - s, MPFR_RNDU);
    mpfr_div_si(tail.get(), tail.get(), s - 1, MPFR_RNDU);
    return around(sum, 480, Float(0), tail);
}

Bracket odd_sum_direct(long s, long K)
{
    Float sum, term;
    for (long p = K; p >= 0; --p) {
        mpfr_set_si(term.get(), 2 * p + 1, MPFR_RNDN);
        mpfr_pow_si(term.get(), term.get(), -s, MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    Float tail;
    mpfr_set_si(tail.get(), 2 * K + 1, MPFR_RNDU);
    mpfr_pow_si(tail.get(), tail.get(), 1 - s, MPFR_RNDU);
    mpfr_div_si(tail.get(), tail.get(), 2 * (s - 1), MPFR_RNDU);
    return around(sum, 480, Float(0), tail);
}

Bracket polygamma_direct(int m, const Rational &x, long K)
{
    const Float xf = from_rational(x);
    Float sum, term;
    for (long k = K; k >= 0; --k) {
        mpfr_add_si(term.get(), xf.get(), k, MPFR_RNDN);
        mpfr_pow_si(term.get(), term.get(), -(m + 1L), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    Float tail;
    mpfr_add_si(tail.get(), xf.get(), K, MPFR_RNDD);
    mpfr_pow_si(tail.get(), tail.get(), -m, MPFR_RNDU);
    mpfr_div_si(tail.get(), tail.get(), m, MPFR_RNDU);

    Float fact;
    mpfr_fac_ui(fact.get(), static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_mul(sum.get(), sum.get(), fact.get(), MPFR_RNDN);
    mpfr_mul(tail.get(), tail.get(), fact.get(), MPFR_RNDU);
    if (m % 2 == 0) {
        mpfr_neg(sum.get(), sum.get(), MPFR_RNDN);
        return around(sum, 480, tail, Float(0));
    }
    return around(sum, 480, Float(0), tail);
}

Bracket g_deriv_pole_sum(int n, const Rational &q, long K)
{
    const long s = n + 2L;
    Float x, two_pi;
    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    mpfr_mul_q(x.get(), two_pi.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);

    // Sum from the smallest terms up.
    Float sum, term;
    for (long j = K; j >= 0; --j) {
        for (long k : {j, -j}) {
            mpfr_mul_si(term.get(), two_pi.get(), k, MPFR_RNDN);
            mpfr_sub(term.get(), x.get(), term.get(), MPFR_RNDN);
            mpfr_pow_si(term.get(), term.get(), -s, MPFR_RNDN);
            mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
            if (j == 0) {
                break;
            }
        }
    }
    Float tail;
    mpfr_mul_si(tail.get(), two_pi.get(), K, MPFR_RNDD);
    mpfr_pow_si(tail.get(), tail.get(), -s, MPFR_RNDU);
    mpfr_mul_si(tail.get(), tail.get(), 2 * (1 + K / (n + 1) + 1), MPFR_RNDU);

    Float pref;
    mpfr_fac_ui(pref.get(), static_cast<unsigned long>(n) + 1, MPFR_RNDN);
    mpfr_mul_2ui(pref.get(), pref.get(), 1, MPFR_RNDN);
    if (n % 2 == 1) {
        mpfr_neg(pref.get(), pref.get(), MPFR_RNDN);
    }
    mpfr_mul(sum.get(), sum.get(), pref.get(), MPFR_RNDN);
    mpfr_abs(pref.get(), pref.get(), MPFR_RNDU);
    mpfr_mul(tail.get(), tail.get(), pref.get(), MPFR_RNDU);
    // The tail's sign is unknown in general; widen both ways. A relative
    // slack of 2^-440 covers the pi rounding in x and the summation.
    return around(sum, 440, tail, tail);
}

std::pair<Rational, Rational> ab_brute(int k)
{
    Rational a(0), b(0);
    for (long v = 0; 3 * v + 1 <= k; ++v) {
        a += Rational(v % 2 == 0 ? 1 : -1, 3 * v + 1);
    }
    for (long v = 0; 3 * v + 2 <= k; ++v) {
        b += Rational(v % 2 == 0 ? 1 : -1, 3 * v + 2);
    }
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

long Gen::integer(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(m_rng);
}

double Gen::real(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(m_rng);
}

Rational Gen::rational(long lo_num, long hi_num, long den)
{
    Rational q(integer(lo_num, hi_num), den);
    q.canonicalize();
    return q;
}

} // namespace oracle
