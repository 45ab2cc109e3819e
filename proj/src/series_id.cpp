#include <cmtrig/series_id.hpp>

#include <stdexcept>
#include <string>

namespace cmtrig
{

namespace
{

// Scratch float for directed-rounding bound arithmetic.
class Scratch
{
public:
    Scratch()
    {
        mpfr_init2(v, Mag::bits);
    }
    ~Scratch()
    {
        mpfr_clear(v);
    }
    Scratch(const Scratch &) = delete;
    Scratch &operator=(const Scratch &) = delete;
    mpfr_t v;
};

struct Ratio {
    Mag q;                  // upper bound on |cos x|
    Scratch one_minus_q;    // lower bound on 1 - q
};

void ratio_of(const Angle &x, mpfr_prec_t wp, const char *what, Ratio &r)
{
    const PrecReal c = x.sin_cos(wp).cos;
    r.q = c.abs_upper();
    if (mpfr_cmp_d(r.q.raw(), max_series_ratio) > 0) {
        throw std::domain_error(std::string(what) + ": |cos x| > " + std::to_string(max_series_ratio) +
                                ", the series converges too slowly at x = " + x.to_string());
    }
    mpfr_ui_sub(r.one_minus_q.v, 1, r.q.raw(), MPFR_RNDD);
}

// q^{K+1} / ((K+1)(1-q)), rounded up.
Mag lampret_tail(const Ratio &r, int terms)
{
    Mag out;
    Scratch den;
    mpfr_pow_ui(out.raw(), r.q.raw(), static_cast<unsigned long>(terms) + 1, MPFR_RNDU);
    mpfr_mul_ui(den.v, r.one_minus_q.v, static_cast<unsigned long>(terms) + 1, MPFR_RNDD);
    mpfr_div(out.raw(), out.raw(), den.v, MPFR_RNDU);
    return out;
}

// sgn-free sum_{k=1}^{K} sin(kx)/k c^k; shared between H and Lampret.
struct PartialSums {
    PrecReal lampret;
    PrecReal h;
};

PartialSums partial_sums(const Angle &x, int terms, mpfr_prec_t wp)
{
    const PrecReal c = x.sin_cos(wp).cos;
    PrecReal power = PrecReal::from_int(1, wp);
    PrecReal fejer_k(wp);
    PartialSums out{PrecReal(wp), PrecReal(wp)};
    for (int k = 1; k <= terms; ++k) {
        const PrecReal term = (static_cast<long>(k) * x).sin_cos(wp).sin / k;
        fejer_k += term;
        power *= c;
        out.lampret += term * power;
        out.h += fejer_k * power;
    }
    return out;
}

long floor_div3(long a)
{
    return a >= 0 ? a / 3 : -((-a + 2) / 3);
}

Rational alternating(long upper, long offset)
{
    Rational acc(0);
    for (long v = 0; v <= upper; ++v) {
        const Rational t = make_rational(1, 3 * v + offset);
        acc += (v % 2 == 0) ? t : Rational(-t);
    }
    return acc;
}

void require_terms(int terms, const char *what)
{
    if (terms < 1) {
        throw std::invalid_argument(std::string(what) + ": number of terms must be >= 1");
    }
}

void require_open_half_turn(const Angle &x, const char *what)
{
    if (x.compare_pi_times(Rational(0)) <= 0 || x.compare_pi_times(Rational(1)) >= 0) {
        throw std::domain_error(std::string(what) + ": x must lie in (0, pi), got " + x.to_string());
    }
}

} // namespace

PrecReal fejer(int k, const Angle &x, Precision prec)
{
    require_terms(k, "fejer");
    const auto wp = prec.working_bits();
    PrecReal acc(wp);
    for (int v = 1; v <= k; ++v) {
        acc += (static_cast<long>(v) * x).sin_cos(wp).sin / v;
    }
    return acc;
}

Mag h_tail_bound(const Angle &x, int terms, Precision prec)
{
    require_terms(terms, "h_partial");
    require_open_half_turn(x, "h_partial");
    Ratio r;
    ratio_of(x, prec.working_bits(), "h_partial", r);

    Scratch lnk, inv, den;
    mpfr_set_ui(lnk.v, static_cast<unsigned long>(terms) + 1, MPFR_RNDU);
    mpfr_log(lnk.v, lnk.v, MPFR_RNDU);
    mpfr_mul_ui(den.v, r.one_minus_q.v, static_cast<unsigned long>(terms) + 1, MPFR_RNDD);
    mpfr_ui_div(inv.v, 1, den.v, MPFR_RNDU);

    Mag out;
    mpfr_add_ui(out.raw(), lnk.v, 1, MPFR_RNDU);
    mpfr_add(out.raw(), out.raw(), inv.v, MPFR_RNDU);
    Scratch qpow;
    mpfr_pow_ui(qpow.v, r.q.raw(), static_cast<unsigned long>(terms) + 1, MPFR_RNDU);
    mpfr_mul(out.raw(), out.raw(), qpow.v, MPFR_RNDU);
    mpfr_div(out.raw(), out.raw(), r.one_minus_q.v, MPFR_RNDU);
    return out;
}

SeriesEval h_partial(const Angle &x, int terms, Precision prec)
{
    const Mag tail = h_tail_bound(x, terms, prec);
    PrecReal value = partial_sums(x, terms, prec.working_bits()).h;
    value.add_error(tail);
    return SeriesEval{std::move(value), terms, tail};
}

int h_terms_for(const Angle &x, const Mag &accuracy, Precision prec)
{
    // The bound is decreasing in K; bracket by doubling, then bisect.
    int hi = 1;
    while (!(h_tail_bound(x, hi, prec) <= accuracy)) {
        if (hi > (1 << 24)) {
            throw std::domain_error("h_terms_for: accuracy target out of reach");
        }
        hi *= 2;
    }
    int lo = hi / 2;
    while (lo + 1 < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (h_tail_bound(x, mid, prec) <= accuracy) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

PrecReal h_closed(const Angle &x, Precision prec)
{
    require_open_half_turn(x, "h_closed");
    const auto wp = prec.working_bits();
    return (Angle::pi_times(1, 2) - x).value(wp) / x.one_minus_cos(wp);
}

LampretCheck lampret_check(const Angle &x, int terms, Precision prec)
{
    require_terms(terms, "lampret_check");
    const int sign = x.compare_pi_times(Rational(0));
    if (sign == 0) {
        throw std::domain_error("lampret_check: x must be nonzero");
    }
    const Angle ax = sign > 0 ? x : -x;
    if (ax.compare_pi_times(Rational(1)) >= 0) {
        throw std::domain_error("lampret_check: |x| must be < pi, got " + x.to_string());
    }
    const auto wp = prec.working_bits();
    Ratio r;
    ratio_of(x, wp, "lampret_check", r);
    const Mag tail = lampret_tail(r, terms);

    PrecReal sum = partial_sums(x, terms, wp).lampret;
    if (sign < 0) {
        sum = -sum;
    }
    sum.add_error(tail);
    return LampretCheck{(Angle::pi_times(1, 2) - ax).value(wp), SeriesEval{std::move(sum), terms, tail}};
}

std::pair<Rational, Rational> ab_coeffs(int k)
{
    if (k < 1) {
        throw std::invalid_argument("ab_coeffs: k must be >= 1");
    }
    return {alternating(floor_div3(k - 1L), 1), alternating(floor_div3(k - 2L), 2)};
}

Rational pi_partial_sum(int terms)
{
    require_terms(terms, "pi_series");
    Rational acc(0);
    BigInt pow2(1);
    for (int k = 1; k <= terms; ++k) {
        pow2 *= 2;
        const auto [a, b] = ab_coeffs(k);
        acc += (a + b) / Rational(pow2);
    }
    acc.canonicalize();
    return acc;
}

SeriesEval pi_series(int terms, Precision prec)
{
    const auto wp = prec.working_bits();
    const PrecReal c = PrecReal::from_rational(make_rational(3, 2), wp) * sqrt(PrecReal::from_int(3, wp));
    PrecReal value = c * PrecReal::from_rational(pi_partial_sum(terms), wp);
    // (9 sqrt 3 / 4) 2^{-K} = (3/2) c 2^{-K}
    const Mag tail = (PrecReal::from_rational(make_rational(3, 2), wp) * c).abs_upper() * Mag::pow2(-terms);
    value.add_error(tail);
    return SeriesEval{std::move(value), terms, tail};
}

} // namespace cmtrig
