#include <cmtrig/prec_real.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace cmtrig
{

// ---------------------------------------------------------------------------
// Precision

Precision::Precision(long bits) : m_bits(bits)
{
    if (bits < min_bits) {
        throw std::invalid_argument("precision must be at least " + std::to_string(min_bits) + " bits, got "
                                    + std::to_string(bits));
    }
}

int Precision::digits() const noexcept
{
    return static_cast<int>(std::ceil(static_cast<double>(m_bits) * std::log10(2.0)));
}

long Precision::working_bits() const noexcept
{
    const auto guarded = static_cast<long>(std::ceil(2.0 * digits() * std::log2(10.0)));
    return std::max(m_bits, guarded);
}

namespace
{

// Scratch mpfr value for directed-rounding bound computations.
struct scratch {
    explicit scratch(mpfr_prec_t p)
    {
        mpfr_init2(v, p);
    }
    scratch(const scratch &) = delete;
    scratch &operator=(const scratch &) = delete;
    ~scratch()
    {
        mpfr_clear(v);
    }
    mpfr_t v;
};

std::string take_mpfr_string(char *buf)
{
    if (buf == nullptr) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

// Jet coefficients and near-pole values can have binary exponents well
// beyond MPFR's default range. The range is per thread, so every value
// constructor makes sure the current thread has been widened.
void widen_exponent_range()
{
    thread_local bool done = false;
    if (!done) {
        mpfr_set_emin(mpfr_get_emin_min());
        mpfr_set_emax(mpfr_get_emax_max());
        done = true;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Mag

Mag::Mag()
{
    widen_exponent_range();
    mpfr_init2(m_val, bits);
    mpfr_set_zero(m_val, 1);
}

Mag::Mag(double upper) : Mag()
{
    if (!(upper >= 0.0) || std::isinf(upper)) {
        throw std::invalid_argument("Mag requires a finite nonnegative value");
    }
    mpfr_set_d(m_val, upper, MPFR_RNDU);
}

Mag::Mag(const Mag &o)
{
    widen_exponent_range();
    mpfr_init2(m_val, bits);
    mpfr_set(m_val, o.m_val, MPFR_RNDU);
}

Mag::Mag(Mag &&o) noexcept
{
    widen_exponent_range();
    mpfr_init2(m_val, bits);
    mpfr_swap(m_val, o.m_val);
}

Mag &Mag::operator=(const Mag &o)
{
    if (this != &o) {
        mpfr_set(m_val, o.m_val, MPFR_RNDU);
    }
    return *this;
}

Mag &Mag::operator=(Mag &&o) noexcept
{
    mpfr_swap(m_val, o.m_val);
    return *this;
}

Mag::~Mag()
{
    mpfr_clear(m_val);
}

Mag Mag::pow2(long e)
{
    Mag m;
    mpfr_set_ui_2exp(m.m_val, 1, e, MPFR_RNDU);
    return m;
}

Mag Mag::abs_upper(const mpfr_t x)
{
    Mag m;
    mpfr_abs(m.m_val, x, MPFR_RNDU);
    return m;
}

bool Mag::is_zero() const
{
    return mpfr_zero_p(m_val) != 0;
}

double Mag::to_double() const
{
    return mpfr_get_d(m_val, MPFR_RNDU);
}

std::string Mag::to_string(int digits) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*RUe", std::max(0, digits - 1), m_val);
    return take_mpfr_string(buf);
}

Mag &Mag::operator+=(const Mag &o)
{
    mpfr_add(m_val, m_val, o.m_val, MPFR_RNDU);
    return *this;
}

Mag &Mag::operator*=(const Mag &o)
{
    mpfr_mul(m_val, m_val, o.m_val, MPFR_RNDU);
    return *this;
}

Mag Mag::div_by_lower(const Mag &a, const Mag &b_lower)
{
    if (b_lower.is_zero()) {
        throw std::domain_error("division by a zero lower bound");
    }
    Mag m;
    mpfr_div(m.m_val, a.m_val, b_lower.m_val, MPFR_RNDU);
    return m;
}

bool operator<(const Mag &a, const Mag &b)
{
    return mpfr_less_p(a.m_val, b.m_val) != 0;
}

bool operator<=(const Mag &a, const Mag &b)
{
    return mpfr_lessequal_p(a.m_val, b.m_val) != 0;
}

// ---------------------------------------------------------------------------
// PrecReal construction

namespace
{

// One ulp of mid, added to rad when the operation that produced mid was
// inexact (ternary != 0).
void add_rounding(Mag &rad, mpfr_srcptr mid, int ternary)
{
    if (ternary == 0) {
        return;
    }
    if (mpfr_zero_p(mid)) {
        // Underflow to zero; cover it with the smallest positive value.
        Mag tiny;
        mpfr_set_ui_2exp(tiny.raw(), 1, mpfr_get_emin(), MPFR_RNDU);
        rad += tiny;
        return;
    }
    rad += Mag::pow2(mpfr_get_exp(mid) - mpfr_get_prec(mid));
}

mpfr_prec_t joint_precision(const PrecReal &a, const PrecReal &b)
{
    return std::max(a.precision(), b.precision());
}

// Lower bound of |mid| - rad, clamped at zero.
void lower_abs(mpfr_t out, mpfr_srcptr mid, const Mag &rad)
{
    mpfr_abs(out, mid, MPFR_RNDD);
    mpfr_sub(out, out, rad.raw(), MPFR_RNDD);
    if (mpfr_sgn(out) < 0) {
        mpfr_set_zero(out, 1);
    }
}

bool valid_decimal(std::string_view s, int &fraction_digits, long &exponent, bool &is_integer)
{
    std::size_t i = 0;
    fraction_digits = 0;
    exponent = 0;
    is_integer = true;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        ++i;
    }
    std::size_t int_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++int_digits;
    }
    if (i < s.size() && s[i] == '.') {
        is_integer = false;
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++fraction_digits;
        }
    }
    if (int_digits + static_cast<std::size_t>(fraction_digits) == 0) {
        return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        is_integer = false;
        ++i;
        const std::size_t exp_start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            ++i;
        }
        const std::size_t digits_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (i == digits_start) {
            return false;
        }
        exponent = std::strtol(std::string(s.substr(exp_start, i - exp_start)).c_str(), nullptr, 10);
    }
    return i == s.size();
}

} // namespace

PrecReal::PrecReal(mpfr_prec_t prec)
{
    mpfr_init2(m_mid, prec);
    mpfr_set_zero(m_mid, 1);
}

PrecReal::PrecReal(const PrecReal &o) : m_rad(o.m_rad)
{
    mpfr_init2(m_mid, o.precision());
    mpfr_set(m_mid, o.m_mid, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal &&o) noexcept : m_rad(std::move(o.m_rad))
{
    mpfr_init2(m_mid, MPFR_PREC_MIN);
    mpfr_swap(m_mid, o.m_mid);
}

PrecReal &PrecReal::operator=(const PrecReal &o)
{
    if (this != &o) {
        mpfr_set_prec(m_mid, o.precision());
        mpfr_set(m_mid, o.m_mid, MPFR_RNDN);
        m_rad = o.m_rad;
    }
    return *this;
}

PrecReal &PrecReal::operator=(PrecReal &&o) noexcept
{
    mpfr_swap(m_mid, o.m_mid);
    m_rad = std::move(o.m_rad);
    return *this;
}

PrecReal::~PrecReal()
{
    mpfr_clear(m_mid);
}

PrecReal PrecReal::from_int(long v, mpfr_prec_t prec)
{
    PrecReal r(prec);
    add_rounding(r.m_rad, r.m_mid, mpfr_set_si(r.m_mid, v, MPFR_RNDN));
    return r;
}

PrecReal PrecReal::from_bigint(const BigInt &v, mpfr_prec_t prec)
{
    PrecReal r(prec);
    add_rounding(r.m_rad, r.m_mid, mpfr_set_z(r.m_mid, v.get_mpz_t(), MPFR_RNDN));
    return r;
}

PrecReal PrecReal::from_rational(const Rational &q, mpfr_prec_t prec)
{
    PrecReal r(prec);
    add_rounding(r.m_rad, r.m_mid, mpfr_set_q(r.m_mid, q.get_mpq_t(), MPFR_RNDN));
    return r;
}

PrecReal PrecReal::from_double(double v, mpfr_prec_t prec)
{
    if (!std::isfinite(v)) {
        throw std::invalid_argument("PrecReal::from_double: non-finite value");
    }
    PrecReal r(prec);
    add_rounding(r.m_rad, r.m_mid, mpfr_set_d(r.m_mid, v, MPFR_RNDN));
    return r;
}

PrecReal PrecReal::from_decimal(std::string_view text, mpfr_prec_t prec)
{
    int fraction_digits = 0;
    long exponent = 0;
    bool is_integer = true;
    if (!valid_decimal(text, fraction_digits, exponent, is_integer)) {
        throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
    }
    PrecReal r(prec);
    const std::string buf(text);
    char *end = nullptr;
    const int t = mpfr_strtofr(r.m_mid, buf.c_str(), &end, 10, MPFR_RNDN);
    add_rounding(r.m_rad, r.m_mid, t);
    if (!is_integer) {
        // One unit in the last written digit.
        Mag unit;
        mpfr_set_ui(unit.raw(), 10, MPFR_RNDU);
        mpfr_pow_si(unit.raw(), unit.raw(), exponent - fraction_digits, MPFR_RNDU);
        r.m_rad += unit;
    }
    return r;
}

PrecReal PrecReal::pi(mpfr_prec_t prec)
{
    PrecReal r(prec);
    add_rounding(r.m_rad, r.m_mid, mpfr_const_pi(r.m_mid, MPFR_RNDN));
    return r;
}

PrecReal PrecReal::from_mpfr(const mpfr_t mid, const Mag &rad, mpfr_prec_t prec)
{
    PrecReal r(prec);
    add_rounding(r.m_rad, r.m_mid, mpfr_set(r.m_mid, mid, MPFR_RNDN));
    r.m_rad += rad;
    return r;
}

// ---------------------------------------------------------------------------
// Queries

bool PrecReal::is_exact() const
{
    return m_rad.is_zero();
}

bool PrecReal::is_exact_zero() const
{
    return is_exact() && mpfr_zero_p(m_mid);
}

bool PrecReal::contains_zero() const
{
    return mpfr_cmpabs(m_mid, m_rad.raw()) <= 0;
}

bool PrecReal::is_positive() const
{
    return mpfr_sgn(m_mid) > 0 && mpfr_cmpabs(m_mid, m_rad.raw()) > 0;
}

bool PrecReal::is_negative() const
{
    return mpfr_sgn(m_mid) < 0 && mpfr_cmpabs(m_mid, m_rad.raw()) > 0;
}

bool PrecReal::is_nonnegative() const
{
    return mpfr_sgn(m_mid) >= 0 && mpfr_cmpabs(m_mid, m_rad.raw()) >= 0;
}

bool PrecReal::contains(const Rational &q) const
{
    scratch up(precision() + 128), down(precision() + 128);
    mpfr_sub_q(up.v, m_mid, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sub_q(down.v, m_mid, q.get_mpq_t(), MPFR_RNDD);
    const Mag dist = std::max(Mag::abs_upper(up.v), Mag::abs_upper(down.v),
                              [](const Mag &a, const Mag &b) { return a < b; });
    return dist <= m_rad;
}

bool PrecReal::contains(const BigInt &z) const
{
    return contains(Rational(z));
}

bool PrecReal::contains(const PrecReal &o) const
{
    return midpoint_distance(*this, o) + o.m_rad <= m_rad;
}

bool PrecReal::overlaps(const PrecReal &o) const
{
    return midpoint_distance(*this, o) <= m_rad + o.m_rad;
}

PrecReal &PrecReal::add_error(const Mag &err)
{
    m_rad += err;
    return *this;
}

PrecReal PrecReal::with_precision(mpfr_prec_t prec) const
{
    return from_mpfr(m_mid, m_rad, prec);
}

PrecReal PrecReal::midpoint() const
{
    PrecReal r(precision());
    mpfr_set(r.m_mid, m_mid, MPFR_RNDN);
    return r;
}

Mag PrecReal::abs_upper() const
{
    return Mag::abs_upper(m_mid) + m_rad;
}

Mag PrecReal::abs_lower() const
{
    Mag m;
    lower_abs(m.raw(), m_mid, m_rad);
    return m;
}

double PrecReal::to_double() const
{
    return mpfr_get_d(m_mid, MPFR_RNDN);
}

std::string PrecReal::mid_string(int digits) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*RNe", std::max(0, digits - 1), m_mid);
    return take_mpfr_string(buf);
}

std::string PrecReal::rad_string(int digits) const
{
    return m_rad.to_string(digits);
}

std::string PrecReal::to_string(int digits) const
{
    return mid_string(digits) + " +/- " + rad_string();
}

Mag midpoint_distance(const PrecReal &a, const PrecReal &b)
{
    const auto p = std::max(a.precision(), b.precision()) + 64;
    scratch up(p), down(p);
    mpfr_sub(up.v, a.mid(), b.mid(), MPFR_RNDU);
    mpfr_sub(down.v, a.mid(), b.mid(), MPFR_RNDD);
    return std::max(Mag::abs_upper(up.v), Mag::abs_upper(down.v), [](const Mag &x, const Mag &y) { return x < y; });
}

int compare_midpoints(const PrecReal &a, const PrecReal &b)
{
    const int c = mpfr_cmp(a.mid(), b.mid());
    return (c > 0) - (c < 0);
}

// ---------------------------------------------------------------------------
// Arithmetic

PrecReal operator-(const PrecReal &a)
{
    PrecReal r(a.precision());
    mpfr_neg(r.m_mid, a.m_mid, MPFR_RNDN);
    r.m_rad = a.m_rad;
    return r;
}

PrecReal operator+(const PrecReal &a, const PrecReal &b)
{
    PrecReal r(joint_precision(a, b));
    const int t = mpfr_add(r.m_mid, a.m_mid, b.m_mid, MPFR_RNDN);
    r.m_rad = a.m_rad + b.m_rad;
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal operator-(const PrecReal &a, const PrecReal &b)
{
    PrecReal r(joint_precision(a, b));
    const int t = mpfr_sub(r.m_mid, a.m_mid, b.m_mid, MPFR_RNDN);
    r.m_rad = a.m_rad + b.m_rad;
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal operator*(const PrecReal &a, const PrecReal &b)
{
    PrecReal r(joint_precision(a, b));
    const int t = mpfr_mul(r.m_mid, a.m_mid, b.m_mid, MPFR_RNDN);
    // |a| rb + |b| ra + ra rb
    r.m_rad = Mag::abs_upper(a.m_mid) * b.m_rad + Mag::abs_upper(b.m_mid) * a.m_rad + a.m_rad * b.m_rad;
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal operator/(const PrecReal &a, const PrecReal &b)
{
    const Mag b_low = b.abs_lower();
    if (b_low.is_zero()) {
        throw std::domain_error("division by an enclosure that contains zero");
    }
    PrecReal r(joint_precision(a, b));
    const int t = mpfr_div(r.m_mid, a.m_mid, b.m_mid, MPFR_RNDN);
    if (!a.m_rad.is_zero() || !b.m_rad.is_zero()) {
        // (ra |b| + |a| rb) / (|b| (|b| - rb))
        const Mag num = a.m_rad * Mag::abs_upper(b.m_mid) + Mag::abs_upper(a.m_mid) * b.m_rad;
        Mag b_mid_low;
        mpfr_abs(b_mid_low.raw(), b.m_mid, MPFR_RNDD);
        Mag den;
        mpfr_mul(den.raw(), b_mid_low.raw(), b_low.raw(), MPFR_RNDD);
        r.m_rad = Mag::div_by_lower(num, den);
    }
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal operator*(const PrecReal &a, long b)
{
    return a * PrecReal::from_int(b, a.precision());
}

PrecReal operator/(const PrecReal &a, long b)
{
    return a / PrecReal::from_int(b, a.precision());
}

PrecReal operator+(const PrecReal &a, long b)
{
    return a + PrecReal::from_int(b, a.precision());
}

PrecReal operator-(const PrecReal &a, long b)
{
    return a - PrecReal::from_int(b, a.precision());
}

PrecReal operator-(long a, const PrecReal &b)
{
    return PrecReal::from_int(a, b.precision()) - b;
}

PrecReal mul_2si(const PrecReal &a, long e)
{
    PrecReal r(a.precision());
    const int t = mpfr_mul_2si(r.m_mid, a.m_mid, e, MPFR_RNDN);
    mpfr_mul_2si(r.m_rad.raw(), a.m_rad.raw(), e, MPFR_RNDU);
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal abs(const PrecReal &a)
{
    PrecReal r(a.precision());
    mpfr_abs(r.m_mid, a.m_mid, MPFR_RNDN);
    r.m_rad = a.m_rad;
    return r;
}

PrecReal sqr(const PrecReal &a)
{
    return a * a;
}

PrecReal pow_int(const PrecReal &a, long k)
{
    if (k < 0) {
        return PrecReal::from_int(1, a.precision()) / pow_int(a, -k);
    }
    PrecReal result = PrecReal::from_int(1, a.precision());
    PrecReal base = a;
    auto e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1UL) {
            result = result * base;
        }
        e >>= 1;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

PrecReal sqrt(const PrecReal &a)
{
    if (a.is_exact_zero()) {
        return PrecReal(a.precision());
    }
    const Mag low = a.abs_lower();
    if (mpfr_sgn(a.m_mid) <= 0 || low.is_zero()) {
        throw std::domain_error("sqrt of an enclosure that is not strictly positive");
    }
    PrecReal r(a.precision());
    const int t = mpfr_sqrt(r.m_mid, a.m_mid, MPFR_RNDN);
    if (!a.m_rad.is_zero()) {
        // |sqrt x - sqrt m| <= r / (2 sqrt(lower))
        Mag den;
        mpfr_sqrt(den.raw(), low.raw(), MPFR_RNDD);
        mpfr_mul_2ui(den.raw(), den.raw(), 1, MPFR_RNDD);
        r.m_rad = Mag::div_by_lower(a.m_rad, den);
    }
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal exp(const PrecReal &a)
{
    PrecReal r(a.precision());
    const int t = mpfr_exp(r.m_mid, a.m_mid, MPFR_RNDN);
    if (!mpfr_number_p(r.m_mid)) {
        throw std::domain_error("exp overflows the exponent range");
    }
    if (!a.m_rad.is_zero()) {
        // r * exp(m + r)
        Mag top;
        mpfr_add(top.raw(), a.m_mid, a.m_rad.raw(), MPFR_RNDU);
        mpfr_exp(top.raw(), top.raw(), MPFR_RNDU);
        r.m_rad = a.m_rad * top;
        if (!mpfr_number_p(r.m_rad.raw())) {
            throw std::domain_error("exp overflows the exponent range");
        }
    }
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal log(const PrecReal &a)
{
    const Mag low = a.abs_lower();
    if (mpfr_sgn(a.m_mid) <= 0 || low.is_zero()) {
        throw std::domain_error("log of an enclosure that is not strictly positive");
    }
    PrecReal r(a.precision());
    const int t = mpfr_log(r.m_mid, a.m_mid, MPFR_RNDN);
    if (!a.m_rad.is_zero()) {
        r.m_rad = Mag::div_by_lower(a.m_rad, low);
    }
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal sin(const PrecReal &a)
{
    PrecReal r(a.precision());
    const int t = mpfr_sin(r.m_mid, a.m_mid, MPFR_RNDN);
    r.m_rad = a.m_rad;
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal cos(const PrecReal &a)
{
    PrecReal r(a.precision());
    const int t = mpfr_cos(r.m_mid, a.m_mid, MPFR_RNDN);
    r.m_rad = a.m_rad;
    add_rounding(r.m_rad, r.m_mid, t);
    return r;
}

PrecReal pow(const PrecReal &a, const PrecReal &s)
{
    return exp(s * log(a));
}

} // namespace cmtrig
