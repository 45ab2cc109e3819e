#ifndef CMTRIG_PREC_REAL_HPP
#define CMTRIG_PREC_REAL_HPP

#include <cmtrig/rational.hpp>

#include <mpfr.h>

#include <string>
#include <string_view>

namespace cmtrig
{

/// Requested precision of a computation, in bits.
///
/// Results are computed at working_bits(), which is roughly twice the
/// requested precision: working = max(P, ceil(2 * digits(P) * log2(10)))
/// where digits(P) = ceil(P * log10(2)). At P = 128 this is 260 bits.
class Precision
{
public:
    static constexpr long min_bits = 53;

    explicit Precision(long bits);

    long bits() const noexcept
    {
        return m_bits;
    }
    long working_bits() const noexcept;
    // Significant decimal digits carried by the requested precision.
    int digits() const noexcept;

    Precision doubled() const
    {
        return Precision(2 * m_bits);
    }

    friend bool operator==(const Precision &, const Precision &) = default;

private:
    long m_bits;
};

/// Nonnegative upper bound on an error or a tail, stored in a short
/// binary float and always rounded upward.
class Mag
{
public:
    static constexpr mpfr_prec_t bits = 64;

    Mag();
    explicit Mag(double upper);
    Mag(const Mag &);
    Mag(Mag &&) noexcept;
    Mag &operator=(const Mag &);
    Mag &operator=(Mag &&) noexcept;
    ~Mag();

    // 2^e
    static Mag pow2(long e);
    // Upper bound of |x| for an mpfr value.
    static Mag abs_upper(const mpfr_t x);

    bool is_zero() const;
    double to_double() const; // rounded up
    std::string to_string(int digits = 3) const;

    Mag &operator+=(const Mag &o);
    Mag &operator*=(const Mag &o);
    friend Mag operator+(Mag a, const Mag &b)
    {
        return a += b;
    }
    friend Mag operator*(Mag a, const Mag &b)
    {
        return a *= b;
    }
    // a / b with b assumed to be a lower bound; result rounded up.
    static Mag div_by_lower(const Mag &a, const Mag &b_lower);

    friend bool operator<(const Mag &a, const Mag &b);
    friend bool operator<=(const Mag &a, const Mag &b);

    mpfr_srcptr raw() const
    {
        return m_val;
    }
    mpfr_ptr raw()
    {
        return m_val;
    }

private:
    mpfr_t m_val;
};

/// A real number enclosure [mid - rad, mid + rad].
///
/// The midpoint is a binary float at the ball's precision. The radius is an
/// upward-rounded Mag. Every operation rounds its midpoint to nearest and
/// folds one ulp of the result into the radius whenever the rounding was
/// inexact, on top of the propagated input radii, so the exact result of
/// the operation applied to any points of the input balls lies inside the
/// output ball.
class PrecReal
{
public:
    // Exact zero at the given precision.
    explicit PrecReal(mpfr_prec_t prec = 64);

    PrecReal(const PrecReal &);
    PrecReal(PrecReal &&) noexcept;
    PrecReal &operator=(const PrecReal &);
    PrecReal &operator=(PrecReal &&) noexcept;
    ~PrecReal();

    static PrecReal from_int(long v, mpfr_prec_t prec);
    static PrecReal from_bigint(const BigInt &v, mpfr_prec_t prec);
    static PrecReal from_rational(const Rational &q, mpfr_prec_t prec);
    static PrecReal from_double(double v, mpfr_prec_t prec);
    // Decimal literal. A literal with a fraction or exponent is read as an
    // approximation good to one unit in its last digit, and that unit is
    // added to the radius; pure integers are exact.
    static PrecReal from_decimal(std::string_view text, mpfr_prec_t prec);
    static PrecReal pi(mpfr_prec_t prec);
    // Ball with the given midpoint value (copied, rounded to prec) and radius.
    static PrecReal from_mpfr(const mpfr_t mid, const Mag &rad, mpfr_prec_t prec);

    mpfr_prec_t precision() const
    {
        return mpfr_get_prec(m_mid);
    }
    mpfr_srcptr mid() const
    {
        return m_mid;
    }
    const Mag &rad() const
    {
        return m_rad;
    }

    bool is_exact() const;
    bool is_exact_zero() const;
    bool contains_zero() const;
    // Certified sign tests on the whole ball.
    bool is_positive() const;
    bool is_negative() const;
    bool is_nonnegative() const;

    bool contains(const Rational &q) const;
    bool contains(const BigInt &z) const;
    // Every point of o lies in this ball.
    bool contains(const PrecReal &o) const;
    bool overlaps(const PrecReal &o) const;

    // Enlarge the radius by err.
    PrecReal &add_error(const Mag &err);
    PrecReal with_precision(mpfr_prec_t prec) const;

    PrecReal midpoint() const;
    Mag abs_upper() const;
    // Largest value known to be <= |x| (zero if the ball contains zero).
    Mag abs_lower() const;

    double to_double() const;
    // Midpoint in scientific notation with the given significant digits.
    std::string mid_string(int digits) const;
    std::string rad_string(int digits = 3) const;
    std::string to_string(int digits) const;

    friend PrecReal operator-(const PrecReal &a);
    friend PrecReal operator+(const PrecReal &a, const PrecReal &b);
    friend PrecReal operator-(const PrecReal &a, const PrecReal &b);
    friend PrecReal operator*(const PrecReal &a, const PrecReal &b);
    friend PrecReal operator/(const PrecReal &a, const PrecReal &b);
    friend PrecReal operator*(const PrecReal &a, long b);
    friend PrecReal operator*(long a, const PrecReal &b)
    {
        return b * a;
    }
    friend PrecReal operator/(const PrecReal &a, long b);
    friend PrecReal operator+(const PrecReal &a, long b);
    friend PrecReal operator+(long a, const PrecReal &b)
    {
        return b + a;
    }
    friend PrecReal operator-(const PrecReal &a, long b);
    friend PrecReal operator-(long a, const PrecReal &b);

    PrecReal &operator+=(const PrecReal &b)
    {
        return *this = *this + b;
    }
    PrecReal &operator-=(const PrecReal &b)
    {
        return *this = *this - b;
    }
    PrecReal &operator*=(const PrecReal &b)
    {
        return *this = *this * b;
    }
    PrecReal &operator/=(const PrecReal &b)
    {
        return *this = *this / b;
    }

private:
    mpfr_t m_mid;
    Mag m_rad;

    friend PrecReal mul_2si(const PrecReal &, long);
    friend PrecReal abs(const PrecReal &);
    friend PrecReal sqrt(const PrecReal &);
    friend PrecReal exp(const PrecReal &);
    friend PrecReal log(const PrecReal &);
    friend PrecReal sin(const PrecReal &);
    friend PrecReal cos(const PrecReal &);
};

// Exact scaling by 2^e.
PrecReal mul_2si(const PrecReal &a, long e);
PrecReal abs(const PrecReal &a);
PrecReal sqr(const PrecReal &a);
// a^k for any integer k; negative k requires a ball excluding zero.
PrecReal pow_int(const PrecReal &a, long k);
PrecReal sqrt(const PrecReal &a);
PrecReal exp(const PrecReal &a);
PrecReal log(const PrecReal &a);
PrecReal sin(const PrecReal &a);
PrecReal cos(const PrecReal &a);
// a^s = exp(s log a), a > 0.
PrecReal pow(const PrecReal &a, const PrecReal &s);

// Upper bound on |a.mid - b.mid|.
Mag midpoint_distance(const PrecReal &a, const PrecReal &b);
// Three-way comparison of midpoints only.
int compare_midpoints(const PrecReal &a, const PrecReal &b);

} // namespace cmtrig

#endif
