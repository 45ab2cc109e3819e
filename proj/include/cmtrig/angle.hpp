#ifndef CMTRIG_ANGLE_HPP
#define CMTRIG_ANGLE_HPP

#include <cmtrig/prec_real.hpp>
#include <cmtrig/rational.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace cmtrig
{

struct SinCos {
    PrecReal sin;
    PrecReal cos;
};

/// A real argument that is either an exact rational multiple of pi or an
/// arbitrary enclosure. Grid points are built as exact multiples, so the
/// special points pi/2 and pi stay exact through reflections and sums, and
/// sin/cos at multiples of pi/2 come out as exact integers.
class Angle
{
public:
    static Angle pi_times(Rational q);
    static Angle pi_times(long num, long den = 1)
    {
        return pi_times(make_rational(num, den));
    }
    static Angle from_real(PrecReal x);

    // "pi", "-pi/4", "3pi/4", "3*pi/4", "2/3 pi", "1/3" (rational, exact),
    // or a decimal literal (see PrecReal::from_decimal).
    static Angle parse(std::string_view text, mpfr_prec_t prec);

    bool is_pi_multiple() const
    {
        return std::holds_alternative<Rational>(m_value);
    }
    // The q in x = q*pi, if known exactly.
    std::optional<Rational> pi_multiple() const;

    PrecReal value(mpfr_prec_t prec) const;
    // x / pi (exact for pi multiples).
    PrecReal over_pi(mpfr_prec_t prec) const;
    SinCos sin_cos(mpfr_prec_t prec) const;
    // 1 - cos x, evaluated as 2 sin^2(x/2) to avoid cancellation near 0.
    PrecReal one_minus_cos(mpfr_prec_t prec) const;

    // Midpoint-based ordering, exact for two pi multiples.
    int compare(const Angle &o) const;
    // Midpoint-based sign of x - q*pi.
    int compare_pi_times(const Rational &q) const;

    std::string to_string(int digits = 20) const;

    friend Angle operator+(const Angle &a, const Angle &b);
    friend Angle operator-(const Angle &a, const Angle &b);
    friend Angle operator-(const Angle &a);
    friend Angle operator*(long k, const Angle &a);

private:
    explicit Angle(std::variant<Rational, PrecReal> v) : m_value(std::move(v)) {}

    std::variant<Rational, PrecReal> m_value;
};

} // namespace cmtrig

#endif
