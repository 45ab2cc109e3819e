#ifndef CMTRIG_TRIG_RATIONAL_HPP
#define CMTRIG_TRIG_RATIONAL_HPP

#include <cmtrig/angle.hpp>
#include <cmtrig/prec_real.hpp>
#include <cmtrig/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cmtrig
{

/// Dense integer polynomial in one variable, lowest degree first, with no
/// trailing zero coefficients (the zero polynomial is empty).
using IntPoly = std::vector<BigInt>;

/// N(c, s) / (1 - c)^k with c = cos x, s = sin x and N = A(c) + s B(c).
///
/// Every s^2 is rewritten as 1 - c^2 as soon as it appears, so N is stored
/// as the pair (A, B) and two values are equal iff their (A, B, k) are.
class TrigRational
{
public:
    TrigRational(IntPoly cos_part, IntPoly sin_part, unsigned denominator_power);

    const IntPoly &cos_part() const
    {
        return m_a;
    }
    const IntPoly &sin_part() const
    {
        return m_b;
    }
    unsigned denominator_power() const
    {
        return m_k;
    }

    // d/dx, using dc/dx = -s, ds/dx = c.
    TrigRational derivative() const;

    // N at exact (c, s); the caller is responsible for c^2 + s^2 = 1.
    Rational numerator_at(const Rational &c, const Rational &s) const;

    std::string to_string() const;

    friend bool operator==(const TrigRational &, const TrigRational &) = default;

private:
    IntPoly m_a;
    IntPoly m_b;
    unsigned m_k;
};

/// Exact closed form of g^{(n)} for g(x) = 1/(1 - cos x); denominator power n+1.
TrigRational g_deriv_exact(int n);

/// Evaluate f at x. Refuses points where 1 - cos x is below the pole
/// threshold, 2^{-P/2} unless given.
PrecReal eval_trig_rational(const TrigRational &f, const Angle &x, Precision prec,
                            std::optional<Mag> pole_threshold = std::nullopt);

} // namespace cmtrig

#endif
