#ifndef CMTRIG_JET_HPP
#define CMTRIG_JET_HPP

#include <cmtrig/angle.hpp>
#include <cmtrig/prec_real.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cmtrig
{

/// Truncated Taylor expansion f(x0 + h) = sum_{k=0}^{N} a_k h^k with
/// a_k = f^{(k)}(x0) / k!.
class Jet
{
public:
    static constexpr int max_order = 64;
    // Relative radius above which a coefficient is considered degraded.
    static constexpr double warning_threshold = 1e-6;

    Jet(Angle x0, std::vector<PrecReal> coeffs);

    static Jet constant(const Angle &x0, const PrecReal &c, int order);
    // The identity function x0 + h.
    static Jet variable(const Angle &x0, int order, mpfr_prec_t prec);

    const Angle &x0() const
    {
        return m_x0;
    }
    int order() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    const std::vector<PrecReal> &coeffs() const
    {
        return m_coeffs;
    }
    const PrecReal &operator[](int k) const
    {
        return m_coeffs.at(static_cast<std::size_t>(k));
    }

    // f^{(k)}(x0) = k! a_k.
    PrecReal derivative(int k) const;

    // Largest radius / |midpoint| over the coefficients whose enclosure
    // excludes zero; coefficients that straddle zero are not counted here
    // (their sign is what the callers test).
    double max_relative_radius() const;
    bool degraded() const
    {
        return max_relative_radius() > warning_threshold;
    }

    friend Jet operator+(const Jet &a, const Jet &b);
    friend Jet operator-(const Jet &a, const Jet &b);
    friend Jet operator-(const Jet &a);
    friend Jet operator*(const Jet &a, const Jet &b);
    // Linear recurrence q_k = (a_k - sum_{i>=1} b_i q_{k-i}) / b_0.
    friend Jet operator/(const Jet &a, const Jet &b);
    friend Jet operator*(const PrecReal &c, const Jet &a);
    friend Jet operator+(const PrecReal &c, const Jet &a);

private:
    Angle m_x0;
    std::vector<PrecReal> m_coeffs;
};

struct SinCosJet {
    Jet sin;
    Jet cos;
};

Jet reciprocal(const Jet &a);
Jet exp(const Jet &a);
SinCosJet sin_cos(const Jet &a);
Jet sin(const Jet &a);
Jet cos(const Jet &a);

enum class FunctionId {
    g,                      // 1 / (1 - cos x)
    u,                      // 1 / (1 - sin x)
    h1,                     // exp(cot x)
    h2,                     // exp(1 / (1 + tan x))
    big_h,                  // (pi/2 - x) / (1 - cos x)
    csc,                    // 1 / sin x
    sin_over_one_minus_cos, // sin x / (1 - cos x)
};

std::string to_string(FunctionId id);
// Accepts the names produced by to_string (and "H" for big_h).
FunctionId parse_function_id(std::string_view name);

/// Jet of the named function at x0, built from the exact jets of sin and cos
/// of the variable. Throws std::domain_error when x0 is within 2^{-P/2} of a
/// pole, and std::invalid_argument for an order outside [0, 64].
Jet jet_of(FunctionId id, const Angle &x0, int order, Precision prec);

} // namespace cmtrig

#endif
