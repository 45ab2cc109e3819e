#include <cmtrig/trig_rational.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cmtrig
{

namespace
{

void trim(IntPoly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

IntPoly add(const IntPoly &a, const IntPoly &b)
{
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
    }
    trim(r);
    return r;
}

IntPoly scale(const IntPoly &a, const BigInt &k)
{
    IntPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * k;
    }
    trim(r);
    return r;
}

IntPoly mul(const IntPoly &a, const IntPoly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

IntPoly diff(const IntPoly &a)
{
    IntPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) {
        r.push_back(a[i] * static_cast<unsigned long>(i));
    }
    trim(r);
    return r;
}

// p(1 - w) as a polynomial in w.
IntPoly shift_to_w(const IntPoly &p)
{
    IntPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            BigInt term = p[i] * binomial(i, j);
            r[j] += (j % 2 == 0) ? term : BigInt(-term);
        }
    }
    trim(r);
    return r;
}

PrecReal horner(const IntPoly &p, const PrecReal &w)
{
    PrecReal acc(w.precision());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * w + PrecReal::from_bigint(*it, w.precision());
    }
    return acc;
}

Rational evaluate(const IntPoly &p, const Rational &c)
{
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * c + Rational(*it);
    }
    return acc;
}

const IntPoly one_minus_c{BigInt(1), BigInt(-1)};
const IntPoly one_minus_c2{BigInt(1), BigInt(0), BigInt(-1)};
const IntPoly c_poly{BigInt(0), BigInt(1)};

std::string poly_string(const IntPoly &p)
{
    if (p.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) {
            continue;
        }
        const bool negative = p[i] < 0;
        const BigInt mag = abs(p[i]);
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mag != 1 || i == 0) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << "c";
        }
        if (i >= 2) {
            os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace

TrigRational::TrigRational(IntPoly cos_part, IntPoly sin_part, unsigned denominator_power)
    : m_a(std::move(cos_part)), m_b(std::move(sin_part)), m_k(denominator_power)
{
    trim(m_a);
    trim(m_b);
}

TrigRational TrigRational::derivative() const
{
    // N' = [c B - (1 - c^2) B'] + s [-A'], and d/dx (1-c)^{-k} = -k s (1-c)^{-k-1},
    // so the new numerator is N' (1 - c) - k s N with s^2 = 1 - c^2.
    const BigInt k(m_k);
    const IntPoly n_prime_a = add(mul(c_poly, m_b), scale(mul(one_minus_c2, diff(m_b)), BigInt(-1)));
    const IntPoly n_prime_b = scale(diff(m_a), BigInt(-1));

    IntPoly a = add(mul(n_prime_a, one_minus_c), scale(mul(one_minus_c2, m_b), BigInt(-k)));
    IntPoly b = add(mul(n_prime_b, one_minus_c), scale(m_a, BigInt(-k)));
    return TrigRational(std::move(a), std::move(b), m_k + 1);
}

Rational TrigRational::numerator_at(const Rational &c, const Rational &s) const
{
    return evaluate(m_a, c) + s * evaluate(m_b, c);
}

std::string TrigRational::to_string() const
{
    std::string num = poly_string(m_a);
    if (!m_b.empty()) {
        num = "(" + num + ") + s*(" + poly_string(m_b) + ")";
    }
    return "[" + num + "] / (1 - c)^" + std::to_string(m_k);
}

TrigRational g_deriv_exact(int n)
{
    if (n < 0) {
        throw std::invalid_argument("g_deriv_exact: order must be nonnegative");
    }
    TrigRational f(IntPoly{BigInt(1)}, IntPoly{}, 1);
    for (int i = 0; i < n; ++i) {
        f = f.derivative();
    }
    return f;
}

PrecReal eval_trig_rational(const TrigRational &f, const Angle &x, Precision prec, std::optional<Mag> pole_threshold)
{
    if (x.compare_pi_times(Rational(0)) <= 0 || x.compare_pi_times(Rational(2)) >= 0) {
        throw std::domain_error("eval_trig_rational: x must lie in (0, 2pi)");
    }
    const auto wp = prec.working_bits();
    const PrecReal w = x.one_minus_cos(wp);
    const Mag threshold = pole_threshold ? *pole_threshold : Mag::pow2(-(prec.bits() / 2));
    if (Mag::abs_upper(w.mid()) < threshold) {
        throw std::domain_error("eval_trig_rational: 1 - cos x underflows the pole guard at x = " + x.to_string());
    }
    const PrecReal s = x.sin_cos(wp).sin;
    const PrecReal num = horner(shift_to_w(f.cos_part()), w) + s * horner(shift_to_w(f.sin_part()), w);
    return num / pow_int(w, f.denominator_power());
}

} // namespace cmtrig
