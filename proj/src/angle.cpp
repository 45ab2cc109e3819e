#include <cmtrig/angle.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace cmtrig
{

namespace
{

// q reduced into [0, 2).
Rational reduce_mod_two(const Rational &q)
{
    BigInt whole;
    Rational half = q / 2;
    mpz_fdiv_q(whole.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    return q - 2 * Rational(whole);
}

// Index 0..3 of q*pi on the quarter-turn lattice, if 2q is an integer.
std::optional<int> quarter_index(const Rational &q)
{
    const Rational r = reduce_mod_two(q);
    const Rational twice = 2 * r;
    if (twice.get_den() != 1) {
        return std::nullopt;
    }
    return static_cast<int>(twice.get_num().get_si());
}

// Midpoint comparisons of non-exact angles are done at this precision.
constexpr mpfr_prec_t compare_bits = 256;

} // namespace

Angle Angle::pi_times(Rational q)
{
    q.canonicalize();
    return Angle(std::variant<Rational, PrecReal>(std::in_place_index<0>, std::move(q)));
}

Angle Angle::from_real(PrecReal x)
{
    return Angle(std::variant<Rational, PrecReal>(std::in_place_index<1>, std::move(x)));
}

Angle Angle::parse(std::string_view text, mpfr_prec_t prec)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty angle");
    }
    const auto at = s.find("pi");
    if (at != std::string::npos) {
        const std::string prefix = s.substr(0, at);
        const std::string suffix = s.substr(at + 2);
        Rational q(1);
        if (prefix == "-") {
            q = -1;
        } else if (!prefix.empty() && prefix != "+") {
            q = parse_rational(prefix);
        }
        if (!suffix.empty()) {
            if (suffix.front() != '/') {
                throw std::invalid_argument("cannot parse angle '" + std::string(text) + "'");
            }
            const Rational den = parse_rational(suffix.substr(1));
            if (den == 0) {
                throw std::invalid_argument("zero divisor in angle '" + std::string(text) + "'");
            }
            q /= den;
        }
        return pi_times(q);
    }
    if (s.find_first_of(".e") != std::string::npos) {
        return from_real(PrecReal::from_decimal(s, prec));
    }
    // Plain integers and p/q are exact reals; store them as balls.
    return from_real(PrecReal::from_rational(parse_rational(s), prec));
}

std::optional<Rational> Angle::pi_multiple() const
{
    if (const auto *q = std::get_if<Rational>(&m_value)) {
        return *q;
    }
    return std::nullopt;
}

PrecReal Angle::value(mpfr_prec_t prec) const
{
    if (const auto *q = std::get_if<Rational>(&m_value)) {
        if (*q == 0) {
            return PrecReal(prec);
        }
        return PrecReal::from_rational(*q, prec) * PrecReal::pi(prec);
    }
    return std::get<PrecReal>(m_value).with_precision(prec);
}

PrecReal Angle::over_pi(mpfr_prec_t prec) const
{
    if (const auto *q = std::get_if<Rational>(&m_value)) {
        return PrecReal::from_rational(*q, prec);
    }
    return std::get<PrecReal>(m_value).with_precision(prec) / PrecReal::pi(prec);
}

SinCos Angle::sin_cos(mpfr_prec_t prec) const
{
    if (const auto *q = std::get_if<Rational>(&m_value)) {
        if (const auto idx = quarter_index(*q)) {
            static constexpr long sines[] = {0, 1, 0, -1};
            static constexpr long cosines[] = {1, 0, -1, 0};
            return {PrecReal::from_int(sines[*idx], prec), PrecReal::from_int(cosines[*idx], prec)};
        }
        const PrecReal x = Angle::pi_times(reduce_mod_two(*q)).value(prec);
        return {sin(x), cos(x)};
    }
    const PrecReal x = value(prec);
    return {sin(x), cos(x)};
}

PrecReal Angle::one_minus_cos(mpfr_prec_t prec) const
{
    if (const auto *q = std::get_if<Rational>(&m_value)) {
        if (quarter_index(*q)) {
            return 1 - sin_cos(prec).cos;
        }
        const PrecReal half = Angle::pi_times(reduce_mod_two(*q) / 2).value(prec);
        return mul_2si(sqr(sin(half)), 1);
    }
    return mul_2si(sqr(sin(mul_2si(value(prec), -1))), 1);
}

int Angle::compare(const Angle &o) const
{
    const auto *a = std::get_if<Rational>(&m_value);
    const auto *b = std::get_if<Rational>(&o.m_value);
    if (a != nullptr && b != nullptr) {
        return cmp(*a, *b) < 0 ? -1 : (cmp(*a, *b) > 0 ? 1 : 0);
    }
    return compare_midpoints(value(compare_bits), o.value(compare_bits));
}

int Angle::compare_pi_times(const Rational &q) const
{
    return compare(Angle::pi_times(q));
}

std::string Angle::to_string(int digits) const
{
    if (const auto *q = std::get_if<Rational>(&m_value)) {
        if (*q == 0) {
            return "0";
        }
        if (*q == 1) {
            return "pi";
        }
        if (*q == -1) {
            return "-pi";
        }
        if (q->get_den() == 1) {
            return q->get_num().get_str() + "*pi";
        }
        std::string num = q->get_num() == 1 ? "" : (q->get_num() == -1 ? "-" : q->get_num().get_str() + "*");
        return num + "pi/" + q->get_den().get_str();
    }
    return std::get<PrecReal>(m_value).mid_string(digits);
}

namespace
{

mpfr_prec_t ball_precision(const std::variant<Rational, PrecReal> &va, const std::variant<Rational, PrecReal> &vb)
{
    mpfr_prec_t p = MPFR_PREC_MIN;
    if (const auto *x = std::get_if<PrecReal>(&va)) {
        p = std::max(p, x->precision());
    }
    if (const auto *x = std::get_if<PrecReal>(&vb)) {
        p = std::max(p, x->precision());
    }
    return p;
}

} // namespace

Angle operator+(const Angle &a, const Angle &b)
{
    const auto *qa = std::get_if<Rational>(&a.m_value);
    const auto *qb = std::get_if<Rational>(&b.m_value);
    if (qa != nullptr && qb != nullptr) {
        return Angle::pi_times(*qa + *qb);
    }
    const auto p = ball_precision(a.m_value, b.m_value);
    return Angle::from_real(a.value(p) + b.value(p));
}

Angle operator-(const Angle &a)
{
    if (const auto *q = std::get_if<Rational>(&a.m_value)) {
        return Angle::pi_times(-*q);
    }
    return Angle::from_real(-std::get<PrecReal>(a.m_value));
}

Angle operator-(const Angle &a, const Angle &b)
{
    return a + (-b);
}

Angle operator*(long k, const Angle &a)
{
    if (const auto *q = std::get_if<Rational>(&a.m_value)) {
        return Angle::pi_times(Rational(k) * *q);
    }
    return Angle::from_real(std::get<PrecReal>(a.m_value) * k);
}

} // namespace cmtrig
