#include <cmtrig/jet.hpp>

#include <stdexcept>
#include <utility>

namespace cmtrig
{

namespace
{

void require_compatible(const Jet &a, const Jet &b)
{
    if (a.order() != b.order() || a.x0().compare(b.x0()) != 0) {
        throw std::invalid_argument("jet operands differ in order or expansion point");
    }
}

mpfr_prec_t jet_precision(const Jet &a)
{
    return a[0].precision();
}

void require_order(int order)
{
    if (order < 0 || order > Jet::max_order) {
        throw std::invalid_argument("jet order must lie in [0, " + std::to_string(Jet::max_order) + "], got " +
                                    std::to_string(order));
    }
}

// sin and cos jets of the variable at x0: the k-th coefficient of sin(x0 + h)
// is sin(x0 + k pi/2) / k!.
SinCosJet variable_sin_cos(const Angle &x0, int order, mpfr_prec_t prec)
{
    const SinCos sc = x0.sin_cos(prec);
    const PrecReal cycle_sin[4] = {sc.sin, sc.cos, -sc.sin, -sc.cos};
    std::vector<PrecReal> s, c;
    for (int k = 0; k <= order; ++k) {
        const PrecReal inv_fact = PrecReal::from_rational(make_rational(BigInt(1), factorial(k)), prec);
        s.push_back(cycle_sin[k % 4] * inv_fact);
        c.push_back(cycle_sin[(k + 1) % 4] * inv_fact);
    }
    return {Jet(x0, std::move(s)), Jet(x0, std::move(c))};
}

// 1 - f where f is the given jet, with the constant term supplied separately
// so it can be computed without cancellation.
Jet one_minus(const Jet &f, PrecReal constant)
{
    std::vector<PrecReal> c;
    c.push_back(std::move(constant));
    for (int k = 1; k <= f.order(); ++k) {
        c.push_back(-f[k]);
    }
    return Jet(f.x0(), std::move(c));
}

void guard_pole(const PrecReal &denominator, Precision prec, FunctionId id, const Angle &x0)
{
    if (Mag::abs_upper(denominator.mid()) < Mag::pow2(-(prec.bits() / 2))) {
        throw std::domain_error("jet_of(" + to_string(id) + "): x0 = " + x0.to_string() + " is inside the pole guard");
    }
}

} // namespace

Jet::Jet(Angle x0, std::vector<PrecReal> coeffs) : m_x0(std::move(x0)), m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw std::invalid_argument("a jet needs at least one coefficient");
    }
}

Jet Jet::constant(const Angle &x0, const PrecReal &c, int order)
{
    require_order(order);
    std::vector<PrecReal> v(static_cast<std::size_t>(order) + 1, PrecReal(c.precision()));
    v[0] = c;
    return Jet(x0, std::move(v));
}

Jet Jet::variable(const Angle &x0, int order, mpfr_prec_t prec)
{
    require_order(order);
    std::vector<PrecReal> v(static_cast<std::size_t>(order) + 1, PrecReal(prec));
    v[0] = x0.value(prec);
    if (order >= 1) {
        v[1] = PrecReal::from_int(1, prec);
    }
    return Jet(x0, std::move(v));
}

PrecReal Jet::derivative(int k) const
{
    if (k < 0 || k > order()) {
        throw std::out_of_range("jet derivative order out of range");
    }
    const PrecReal &a = m_coeffs[static_cast<std::size_t>(k)];
    return PrecReal::from_bigint(factorial(static_cast<unsigned long>(k)), a.precision()) * a;
}

double Jet::max_relative_radius() const
{
    double worst = 0.0;
    for (const auto &a : m_coeffs) {
        if (a.contains_zero()) {
            continue;
        }
        mpfr_t ratio;
        mpfr_init2(ratio, Mag::bits);
        mpfr_abs(ratio, a.mid(), MPFR_RNDD);
        mpfr_div(ratio, a.rad().raw(), ratio, MPFR_RNDU);
        worst = std::max(worst, mpfr_get_d(ratio, MPFR_RNDU));
        mpfr_clear(ratio);
    }
    return worst;
}

Jet operator+(const Jet &a, const Jet &b)
{
    require_compatible(a, b);
    std::vector<PrecReal> c;
    for (int k = 0; k <= a.order(); ++k) {
        c.push_back(a[k] + b[k]);
    }
    return Jet(a.x0(), std::move(c));
}

Jet operator-(const Jet &a, const Jet &b)
{
    return a + (-b);
}

Jet operator-(const Jet &a)
{
    std::vector<PrecReal> c;
    for (const auto &v : a.coeffs()) {
        c.push_back(-v);
    }
    return Jet(a.x0(), std::move(c));
}

Jet operator*(const Jet &a, const Jet &b)
{
    require_compatible(a, b);
    std::vector<PrecReal> c;
    for (int k = 0; k <= a.order(); ++k) {
        PrecReal acc(jet_precision(a));
        for (int i = 0; i <= k; ++i) {
            acc += a[i] * b[k - i];
        }
        c.push_back(std::move(acc));
    }
    return Jet(a.x0(), std::move(c));
}

Jet operator/(const Jet &a, const Jet &b)
{
    require_compatible(a, b);
    if (b[0].contains_zero()) {
        throw std::domain_error("jet division: constant term of the divisor contains zero");
    }
    std::vector<PrecReal> q;
    for (int k = 0; k <= a.order(); ++k) {
        PrecReal acc = a[k];
        for (int i = 1; i <= k; ++i) {
            acc -= b[i] * q[static_cast<std::size_t>(k - i)];
        }
        q.push_back(acc / b[0]);
    }
    return Jet(a.x0(), std::move(q));
}

Jet operator*(const PrecReal &c, const Jet &a)
{
    std::vector<PrecReal> v;
    for (const auto &x : a.coeffs()) {
        v.push_back(c * x);
    }
    return Jet(a.x0(), std::move(v));
}

Jet operator+(const PrecReal &c, const Jet &a)
{
    std::vector<PrecReal> v = a.coeffs();
    v[0] = c + v[0];
    return Jet(a.x0(), std::move(v));
}

Jet reciprocal(const Jet &a)
{
    return Jet::constant(a.x0(), PrecReal::from_int(1, jet_precision(a)), a.order()) / a;
}

Jet exp(const Jet &a)
{
    // e' = a' e, so k e_k = sum_{j=1}^{k} j a_j e_{k-j}.
    std::vector<PrecReal> e;
    e.push_back(exp(a[0]));
    for (int k = 1; k <= a.order(); ++k) {
        PrecReal acc(jet_precision(a));
        for (int j = 1; j <= k; ++j) {
            acc += (a[j] * j) * e[static_cast<std::size_t>(k - j)];
        }
        e.push_back(acc / k);
    }
    return Jet(a.x0(), std::move(e));
}

SinCosJet sin_cos(const Jet &a)
{
    // s' = a' c and c' = -a' s.
    std::vector<PrecReal> s, c;
    s.push_back(sin(a[0]));
    c.push_back(cos(a[0]));
    for (int k = 1; k <= a.order(); ++k) {
        PrecReal as(jet_precision(a)), ac(jet_precision(a));
        for (int j = 1; j <= k; ++j) {
            const PrecReal ja = a[j] * j;
            as += ja * c[static_cast<std::size_t>(k - j)];
            ac += ja * s[static_cast<std::size_t>(k - j)];
        }
        s.push_back(as / k);
        c.push_back(-ac / k);
    }
    return {Jet(a.x0(), std::move(s)), Jet(a.x0(), std::move(c))};
}

Jet sin(const Jet &a)
{
    return sin_cos(a).sin;
}

Jet cos(const Jet &a)
{
    return sin_cos(a).cos;
}

std::string to_string(FunctionId id)
{
    switch (id) {
    case FunctionId::g:
        return "g";
    case FunctionId::u:
        return "u";
    case FunctionId::h1:
        return "h1";
    case FunctionId::h2:
        return "h2";
    case FunctionId::big_h:
        return "H";
    case FunctionId::csc:
        return "csc";
    case FunctionId::sin_over_one_minus_cos:
        return "sin_over_1mc";
    }
    return "?";
}

FunctionId parse_function_id(std::string_view name)
{
    for (auto id : {FunctionId::g, FunctionId::u, FunctionId::h1, FunctionId::h2, FunctionId::big_h, FunctionId::csc,
                    FunctionId::sin_over_one_minus_cos}) {
        if (name == to_string(id)) {
            return id;
        }
    }
    if (name == "big_h") {
        return FunctionId::big_h;
    }
    throw std::invalid_argument("unknown function id '" + std::string(name) +
                                "' (expected g, u, h1, h2, H, csc, sin_over_1mc)");
}

Jet jet_of(FunctionId id, const Angle &x0, int order, Precision prec)
{
    require_order(order);
    const auto wp = prec.working_bits();
    const SinCosJet v = variable_sin_cos(x0, order, wp);

    switch (id) {
    case FunctionId::g:
    case FunctionId::big_h:
    case FunctionId::sin_over_one_minus_cos: {
        const PrecReal w = x0.one_minus_cos(wp);
        guard_pole(w, prec, id, x0);
        const Jet den = one_minus(v.cos, w);
        if (id == FunctionId::sin_over_one_minus_cos) {
            return v.sin / den;
        }
        const Jet g = reciprocal(den);
        if (id == FunctionId::g) {
            return g;
        }
        // pi/2 - x0 is exact zero at pi/2, so H(pi/2) = 0 exactly.
        std::vector<PrecReal> lin(static_cast<std::size_t>(order) + 1, PrecReal(wp));
        lin[0] = (Angle::pi_times(1, 2) - x0).value(wp);
        if (order >= 1) {
            lin[1] = PrecReal::from_int(-1, wp);
        }
        return Jet(x0, std::move(lin)) * g;
    }
    case FunctionId::u: {
        // 1 - sin x = 1 - cos(pi/2 - x)
        const PrecReal w = (Angle::pi_times(1, 2) - x0).one_minus_cos(wp);
        guard_pole(w, prec, id, x0);
        return reciprocal(one_minus(v.sin, w));
    }
    case FunctionId::h1:
        guard_pole(v.sin[0], prec, id, x0);
        return exp(v.cos / v.sin);
    case FunctionId::csc:
        guard_pole(v.sin[0], prec, id, x0);
        return reciprocal(v.sin);
    case FunctionId::h2: {
        // 1 / (1 + tan x) = cos x / (cos x + sin x)
        const Jet den = v.cos + v.sin;
        guard_pole(den[0], prec, id, x0);
        return exp(v.cos / den);
    }
    }
    throw std::invalid_argument("jet_of: unknown function id");
}

} // namespace cmtrig
