#include <cmtrig/monotonicity.hpp>
#include <cmtrig/trig_deriv.hpp>
#include <cmtrig/trig_rational.hpp>

#include <optional>
#include <stdexcept>

namespace cmtrig
{

namespace
{

// Exact (cos x, sin x) when x is a multiple of pi/2.
std::optional<std::pair<Rational, Rational>> exact_cos_sin(const Rational &q)
{
    const Rational twice = 2 * q;
    if (twice.get_den() != 1) {
        return std::nullopt;
    }
    BigInt idx;
    mpz_fdiv_r_ui(idx.get_mpz_t(), twice.get_num_mpz_t(), 4);
    static const int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto k = idx.get_ui();
    return std::make_pair(Rational(cs[k][0]), Rational(cs[k][1]));
}

Verdict sign_verdict(const PrecReal &v)
{
    if (v.is_exact_zero()) {
        return Verdict::exact_zero;
    }
    if (v.is_positive()) {
        return Verdict::pass;
    }
    if (v.is_negative()) {
        return Verdict::fail;
    }
    return Verdict::inconclusive;
}

int severity(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return 0;
    case Verdict::exact_zero:
        return 1;
    case Verdict::inconclusive:
        return 2;
    case Verdict::fail:
        return 3;
    case Verdict::skipped:
        return 4;
    }
    return 4;
}

bool exact_zero_of_g(int n, const Rational &x_over_pi)
{
    const auto cs = exact_cos_sin(x_over_pi);
    return cs && g_deriv_exact(n).numerator_at(cs->first, cs->second) == 0;
}

PrecReal signed_value(Claim claim, int n, PrecReal v)
{
    if (claim == Claim::completely_monotonic && n % 2 == 1) {
        return -v;
    }
    return v;
}

// Verdicts for orders 0..max_order at one point, by one route.
struct Route {
    std::vector<Verdict> verdict;
    std::vector<std::optional<PrecReal>> value;
    bool skipped = false;
};

template <class Eval>
Route run_route(int max_order, Claim claim, Precision prec, Eval &&eval)
{
    Route r;
    r.verdict.assign(static_cast<std::size_t>(max_order) + 1, Verdict::skipped);
    r.value.resize(static_cast<std::size_t>(max_order) + 1);
    std::vector<int> todo;
    for (int n = 0; n <= max_order; ++n) {
        todo.push_back(n);
    }
    for (const Precision p : {prec, prec.doubled()}) {
        std::vector<std::optional<PrecReal>> values;
        try {
            values = eval(p, todo);
        } catch (const std::domain_error &) {
            r.skipped = true;
            return r;
        }
        std::vector<int> again;
        for (std::size_t i = 0; i < todo.size(); ++i) {
            const int n = todo[i];
            const PrecReal v = signed_value(claim, n, *values[i]);
            r.verdict[static_cast<std::size_t>(n)] = sign_verdict(v);
            r.value[static_cast<std::size_t>(n)] = v;
            if (r.verdict[static_cast<std::size_t>(n)] == Verdict::inconclusive) {
                again.push_back(n);
            }
        }
        todo = std::move(again);
        if (todo.empty()) {
            break;
        }
    }
    return r;
}

} // namespace

std::string to_string(Claim c)
{
    return c == Claim::completely_monotonic ? "completely_monotonic" : "absolutely_monotonic";
}

std::string to_string(const Interval &iv)
{
    return std::string(iv.lo_closed ? "[" : "(") + to_string(iv.lo) + "*pi, " + to_string(iv.hi) + "*pi" +
           (iv.hi_closed ? "]" : ")");
}

int default_max_order(FunctionId fn)
{
    return fn == FunctionId::g ? 20 : 12;
}

std::vector<FunctionSpec> standard_specs(FunctionId fn)
{
    const auto spec = [fn](Rational lo, Rational hi, bool lc, bool hc, Claim c) {
        return FunctionSpec{fn, Interval{std::move(lo), std::move(hi), lc, hc}, c, default_max_order(fn)};
    };
    const Claim cm = Claim::completely_monotonic;
    switch (fn) {
    case FunctionId::g:
        return {spec(Rational(0), Rational(1), false, true, cm),
                spec(Rational(1), Rational(2), true, false, Claim::absolutely_monotonic)};
    case FunctionId::h1:
    case FunctionId::big_h:
        return {spec(Rational(0), make_rational(1, 2), false, true, cm)};
    case FunctionId::h2:
        return {spec(make_rational(-1, 4), make_rational(1, 4), false, true, cm)};
    case FunctionId::csc:
    case FunctionId::sin_over_one_minus_cos:
        return {spec(Rational(0), make_rational(1, 2), false, false, cm)};
    case FunctionId::u:
        // u(z) = g(pi/2 - z), so u is absolutely monotonic on [-pi/2, pi/2).
        return {spec(make_rational(-1, 2), make_rational(1, 2), true, false, Claim::absolutely_monotonic)};
    }
    throw std::invalid_argument("standard_specs: unknown function");
}

std::vector<Rational> sweep_points(const Interval &iv, int grid_density, int approach_points)
{
    if (grid_density < 2) {
        throw std::invalid_argument("grid_density must be >= 2");
    }
    if (!(iv.lo < iv.hi)) {
        throw std::invalid_argument("empty interval " + to_string(iv));
    }
    const long open_ends = (iv.lo_closed ? 0 : 1) + (iv.hi_closed ? 0 : 1);
    const long M = grid_density - 1 + open_ends;
    const Rational step = (iv.hi - iv.lo) / M;
    std::vector<Rational> pts;
    const auto approach = [&](const Rational &end, int dir) {
        Rational d = step;
        for (int k = 1; k <= approach_points; ++k) {
            d /= 2;
            pts.push_back(end + dir * d);
        }
    };
    if (!iv.lo_closed) {
        approach(iv.lo, 1);
    }
    for (long i = iv.lo_closed ? 0 : 1; i <= (iv.hi_closed ? M : M - 1); ++i) {
        pts.push_back(iv.lo + i * step);
    }
    if (!iv.hi_closed) {
        approach(iv.hi, -1);
    }
    return pts;
}

GridReport check_monotonic(const FunctionSpec &spec, int grid_density, Precision prec, Execution exec)
{
    if (spec.max_order < 1 || spec.max_order > Jet::max_order) {
        throw std::invalid_argument("check_monotonic: max_order must lie in [1, 64]");
    }
    const std::vector<Rational> xs = sweep_points(spec.interval, grid_density);
    const auto orders = static_cast<std::size_t>(spec.max_order) + 1;
    std::vector<PointResult> results(xs.size() * orders);

    for_each_index(xs.size(), exec, [&](std::size_t xi) {
        const Angle x = Angle::pi_times(xs[xi]);
        const Route jet = run_route(spec.max_order, spec.claim, prec, [&](Precision p, const std::vector<int> &ns) {
            const Jet j = jet_of(spec.fn, x, spec.max_order, p);
            std::vector<std::optional<PrecReal>> out;
            for (int n : ns) {
                out.emplace_back(j.derivative(n));
            }
            return out;
        });
        std::optional<Route> series;
        if (spec.fn == FunctionId::g) {
            series = run_route(spec.max_order, spec.claim, prec, [&](Precision p, const std::vector<int> &ns) {
                std::vector<std::optional<PrecReal>> out;
                for (int n : ns) {
                    out.emplace_back(g_deriv(n, x, p));
                }
                return out;
            });
        }
        for (std::size_t n = 0; n < orders; ++n) {
            PointResult &r = results[xi * orders + n];
            r.where = Location{xs[xi], std::nullopt, static_cast<int>(n)};
            if (jet.skipped || (series && series->skipped)) {
                r.verdict = Verdict::skipped;
                continue;
            }
            Verdict v = jet.verdict[n];
            if (series && severity(series->verdict[n]) > severity(v)) {
                v = series->verdict[n];
            }
            if (v == Verdict::inconclusive && spec.fn == FunctionId::g && exact_zero_of_g(static_cast<int>(n), xs[xi])) {
                v = Verdict::exact_zero;
            }
            r.verdict = v;
            r.margin = jet.value[n];
        }
    });

    GridReport report;
    report.suite = "monotone:" + to_string(spec.fn);
    accumulate(report, results);
    report.detail = to_string(spec.claim) + " on " + to_string(spec.interval) + ", orders 0.." +
                    std::to_string(spec.max_order);
    return report;
}

GridReport zero_classification(Precision prec, int max_order)
{
    std::vector<PointResult> results;
    for (int n = 0; n <= max_order; ++n) {
        const TrigRational f = g_deriv_exact(n);
        PointResult at_pi;
        at_pi.where = Location{Rational(1), std::nullopt, n};
        const bool zero = f.numerator_at(Rational(-1), Rational(0)) == 0;
        at_pi.verdict = (zero == (n % 2 == 1)) ? (zero ? Verdict::exact_zero : Verdict::pass) : Verdict::fail;
        results.push_back(std::move(at_pi));

        for (long k = 1; k < 24; ++k) {
            if (k == 12) {
                continue;
            }
            PointResult r;
            r.where = Location{make_rational(k, 12), std::nullopt, n};
            const PrecReal v = eval_trig_rational(f, Angle::pi_times(k, 12), prec);
            r.verdict = v.contains_zero() ? Verdict::fail : Verdict::pass;
            r.margin = abs(v);
            results.push_back(std::move(r));
        }
    }
    GridReport report;
    report.suite = "zero_classification";
    accumulate(report, results);
    report.detail = "g^(n)(x) = 0 exactly iff n is odd and x = pi, n <= " + std::to_string(max_order);
    return report;
}

} // namespace cmtrig
