#include <cmtrig/bounds.hpp>
#include <cmtrig/numbers.hpp>
#include <cmtrig/trig_deriv.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

namespace cmtrig
{

namespace
{

void require_in_open_half_turn(const Angle &y, const char *what)
{
    if (y.compare_pi_times(Rational(0)) <= 0 || y.compare_pi_times(Rational(1)) >= 0) {
        throw std::domain_error(std::string(what) + ": y must lie in (0, pi), got " + y.to_string());
    }
}

// g^{(n)}(i pi / N) for i = 0..N; entry 0 and entries inside the pole
// guard stay empty.
std::vector<std::optional<PrecReal>> lattice(int n, long N, Precision prec, Execution exec)
{
    std::vector<std::optional<PrecReal>> g(static_cast<std::size_t>(N) + 1);
    for_each_index(static_cast<std::size_t>(N), exec, [&](std::size_t k) {
        const long i = static_cast<long>(k) + 1;
        try {
            g[static_cast<std::size_t>(i)] = g_deriv(n, Angle::pi_times(i, N), prec);
        } catch (const std::domain_error &) {
            // inside the pole guard
        }
    });
    return g;
}

struct SimplexPoint {
    long i;
    long j;
};

PointResult judge(int n, const SimplexPoint &pt, long N, const std::vector<std::optional<PrecReal>> &g,
                  const PrecReal &bound)
{
    PointResult r;
    r.where = Location{make_rational(pt.i, N), make_rational(pt.j, N), std::nullopt};
    r.strict = !(2 * pt.i == N && pt.i == pt.j);
    const auto &gx = g[static_cast<std::size_t>(pt.i)];
    const auto &gy = g[static_cast<std::size_t>(pt.j)];
    const auto &gs = g[static_cast<std::size_t>(pt.i + pt.j)];
    if (!gx || !gy || !gs) {
        r.verdict = Verdict::skipped;
        return r;
    }
    PrecReal margin = (n % 2 == 0) ? *gx + *gy - *gs - bound : *gs - *gx - *gy - bound;
    if (!r.strict) {
        r.verdict = margin.contains_zero() ? Verdict::pass : Verdict::fail;
    } else if (margin.is_positive()) {
        r.verdict = Verdict::pass;
    } else if (margin.is_negative()) {
        r.verdict = Verdict::fail;
    } else {
        r.verdict = Verdict::inconclusive;
    }
    r.margin = std::move(margin);
    return r;
}

PrecReal bound_for(int n, mpfr_prec_t wp)
{
    return n % 2 == 0 ? PrecReal::from_rational(lambda_lower(n), wp) : PrecReal::from_bigint(mu_lower(n), wp);
}

} // namespace

Rational lambda_lower(int n)
{
    if (n < 0 || n % 2 != 0) {
        throw std::invalid_argument("lambda_lower: n must be even and nonnegative, got " + std::to_string(n));
    }
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(n) + 2);
    m -= 1;
    Rational r = make_rational(BigInt(2) * m * m, BigInt(n + 2)) * abs(bernoulli(n + 2));
    r.canonicalize();
    return r;
}

BigInt mu_lower(int n)
{
    if (n < 1 || n % 2 != 1) {
        throw std::invalid_argument("mu_lower: n must be odd and positive, got " + std::to_string(n));
    }
    return 2 * BigInt(abs(euler(n + 1)));
}

PrecReal p_n(int n, const Angle &x, const Angle &y, Precision prec)
{
    if (x.compare_pi_times(Rational(0)) <= 0 || y.compare_pi_times(Rational(0)) <= 0) {
        throw std::domain_error("p_n: x and y must be positive");
    }
    const Angle s = x + y;
    if (s.compare_pi_times(Rational(1)) > 0) {
        throw std::domain_error("p_n: x + y must not exceed pi");
    }
    return g_deriv(n, x, prec) + g_deriv(n, y, prec) - g_deriv(n, s, prec);
}

PrecReal q_n(int n, const Angle &y, Precision prec)
{
    if (n < 0 || n % 2 != 0) {
        throw std::invalid_argument("q_n: n must be even and nonnegative");
    }
    require_in_open_half_turn(y, "q_n");
    return g_deriv(n, Angle::pi_times(1) - y, prec) + g_deriv(n, y, prec) - g_pi(n, prec);
}

PrecReal r_n(int n, const Angle &y, Precision prec)
{
    if (n < 1 || n % 2 != 1) {
        throw std::invalid_argument("r_n: n must be odd and positive");
    }
    require_in_open_half_turn(y, "r_n");
    return g_deriv(n, Angle::pi_times(1) - y, prec) + g_deriv(n, y, prec);
}

GridReport verify_simplex(int n, int grid_density, Precision prec, Execution exec)
{
    if (n < 0) {
        throw std::invalid_argument("verify_simplex: n must be nonnegative");
    }
    if (grid_density < 2) {
        throw std::invalid_argument("verify_simplex: grid_density must be >= 2");
    }
    const long N = grid_density + (grid_density % 2);

    std::vector<SimplexPoint> pts;
    for (long i = 1; i < N; ++i) {
        for (long j = 1; i + j <= N; ++j) {
            pts.push_back({i, j});
        }
    }

    const auto g = lattice(n, N, prec, exec);
    const PrecReal bound = bound_for(n, prec.working_bits());
    std::vector<PointResult> results(pts.size());
    for_each_index(pts.size(), exec, [&](std::size_t k) { results[k] = judge(n, pts[k], N, g, bound); });

    std::vector<std::size_t> retry;
    for (std::size_t k = 0; k < results.size(); ++k) {
        if (results[k].verdict == Verdict::inconclusive) {
            retry.push_back(k);
        }
    }
    if (!retry.empty()) {
        const Precision hi = prec.doubled();
        const auto g2 = lattice(n, N, hi, exec);
        const PrecReal bound2 = bound_for(n, hi.working_bits());
        for_each_index(retry.size(), exec,
                       [&](std::size_t r) { results[retry[r]] = judge(n, pts[retry[r]], N, g2, bound2); });
    }

    GridReport report;
    report.suite = "subadd";
    report.n = n;
    accumulate(report, results);
    report.detail = "triangular grid with N = " + std::to_string(N) + (n % 2 == 0 ? ", bound lambda_n = " + to_string(lambda_lower(n))
                                                                                 : ", bound mu_n = " + to_string(mu_lower(n)));
    return report;
}

ProbeResult unboundedness_probe(int n, Precision prec, int max_steps)
{
    if (n < 0) {
        throw std::invalid_argument("unboundedness_probe: n must be nonnegative");
    }
    ProbeResult out;
    BigInt den(2);
    for (int step = 0; step < max_steps; ++step, den *= 2) {
        const Rational q = make_rational(BigInt(1), den);
        const Angle x = Angle::pi_times(q);
        try {
            out.values.push_back(abs(p_n(n, x, x, prec)));
        } catch (const std::domain_error &e) {
            out.stop_reason = e.what();
            return out;
        }
        out.x_over_pi.push_back(q);
    }
    out.stop_reason = "reached the step limit";
    return out;
}

} // namespace cmtrig
