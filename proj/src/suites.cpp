#include <cmtrig/bounds.hpp>
#include <cmtrig/monotonicity.hpp>
#include <cmtrig/numbers.hpp>
#include <cmtrig/series_id.hpp>
#include <cmtrig/suites.hpp>

#include <algorithm>
#include <stdexcept>

namespace cmtrig
{

namespace
{

PointResult check_point(bool ok, Location where, std::optional<PrecReal> margin = std::nullopt)
{
    PointResult p;
    p.verdict = ok ? Verdict::pass : Verdict::fail;
    p.where = std::move(where);
    p.margin = std::move(margin);
    return p;
}

GridReport finish(std::string suite, const std::vector<PointResult> &pts, std::string detail)
{
    GridReport r;
    r.suite = std::move(suite);
    accumulate(r, pts);
    r.detail = std::move(detail);
    return r;
}

} // namespace

std::vector<Rational> identity_grid(int count)
{
    if (count < 2) {
        throw std::invalid_argument("identity_grid: need at least two points");
    }
    std::vector<Rational> q;
    for (int i = 0; i < count; ++i) {
        q.push_back(make_rational(1, 7) + make_rational(5L * i, 7L * (count - 1)));
    }
    return q;
}

GridReport identity_h(Precision prec, double accuracy)
{
    std::vector<PointResult> pts;
    const Mag target(accuracy);
    for (const auto &q : identity_grid()) {
        const Angle x = Angle::pi_times(q);
        const int terms = h_terms_for(x, target, prec);
        const SeriesEval lhs = h_partial(x, terms, prec);
        const PrecReal rhs = h_closed(x, prec);
        pts.push_back(check_point(lhs.value.overlaps(rhs) && lhs.tail_bound <= target, Location{q, std::nullopt, std::nullopt}));
    }
    return finish("identity:h", pts, "sum_k F_k(x) cos^k x = (pi/2 - x)/(1 - cos x), tail <= " + target.to_string(3));
}

GridReport identity_lampret(Precision prec, double accuracy)
{
    std::vector<PointResult> pts;
    const Mag target(accuracy);
    for (const auto &q0 : identity_grid()) {
        for (const Rational &q : {q0, Rational(-q0)}) {
            const Angle x = Angle::pi_times(q);
            // q^{K+1}/((K+1)(1-q)) is below the H tail bound for the same K.
            const int terms = h_terms_for(q > 0 ? x : -x, target, prec);
            const LampretCheck c = lampret_check(x, terms, prec);
            pts.push_back(check_point(c.overlaps() && c.rhs.tail_bound <= target, Location{q, std::nullopt, std::nullopt}));
        }
    }
    return finish("identity:lampret", pts, "pi/2 - |x| = sgn(x) sum_k sin(kx)/k cos^k x");
}

GridReport identity_kolbig(Precision prec, int max_m)
{
    std::vector<PointResult> pts;
    const auto hi = Precision(4 * prec.bits()).working_bits();
    for (int m = 1; m <= max_m; ++m) {
        const PrecReal gap = kolbig_gap(m, prec);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2UL * m);
        scale *= abs(euler(2 * m));
        const PrecReal target = -(PrecReal::from_bigint(scale, hi) * pow_int(PrecReal::pi(hi), 2L * m + 1));
        const bool relative = midpoint_distance(gap, target) <= Mag(1e-20) * target.abs_lower();
        pts.push_back(check_point(gap.contains(target) && relative, Location{Rational(0), std::nullopt, m}));
    }
    return finish("identity:kolbig", pts, "psi^(2m)(1/4) - psi^(2m)(3/4) = -pi (2pi)^(2m) |E_2m|, m <= " +
                                              std::to_string(max_m));
}

GridReport identity_pi(Precision prec, int terms)
{
    std::vector<PointResult> pts;
    const SeriesEval s = pi_series(terms, prec);
    const PrecReal pi_hi = PrecReal::pi(Precision(4 * prec.bits()).working_bits());
    pts.push_back(check_point(s.value.contains(pi_hi) && s.value.rad() <= Mag(1e-15),
                              Location{Rational(1), std::nullopt, terms}));
    Rational prev(0);
    bool increasing = true;
    for (int k = 1; k <= terms; ++k) {
        const Rational cur = pi_partial_sum(k);
        increasing = increasing && cur > prev;
        prev = cur;
    }
    pts.push_back(check_point(increasing, Location{Rational(1), std::nullopt, std::nullopt}));
    return finish("identity:pi", pts,
                  "pi_series(" + std::to_string(terms) + ") = " + s.value.to_string(20) + ", partial sums increasing");
}

GridReport identity_suite(const std::string &which, Precision prec)
{
    if (which == "h") {
        return identity_h(prec);
    }
    if (which == "lampret") {
        return identity_lampret(prec);
    }
    if (which == "kolbig") {
        return identity_kolbig(prec);
    }
    if (which == "pi") {
        return identity_pi(prec);
    }
    throw std::invalid_argument("unknown identity '" + which + "' (expected h, lampret, kolbig or pi)");
}

std::vector<GridReport> monotone_suite(FunctionId fn, const SuiteOptions &opt)
{
    std::vector<GridReport> out;
    for (auto spec : standard_specs(fn)) {
        spec.max_order = fn == FunctionId::g ? opt.max_order : std::min(opt.max_order, spec.max_order);
        out.push_back(check_monotonic(spec, opt.grid_density, opt.prec, opt.exec));
    }
    return out;
}

std::vector<GridReport> run_all(const SuiteOptions &opt)
{
    std::vector<GridReport> out;
    for (int n = 0; n <= 5; ++n) {
        out.push_back(verify_simplex(n, opt.grid_density, opt.prec, opt.exec));
    }
    for (auto fn : {FunctionId::g, FunctionId::h1, FunctionId::h2, FunctionId::big_h, FunctionId::csc,
                    FunctionId::sin_over_one_minus_cos}) {
        for (auto &r : monotone_suite(fn, opt)) {
            out.push_back(std::move(r));
        }
    }
    out.push_back(zero_classification(opt.prec, opt.max_order));
    for (const char *which : {"h", "lampret", "kolbig", "pi"}) {
        out.push_back(identity_suite(which, opt.prec));
    }
    return out;
}

} // namespace cmtrig
