#include <cmtrig/bounds.hpp>
#include <cmtrig/grid.hpp>
#include <cmtrig/monotonicity.hpp>
#include <cmtrig/report.hpp>

#include <catch_amalgamated.hpp>

#include <atomic>
#include <stdexcept>
#include <vector>

using namespace cmtrig;

namespace
{

const Precision P128(128);

std::string dump(const GridReport &r)
{
    return dump_canonical(to_json(r));
}

} // namespace

TEST_CASE("for_each_index visits every index once in both modes")
{
    for (Execution exec : {Execution::serial, Execution::parallel}) {
        std::vector<int> hits(1000, 0);
        for_each_index(hits.size(), exec, [&](std::size_t i) { hits[i] += 1; });
        for (int h : hits) {
            CHECK(h == 1);
        }
    }
}

TEST_CASE("for_each_index rethrows the body's exception")
{
    for (Execution exec : {Execution::serial, Execution::parallel}) {
        std::atomic<int> ran{0};
        CHECK_THROWS_AS(for_each_index(64, exec,
                                       [&](std::size_t i) {
                                           ++ran;
                                           if (i == 17) {
                                               throw std::domain_error("boom");
                                           }
                                       }),
                        std::domain_error);
        CHECK(ran > 0);
    }
}

TEST_CASE("verify_simplex: serial and parallel reports are identical")
{
    for (int n : {0, 3}) {
        const GridReport s = verify_simplex(n, 30, P128, Execution::serial);
        const GridReport p = verify_simplex(n, 30, P128, Execution::parallel);
        CHECK(dump(s) == dump(p));
    }
}

TEST_CASE("check_monotonic: serial and parallel reports are identical")
{
    for (FunctionId fn : {FunctionId::g, FunctionId::h2}) {
        FunctionSpec spec = standard_specs(fn).back();
        spec.max_order = 6;
        const GridReport s = check_monotonic(spec, 20, P128, Execution::serial);
        const GridReport p = check_monotonic(spec, 20, P128, Execution::parallel);
        CHECK(dump(s) == dump(p));
    }
}

TEST_CASE("accumulate: ties resolve to the first point")
{
    std::vector<PointResult> pts(3);
    for (int i = 0; i < 3; ++i) {
        pts[static_cast<std::size_t>(i)].verdict = Verdict::pass;
        pts[static_cast<std::size_t>(i)].margin = PrecReal::from_int(i == 0 ? 2 : 1, 64);
        pts[static_cast<std::size_t>(i)].where = Location{make_rational(i, 10), std::nullopt, std::nullopt};
    }
    GridReport r;
    accumulate(r, pts);
    CHECK(r.all_passed);
    CHECK(r.points_checked == 3);
    REQUIRE(r.worst_point);
    CHECK(r.worst_point->x_over_pi == make_rational(1, 10));
    CHECK(r.extremum_location->x_over_pi == make_rational(1, 10));

    pts[2].verdict = Verdict::exact_zero;
    pts[2].margin = PrecReal(64);
    pts[1].verdict = Verdict::skipped;
    GridReport z;
    accumulate(z, pts);
    CHECK(z.exact_zeros == 1);
    CHECK(z.skipped_near_pole == 1);
    CHECK(z.worst_point->x_over_pi == Rational(0));
    CHECK(z.exact_zero_points.size() == 1);
}
