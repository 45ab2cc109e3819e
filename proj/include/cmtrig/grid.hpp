#ifndef CMTRIG_GRID_HPP
#define CMTRIG_GRID_HPP

#include <cmtrig/prec_real.hpp>
#include <cmtrig/rational.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cmtrig
{

enum class Execution { serial, parallel };

/// Run body(i) for i in [0, count). The parallel flavour uses an OpenMP
/// dynamic schedule; the first exception thrown by any body is rethrown
/// after the loop. Bodies must only write to their own slot of a
/// preallocated result, so that both flavours produce identical results.
void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)> &body);

/// A grid point: x (and y for the simplex) as exact multiples of pi, plus
/// the derivative order for sweeps that range over orders.
struct Location {
    Rational x_over_pi;
    std::optional<Rational> y_over_pi;
    std::optional<int> order;

    friend bool operator==(const Location &, const Location &) = default;
};

std::string to_string(const Location &loc);

/// Outcome of a sweep. worst_margin is the smallest certified margin over
/// the points that must be strictly positive, attained first (in sweep
/// order) at worst_point. extremum_location is where the smallest margin
/// midpoint over all points sits, including equality points whose margin
/// is zero by construction.
struct GridReport {
    std::string suite;
    std::optional<int> n;
    long points_checked = 0;
    long failed = 0;
    long inconclusive = 0;
    long exact_zeros = 0;
    long skipped_near_pole = 0;
    bool all_passed = false;
    std::optional<PrecReal> worst_margin;
    std::optional<Location> worst_point;
    std::optional<Location> extremum_location;
    std::optional<PrecReal> extremum_margin;
    // Where the exact zeros were found, in sweep order.
    std::vector<Location> exact_zero_points;
    std::string detail;
};

/// Outcome of a single sign test.
enum class Verdict { pass, exact_zero, inconclusive, fail, skipped };

/// Serial, order-preserving fold of per-point results into a report. The
/// first index attaining a minimum wins ties, which is the lexicographic
/// order when points are enumerated lexicographically.
struct PointResult {
    Verdict verdict = Verdict::skipped;
    std::optional<PrecReal> margin;
    Location where;
    // Whether this point takes part in worst_margin. Equality points and
    // exact zeros do not.
    bool strict = true;
};

void accumulate(GridReport &report, const std::vector<PointResult> &points);

} // namespace cmtrig

#endif
