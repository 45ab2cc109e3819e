#ifndef CMTRIG_MONOTONICITY_HPP
#define CMTRIG_MONOTONICITY_HPP

#include <cmtrig/grid.hpp>
#include <cmtrig/jet.hpp>
#include <cmtrig/rational.hpp>

#include <string>
#include <vector>

namespace cmtrig
{

enum class Claim {
    completely_monotonic, // (-1)^n f^{(n)} >= 0
    absolutely_monotonic, // f^{(n)} >= 0
};

std::string to_string(Claim c);

/// Interval with endpoints lo*pi and hi*pi.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;
};

std::string to_string(const Interval &iv);

struct FunctionSpec {
    FunctionId fn = FunctionId::g;
    Interval interval;
    Claim claim = Claim::completely_monotonic;
    int max_order = 20;
};

// Default sweep order: 20 for g, which has two independent routes, and 12
// for functions that only have the jet route.
int default_max_order(FunctionId fn);

/// The claims checked by the standard suite for fn: for g both halves of
/// (0, 2pi), otherwise the single interval of the claim.
std::vector<FunctionSpec> standard_specs(FunctionId fn);

/// Grid points of a sweep, as multiples of pi. With d = grid_density and e
/// the number of open endpoints, the interval is cut into M = d - 1 + e equal
/// steps and the d step points lying in the interval are used. Each open
/// endpoint is then approached geometrically, at distances step/2^k
/// (k = 1..approach_points).
std::vector<Rational> sweep_points(const Interval &iv, int grid_density, int approach_points = 32);

/// For every grid point and every order n <= max_order, test the claimed
/// sign of f^{(n)}. A point is skipped when the pole guard refuses it.
/// Enclosures that straddle zero are recomputed once at doubled precision;
/// for g, a remaining straddle at a point with rational sin and cos is
/// settled by evaluating the exact numerator of g^{(n)}. For g the series
/// route is checked alongside the jet route and both must agree.
GridReport check_monotonic(const FunctionSpec &spec, int grid_density, Precision prec,
                           Execution exec = Execution::parallel);

/// Confirms that, for n <= max_order, the exact numerator of g^{(n)}
/// vanishes at pi iff n is odd, and that g^{(n)} is certified nonzero at
/// x = k pi / 12 for k = 1..23, k != 12.
GridReport zero_classification(Precision prec, int max_order = 20);

} // namespace cmtrig

#endif
