#ifndef CMTRIG_SUITES_HPP
#define CMTRIG_SUITES_HPP

#include <cmtrig/grid.hpp>
#include <cmtrig/jet.hpp>
#include <cmtrig/prec_real.hpp>

#include <string>
#include <vector>

namespace cmtrig
{

struct SuiteOptions {
    Precision prec{128};
    int grid_density = 100;
    // Upper order for g; jet-only functions use min(max_order, 12).
    int max_order = 20;
    Execution exec = Execution::parallel;
};

/// x = q pi with q = 1/7 + i (5/7)/(count-1), i = 0..count-1: an evenly
/// spaced grid inside [0.4, pi - 0.4] made of exact multiples of pi.
std::vector<Rational> identity_grid(int count = 30);

/// h_partial against h_closed at every identity_grid point, with the number
/// of terms chosen so that the tail is at most accuracy.
GridReport identity_h(Precision prec, double accuracy = 1e-12);
/// Both sides of the Lampret formula at the identity grid and its negatives.
GridReport identity_lampret(Precision prec, double accuracy = 1e-12);
/// kolbig_gap(m) against -pi (2pi)^{2m} |E_2m| for m = 1..max_m: containment
/// and a relative midpoint error of at most 1e-20.
GridReport identity_kolbig(Precision prec, int max_m = 5);
/// pi_series(terms) contains pi with radius <= 1e-15, and the partial sums
/// increase strictly.
GridReport identity_pi(Precision prec, int terms = 60);

/// "h", "lampret", "kolbig" or "pi".
GridReport identity_suite(const std::string &which, Precision prec);

/// The standard monotonicity claims for fn at the given density.
std::vector<GridReport> monotone_suite(FunctionId fn, const SuiteOptions &opt);

/// Every verification suite: simplex sweeps for n = 0..5, all monotonicity
/// claims, the zero classification, and the four identities.
std::vector<GridReport> run_all(const SuiteOptions &opt);

} // namespace cmtrig

#endif
