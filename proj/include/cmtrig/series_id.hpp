#ifndef CMTRIG_SERIES_ID_HPP
#define CMTRIG_SERIES_ID_HPP

#include <cmtrig/angle.hpp>
#include <cmtrig/prec_real.hpp>
#include <cmtrig/rational.hpp>
#include <cmtrig/trig_deriv.hpp>

#include <utility>

namespace cmtrig
{

/// F_k(x) = sum_{v=1}^{k} sin(v x) / v, k >= 1.
PrecReal fejer(int k, const Angle &x, Precision prec);

/// Largest |cos x| for which the H and Lampret series are summed.
inline constexpr double max_series_ratio = 0.995;

/// sum_{k=1}^{K} F_k(x) cos^k x for 0 < x < pi. With q = |cos x| and
/// |F_k| <= 1 + ln k <= 1 + ln(K+1) + (k-K-1)/(K+1) for k > K, the tail is
/// at most
///
///   (1 + ln(K+1) + 1/((K+1)(1-q))) q^{K+1} / (1-q).
///
/// Refuses q > max_series_ratio.
SeriesEval h_partial(const Angle &x, int terms, Precision prec);

/// Upper bound on the tail of h_partial after `terms` terms.
Mag h_tail_bound(const Angle &x, int terms, Precision prec);

/// Smallest K whose h_partial tail bound is <= accuracy.
int h_terms_for(const Angle &x, const Mag &accuracy, Precision prec);

/// (pi/2 - x) / (1 - cos x) for 0 < x < pi.
PrecReal h_closed(const Angle &x, Precision prec);

struct LampretCheck {
    PrecReal lhs;   // pi/2 - |x|
    SeriesEval rhs; // sgn(x) sum_{k=1}^{K} sin(kx)/k cos^k x, tail q^{K+1}/((K+1)(1-q))
    bool overlaps() const
    {
        return lhs.overlaps(rhs.value);
    }
};

/// Both sides of pi/2 - |x| = sgn(x) sum_{k>=1} sin(kx)/k cos^k x for
/// 0 < |x| < pi.
LampretCheck lampret_check(const Angle &x, int terms, Precision prec);

/// a_k = sum_{v=0}^{floor((k-1)/3)} (-1)^v/(3v+1) and
/// b_k = sum_{v=0}^{floor((k-2)/3)} (-1)^v/(3v+2), k >= 1.
std::pair<Rational, Rational> ab_coeffs(int k);

/// sum_{k=1}^{K} (a_k + b_k) / 2^k, exactly.
Rational pi_partial_sum(int terms);

/// (3 sqrt 3 / 2) pi_partial_sum(K). Both partial alternating sums are
/// bracketed by their first two terms, so 0 < a_k + b_k <= 1 + 1/2 and the
/// tail is at most (9 sqrt 3 / 4) 2^{-K}.
SeriesEval pi_series(int terms, Precision prec);

} // namespace cmtrig

#endif
