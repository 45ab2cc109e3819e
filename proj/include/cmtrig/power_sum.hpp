#ifndef CMTRIG_POWER_SUM_HPP
#define CMTRIG_POWER_SUM_HPP

#include <cmtrig/prec_real.hpp>

#include <optional>

namespace cmtrig
{

/// Enclosure of S(a, s) = sum_{k >= 0} (k + a)^(-s) for a > 0, s > 1.
///
/// The first direct_terms terms are summed explicitly. The tail from
/// k = K = direct_terms is the Euler-Maclaurin expansion around X = K + a,
///
///   X^(1-s)/(s-1) + X^(-s)/2 + sum_{j=1}^{M-1} B_{2j}/(2j)! (s)_{2j-1} X^(1-s-2j),
///
/// whose remainder is bounded by 2 |B_{2M}|/(2M)! (s)_{2M-1} X^(1-s-2M)
/// because every derivative of t -> (t + a)^(-s) has constant sign on
/// [K, inf). That bound is folded into value's radius and reported.
struct PowerSum {
    PrecReal value;
    long direct_terms = 0;
    int correction_terms = 0;
    Mag remainder;
};

// Integer exponent s >= 2. tol defaults to 2^-prec times the first term.
PowerSum shifted_power_sum(const PrecReal &shift, long s, mpfr_prec_t prec, std::optional<Mag> tol = std::nullopt);
// Real exponent s > 1.
PowerSum shifted_power_sum(const PrecReal &shift, const PrecReal &s, mpfr_prec_t prec,
                           std::optional<Mag> tol = std::nullopt);

} // namespace cmtrig

#endif
