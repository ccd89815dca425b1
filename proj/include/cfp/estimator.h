#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "cfp/optics.h"
#include "cfp/vectors.h"

namespace cfp {

/// The repetition planner's log(1/delta) is the natural logarithm, the form
/// in which multiplicative Chernoff bounds are usually stated.
inline double chernoff_log(double x) { return std::log(x); }

struct EstimateResult {
  double e_hat = 0.0;          ///< raw estimate of ||x - y||^2, may leave [0, 4] by noise
  double e_hat_clamped = 0.0;  ///< e_hat clamped to [0, 4]
  std::uint64_t repetitions = 0;
  std::int64_t raw_diff = 0;  ///< s0 - s1
  /// Plug-in standard error of e_hat from the per-repetition differences;
  /// unset when the tally carries none or has a single repetition.
  std::optional<double> std_error;
};

/// e_hat = 2 - (s0 - s1) / (R mu (2 nu - 1)), using the mu and nu of
/// `params` (which may be assumed values differing from those used to
/// generate the tally).
EstimateResult estimate_distance(const ClickTally& tally, const ProtocolParams& params);

/// Expectation of sum_j (Z0_j - Z1_j) per repetition under the linearized
/// click model: ((2 nu - 1) / 2) mu (||x + y||^2 - ||x - y||^2).
double analytic_expectation(const UnitVector& x, const UnitVector& y, const ProtocolParams& params);

/// 3 log(1/delta) / (2 eps^2 mu (2 nu - 1)) before rounding up.
double repetition_prefactor(const ProtocolParams& params);

/// ceil(repetition_prefactor(params)).
std::uint64_t required_repetitions(const ProtocolParams& params);

}  // namespace cfp
