#include "cfp/estimator.h"

#include <algorithm>
#include <cmath>

#include "cfp/errors.h"

namespace cfp {

namespace {

double signal_scale(const ProtocolParams& params) {
  if (!(params.nu > 0.5)) throw PhysicsViolation("visibility nu must exceed 1/2");
  if (!(params.mu > 0.0)) throw InvalidArgument("mu must be positive");
  return params.mu * (2.0 * params.nu - 1.0);
}

}  // namespace

EstimateResult estimate_distance(const ClickTally& tally, const ProtocolParams& params) {
  if (tally.repetitions == 0) throw InvalidArgument("tally has no repetitions");
  const double scale = signal_scale(params);
  const auto reps = static_cast<double>(tally.repetitions);

  EstimateResult r;
  r.repetitions = tally.repetitions;
  r.raw_diff = tally.raw_diff();
  r.e_hat = 2.0 - static_cast<double>(r.raw_diff) / (reps * scale);
  r.e_hat_clamped = std::clamp(r.e_hat, 0.0, 4.0);

  if (tally.per_repetition_diff.size() == tally.repetitions && tally.repetitions > 1) {
    const double mean = static_cast<double>(r.raw_diff) / reps;
    double ss = 0.0;
    for (auto d : tally.per_repetition_diff) {
      const double dev = static_cast<double>(d) - mean;
      ss += dev * dev;
    }
    const double var = ss / (reps - 1.0);
    r.std_error = std::sqrt(var / reps) / scale;
  }
  return r;
}

double analytic_expectation(const UnitVector& x, const UnitVector& y, const ProtocolParams& params) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    plus += (x[j] + y[j]) * (x[j] + y[j]);
    minus += (x[j] - y[j]) * (x[j] - y[j]);
  }
  return (2.0 * params.nu - 1.0) / 2.0 * params.mu * (plus - minus);
}

double repetition_prefactor(const ProtocolParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (!(params.delta > 0.0 && params.delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  const double scale = signal_scale(params);
  return 3.0 * chernoff_log(1.0 / params.delta) / (2.0 * params.epsilon * params.epsilon * scale);
}

std::uint64_t required_repetitions(const ProtocolParams& params) {
  return static_cast<std::uint64_t>(std::ceil(repetition_prefactor(params)));
}

}  // namespace cfp
