#include "cfp/optics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>

#include "cfp/errors.h"
#include "cfp/rng.h"

namespace cfp {

namespace {

bool is_probability(double p) { return p >= 0.0 && p < 1.0; }

}  // namespace

void ProtocolParams::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidArgument("mu must be positive");
  if (!(nu <= 1.0)) throw InvalidArgument("visibility nu must not exceed 1");
  if (!(nu > 0.5)) throw PhysicsViolation("visibility nu must exceed 1/2 (2nu - 1 <= 0 makes the estimator singular)");
  if (!is_probability(p_dark)) throw InvalidArgument("p_dark must lie in [0, 1)");
  if (p_dark_d1 && !is_probability(*p_dark_d1)) throw InvalidArgument("p_dark_d1 must lie in [0, 1)");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  if (n == 0) throw InvalidArgument("n must be positive");
  if (k == 0 || k > n) throw InvalidArgument("k must lie in [1, n]");
  if (n % k != 0) throw InvalidArgument("k must divide n");
}

double PulseTrain::mean_photon_number() const {
  return std::transform_reduce(amplitudes.begin(), amplitudes.end(), 0.0, std::plus<>(),
                               [](double a) { return a * a; });
}

std::string_view to_string(ClickModel model) {
  return model == ClickModel::kExact ? "exact" : "linearized";
}

ClickModel parse_click_model(std::string_view name) {
  if (name == "exact") return ClickModel::kExact;
  if (name == "linearized") return ClickModel::kLinearized;
  throw InvalidArgument("unknown click model '" + std::string(name) + "' (expected exact|linearized)");
}

PulseTrain make_fingerprint(const UnitVector& x, double mu) {
  if (!(mu > 0.0)) throw InvalidArgument("mu must be positive");
  const double alpha = std::sqrt(mu);
  PulseTrain train;
  train.amplitudes.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) train.amplitudes[j] = x[j] * alpha;
  return train;
}

std::pair<double, double> beamsplitter_amplitudes(double a_x, double a_y) {
  constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
  return {(a_x + a_y) * kInvSqrt2, (a_x - a_y) * kInvSqrt2};
}

double click_probability(double intensity, double p_dark, ClickModel model) {
  if (model == ClickModel::kLinearized) return std::min(1.0, intensity + p_dark);
  // 1 - (1 - p_d) e^{-I}, written to keep precision when both terms are tiny.
  return -std::expm1(std::log1p(-p_dark) - intensity);
}

ClickProbabilities click_probabilities(const PulseTrain& fx, const PulseTrain& fy,
                                       const ProtocolParams& params, ClickModel model) {
  if (fx.size() != fy.size()) throw DimensionMismatch(fx.size(), fy.size());
  const double nu = params.nu;
  ClickProbabilities out;
  out.p0.resize(fx.size());
  out.p1.resize(fx.size());
  for (std::size_t j = 0; j < fx.size(); ++j) {
    const auto [b0, b1] = beamsplitter_amplitudes(fx.amplitudes[j], fy.amplitudes[j]);
    const double i0 = b0 * b0;
    const double i1 = b1 * b1;
    out.p0[j] = click_probability(nu * i0 + (1.0 - nu) * i1, params.dark_d0(), model);
    out.p1[j] = click_probability(nu * i1 + (1.0 - nu) * i0, params.dark_d1(), model);
  }
  return out;
}

namespace {

struct PartialTally {
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
};

PartialTally sample_range(const ClickProbabilities& probs, std::uint64_t first, std::uint64_t last,
                          std::uint64_t seed, std::span<const std::uint64_t> address,
                          std::span<std::int64_t> per_rep) {
  const std::size_t n = probs.size();
  PartialTally t;
  for (std::uint64_t r = first; r < last; ++r) {
    const rng::Stream d0(seed, 2 * r);
    const rng::Stream d1(seed, 2 * r + 1);
    std::uint64_t c0 = 0;
    std::uint64_t c1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t a = address.empty() ? j : address[j];
      c0 += d0.uniform(a) < probs.p0[j];
      c1 += d1.uniform(a) < probs.p1[j];
    }
    t.s0 += c0;
    t.s1 += c1;
    if (!per_rep.empty()) per_rep[r] = static_cast<std::int64_t>(c0) - static_cast<std::int64_t>(c1);
  }
  return t;
}

}  // namespace

ClickTally sample_clicks(const ClickProbabilities& probs, std::uint64_t repetitions, std::uint64_t seed,
                         const SamplingOptions& options) {
  if (repetitions == 0) throw InvalidArgument("repetitions must be at least 1");
  if (probs.p0.size() != probs.p1.size()) throw DimensionMismatch(probs.p0.size(), probs.p1.size());
  if (!options.slot_address.empty() && options.slot_address.size() != probs.size()) {
    throw DimensionMismatch(options.slot_address.size(), probs.size());
  }

  ClickTally tally;
  tally.repetitions = repetitions;
  tally.slots = probs.size();
  if (options.keep_per_repetition) tally.per_repetition_diff.assign(repetitions, 0);
  std::span<std::int64_t> per_rep(tally.per_repetition_diff);

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers == 0 ? std::thread::hardware_concurrency() : options.workers, 1,
                                repetitions);
  std::vector<PartialTally> partial(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = repetitions * w / workers;
      const std::uint64_t last = repetitions * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] {
        partial[w] = sample_range(probs, first, last, seed, options.slot_address, per_rep);
      });
    }
  }
  for (const auto& p : partial) {
    tally.s0 += p.s0;
    tally.s1 += p.s1;
  }
  return tally;
}

}  // namespace cfp
