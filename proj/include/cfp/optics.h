#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cfp/vectors.h"

namespace cfp {

/// Physical and statistical parameters of one experiment.
struct ProtocolParams {
  double mu = 1.0;      ///< mean photon number of one whole fingerprint, |alpha|^2
  double nu = 1.0;      ///< interferometer visibility, in (1/2, 1]
  double p_dark = 0.0;  ///< dark-count probability per detector per time unit
  /// Dark-count probability of D1 when it differs from D0. Unset means the
  /// detectors are symmetric, the case in which dark counts cancel.
  std::optional<double> p_dark_d1;
  double epsilon = 0.2;  ///< additive accuracy of the distance estimate
  double delta = 0.05;   ///< failure probability
  std::size_t n = 1;     ///< input dimension
  std::size_t k = 1;     ///< channel count; must divide n

  double dark_d0() const { return p_dark; }
  double dark_d1() const { return p_dark_d1.value_or(p_dark); }

  /// Throws PhysicsViolation for nu <= 1/2 and InvalidArgument for anything
  /// else out of range (including n % k != 0).
  void validate() const;
};

/// Per-time-mode coherent amplitudes x_j * alpha with alpha = sqrt(mu) > 0.
struct PulseTrain {
  std::vector<double> amplitudes;

  std::size_t size() const { return amplitudes.size(); }
  double mean_photon_number() const;
};

struct ClickProbabilities {
  std::vector<double> p0;  ///< per-slot probability of a D0 click
  std::vector<double> p1;  ///< per-slot probability of a D1 click

  std::size_t size() const { return p0.size(); }
};

/// Click counts summed over all slots and repetitions.
struct ClickTally {
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  std::uint64_t repetitions = 0;
  std::uint64_t slots = 0;
  /// Per-repetition D0-minus-D1 click count, indexed by repetition; empty
  /// when the sampler was asked not to keep it.
  std::vector<std::int64_t> per_repetition_diff;

  std::int64_t raw_diff() const { return static_cast<std::int64_t>(s0) - static_cast<std::int64_t>(s1); }

  friend bool operator==(const ClickTally&, const ClickTally&) = default;
};

enum class ClickModel {
  kExact,       ///< 1 - (1 - p_d) exp(-I): Poissonian no-click composed with dark counts
  kLinearized,  ///< I + p_d, the small-intensity expansion
};

std::string_view to_string(ClickModel model);
ClickModel parse_click_model(std::string_view name);

/// Fingerprint of x: amplitudes[j] = x_j * sqrt(mu). Slot j depends on x_j
/// alone, so the fingerprint can be emitted while x is streamed in.
PulseTrain make_fingerprint(const UnitVector& x, double mu);

/// 50/50 beam splitter: returns the (D0, D1) output amplitudes
/// ((a_x + a_y)/sqrt 2, (a_x - a_y)/sqrt 2).
std::pair<double, double> beamsplitter_amplitudes(double a_x, double a_y);

/// Click probability of one threshold detector given the mean photon number
/// reaching it.
double click_probability(double intensity, double p_dark, ClickModel model);

/// Click probabilities of both detectors in every slot. With visibility nu,
/// a fraction 1 - nu of each output arm's intensity leaks into the other:
///   I0 = nu |out0|^2 + (1 - nu) |out1|^2,  I1 = nu |out1|^2 + (1 - nu) |out0|^2.
/// The linearized model is clamped to 1 where it would exceed it.
ClickProbabilities click_probabilities(const PulseTrain& fx, const PulseTrain& fy,
                                       const ProtocolParams& params, ClickModel model);

struct SamplingOptions {
  /// Worker threads splitting the repetitions; the tally does not depend on it.
  unsigned workers = 1;
  bool keep_per_repetition = true;
  /// Randomness address of each slot; empty means slot j draws from index j.
  /// Two runs whose slots carry the same addresses and probabilities consume
  /// identical random numbers.
  std::span<const std::uint64_t> slot_address;
};

/// Independent Bernoulli clicks for each (repetition, detector, slot). The
/// uniform for a draw is the counter generator at
/// stream (seed, 2 * repetition + detector), index slot_address[slot].
ClickTally sample_clicks(const ClickProbabilities& probs, std::uint64_t repetitions, std::uint64_t seed,
                         const SamplingOptions& options = {});

}  // namespace cfp
