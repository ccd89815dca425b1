#include "cfp/multiplex.h"

#include <numbers>
#include <string>

#include "cfp/errors.h"

namespace cfp {

ChannelSchedule::ChannelSchedule(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n == 0) throw InvalidArgument("schedule needs n >= 1");
  if (k == 0 || k > n) throw InvalidArgument("channel count must lie in [1, n]");
  if (n % k != 0) {
    throw InvalidArgument("channel count " + std::to_string(k) + " does not divide n = " + std::to_string(n));
  }
}

ChannelSchedule schedule(std::size_t n, std::size_t k) { return ChannelSchedule(n, k); }

PhotonBudget photon_budget(const ProtocolParams& params) {
  PhotonBudget b;
  b.photons_per_time_unit = params.mu * static_cast<double>(params.k) / static_cast<double>(params.n);
  b.valid = b.photons_per_time_unit < 1.0;
  return b;
}

namespace {

// exp(i 2 pi r / k) for r = 0..k-1; phases are reduced mod k before lookup.
std::vector<Complex> roots_of_unity(std::size_t k) {
  std::vector<Complex> w(k);
  for (std::size_t r = 0; r < k; ++r) {
    w[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(k));
  }
  return w;
}

}  // namespace

OfdmSymbol ofdm_encode(std::span<const Complex> amplitudes) {
  const std::size_t k = amplitudes.size();
  if (k == 0) throw InvalidArgument("OFDM symbol needs at least one subcarrier");
  const auto w = roots_of_unity(k);
  OfdmSymbol sym;
  sym.subcarrier_amplitudes.assign(amplitudes.begin(), amplitudes.end());
  sym.time_samples.assign(k, Complex{});
  for (std::size_t m = 0; m < k; ++m) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += amplitudes[j - 1] * w[(j * m) % k];
    sym.time_samples[m] = acc;
  }
  return sym;
}

Complex ofdm_decode(std::span<const Complex> samples, std::size_t q) {
  const std::size_t k = samples.size();
  if (k == 0) throw InvalidArgument("OFDM symbol needs at least one sample");
  if (q < 1 || q > k) throw InvalidArgument("subcarrier index q must lie in [1, k]");
  const auto w = roots_of_unity(k);
  Complex acc{};
  for (std::size_t l = 0; l < k; ++l) {
    const Complex delayed = samples[(k - l) % k];  // E(-l T_c), periodic in T
    acc += delayed * w[(l * q) % k];
  }
  return acc / static_cast<double>(k);
}

std::string_view to_string(MuxBackend backend) { return backend == MuxBackend::kFibers ? "fibers" : "ofdm"; }

MuxBackend parse_mux_backend(std::string_view name) {
  if (name == "fibers") return MuxBackend::kFibers;
  if (name == "ofdm") return MuxBackend::kOfdm;
  throw InvalidArgument("unknown multiplexing backend '" + std::string(name) + "' (expected fibers|ofdm)");
}

namespace {

// Pulses as the Referee receives them, placed back at their input index.
PulseTrain transmit(const PulseTrain& emitted, const ChannelSchedule& sched, MuxBackend backend) {
  if (backend == MuxBackend::kFibers) return emitted;
  PulseTrain received;
  received.amplitudes.resize(emitted.size());
  std::vector<Complex> carriers(sched.k());
  for (std::size_t t = 0; t < sched.time_units(); ++t) {
    for (std::size_t c = 0; c < sched.k(); ++c) carriers[c] = emitted.amplitudes[sched.input_index(t, c)];
    const OfdmSymbol sym = ofdm_encode(carriers);
    for (std::size_t c = 0; c < sched.k(); ++c) {
      received.amplitudes[sched.input_index(t, c)] = ofdm_decode(sym.time_samples, c + 1).real();
    }
  }
  return received;
}

}  // namespace

MultiplexedRun run_multiplexed_protocol(const UnitVector& x, const UnitVector& y, const ProtocolParams& params,
                                        std::uint64_t seed, const MultiplexOptions& options) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
  if (x.size() != params.n) throw DimensionMismatch(x.size(), params.n);
  params.validate();
  const ChannelSchedule sched(params.n, params.k);

  MultiplexedRun run;
  run.budget = photon_budget(params);
  if (!run.budget.valid) {
    throw PhysicsViolation("photon budget mu k / n = " + std::to_string(run.budget.photons_per_time_unit) +
                           " is not below one photon per time unit");
  }

  const PulseTrain fx = transmit(make_fingerprint(x, params.mu), sched, options.backend);
  const PulseTrain fy = transmit(make_fingerprint(y, params.mu), sched, options.backend);
  const ClickProbabilities probs = click_probabilities(fx, fy, params, options.model);

  std::vector<std::uint64_t> address;
  if (options.randomness == RandomnessKey::kEmissionOrder) {
    address.resize(params.n);
    for (std::size_t j = 0; j < params.n; ++j) address[j] = sched.time_unit_of(j) * sched.k() + sched.channel_of(j);
  }

  const std::uint64_t reps = options.repetitions.value_or(required_repetitions(params));
  SamplingOptions sampling;
  sampling.workers = options.workers;
  sampling.keep_per_repetition = options.keep_per_repetition;
  sampling.slot_address = address;
  run.tally = sample_clicks(probs, reps, seed, sampling);
  run.estimate = estimate_distance(run.tally, options.assumed.value_or(params));
  run.communication_time = sched.time_units() * reps;
  return run;
}

}  // namespace cfp
