#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cfp/estimator.h"
#include "cfp/optics.h"
#include "cfp/vectors.h"

namespace cfp {

/// Split of an n-slot fingerprint into k substrings of n/k consecutive
/// slots, one substring per channel. At time unit t (0-based) channel c
/// carries input index c * (n/k) + t.
class ChannelSchedule {
 public:
  /// Throws InvalidArgument unless 1 <= k <= n and k divides n.
  ChannelSchedule(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t time_units() const { return n_ / k_; }

  std::size_t input_index(std::size_t time_unit, std::size_t channel) const {
    return channel * time_units() + time_unit;
  }
  std::size_t time_unit_of(std::size_t input_index) const { return input_index % time_units(); }
  std::size_t channel_of(std::size_t input_index) const { return input_index / time_units(); }

 private:
  std::size_t n_;
  std::size_t k_;
};

ChannelSchedule schedule(std::size_t n, std::size_t k);

struct PhotonBudget {
  double photons_per_time_unit = 0.0;  ///< mu k / n
  bool valid = false;                  ///< photons_per_time_unit < 1
};

PhotonBudget photon_budget(const ProtocolParams& params);

// OFDM subcarrier math at baseband (omega_0 = 0) with unit symbol period:
// subcarrier j (1-based) oscillates at omega_j = 2 pi j, and the symbol is
// sampled at the k chip instants t_m = m / k.
using Complex = std::complex<double>;

struct OfdmSymbol {
  std::vector<Complex> subcarrier_amplitudes;  ///< A_1..A_k, stored 0-based
  std::vector<Complex> time_samples;           ///< E(t_m), m = 0..k-1
};

/// time_samples[m] = sum_{j=1..k} A_j exp(i 2 pi j m / k).
OfdmSymbol ofdm_encode(std::span<const Complex> amplitudes);

/// Optical DFT output for subcarrier q (1-based), evaluated at t = 0:
///   (1/k) sum_{l=0..k-1} E(-l T_c) exp(i 2 pi l q / k),
/// where E(-l T_c) is read from the periodic symbol. Returns A_q exactly (up
/// to rounding) for any symbol produced by ofdm_encode.
Complex ofdm_decode(std::span<const Complex> samples, std::size_t q);

/// How the k parallel pulses of one time unit reach the Referee.
enum class MuxBackend {
  kFibers,  ///< k separate physical channels
  kOfdm,    ///< one OFDM symbol per time unit, demultiplexed by the optical DFT
};

std::string_view to_string(MuxBackend backend);
MuxBackend parse_mux_backend(std::string_view name);

/// Which index addresses the random draw of a detection event.
enum class RandomnessKey {
  kInputIndex,     ///< the input coordinate j the pulse pair encodes
  kEmissionOrder,  ///< the (time unit, channel) position, t * k + c
};

struct MultiplexOptions {
  ClickModel model = ClickModel::kExact;
  MuxBackend backend = MuxBackend::kFibers;
  RandomnessKey randomness = RandomnessKey::kInputIndex;
  /// Repetition count; defaults to required_repetitions(params).
  std::optional<std::uint64_t> repetitions;
  /// mu and nu the Referee believes when estimating; defaults to the true ones.
  std::optional<ProtocolParams> assumed;
  unsigned workers = 1;
  bool keep_per_repetition = true;
};

struct MultiplexedRun {
  EstimateResult estimate;
  ClickTally tally;
  std::uint64_t communication_time = 0;  ///< (n / k) * repetitions
  PhotonBudget budget;
};

/// Full protocol: Alice and Bob emit their fingerprints k pulses at a time
/// following the schedule, the Referee interferes matching pulses and counts
/// clicks, and the distance is estimated from the tally. Throws
/// PhysicsViolation when mu k / n >= 1 or nu <= 1/2.
MultiplexedRun run_multiplexed_protocol(const UnitVector& x, const UnitVector& y, const ProtocolParams& params,
                                        std::uint64_t seed, const MultiplexOptions& options = {});

}  // namespace cfp
