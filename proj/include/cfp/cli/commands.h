#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cfp/cli/config.h"

namespace cfp::cli {

struct RunRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;  ///< trial seed, derive_seed(config.seed, trial)
  double e_hat = 0.0;
  double e_hat_clamped = 0.0;
  std::optional<double> std_error;
  double true_distance = 0.0;
  std::uint64_t repetitions = 0;
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  std::int64_t raw_diff = 0;
  std::uint64_t communication_time = 0;
  std::optional<bool> decided_equal;  ///< equality mode only
  std::optional<bool> inputs_equal;   ///< equality mode only
  std::optional<double> wall_time_s;
};

/// Runs config.trials independent protocol executions and writes a metadata
/// line followed by one JSON record per trial, in trial order.
std::vector<RunRecord> cmd_simulate(const ExperimentConfig& config, std::ostream& out);

/// Equality via the code reduction: both bit strings are encoded, the
/// distance protocol runs on the codewords, and the Referee answers EQUAL iff
/// e_hat <= epsilon.
std::vector<RunRecord> cmd_equality(const ExperimentConfig& config, std::ostream& out);

struct ResourceOptions {
  std::vector<double> n_list;
  std::string k_rule = "plotted";
  /// Half-width of the visibility band; 0 disables the band columns.
  double nu_band = 0.0;
};

/// CSV of the resource curves: '#' metadata lines, then columns
/// n,k,T_cl,T_cp,T_qp,I_qp (plus band columns when requested).
std::vector<resources::ResourceReport> cmd_resources(const ExperimentConfig& config, const ResourceOptions& options,
                                                     std::ostream& out);

struct OfdmCheckRow {
  std::size_t k = 0;
  std::size_t trials = 0;
  double max_abs_error = 0.0;       ///< max over trials and q of |decode(encode(A), q) - A_q|
  double max_parseval_error = 0.0;  ///< max over trials of |sum |E_m|^2 / k - sum |A_j|^2|
};

std::vector<OfdmCheckRow> cmd_ofdm_check(const std::vector<std::size_t>& k_list, std::size_t trials,
                                         std::uint64_t seed, std::ostream& out);

/// Software version string embedded in every output.
std::string software_version();

}  // namespace cfp::cli
