#pragma once

#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cfp/optics.h"

namespace cfp::resources {

// Logarithm conventions of the closed-form resource formulas. Each is a
// named choice because the formulas leave bases implicit.
//
// log k in the classical formulas: base 2, the number of bits needed to name
// one of k channels when a k-channel protocol is simulated on one channel.
inline constexpr double kChannelLogBase = 2.0;
// "2 log 2" inside the classical lower bound: natural log of 2.
inline constexpr double kLowerBoundLogBase = std::numbers::e;
// log(1/delta) in the repetition count: natural (same as the estimator).
inline constexpr double kRepetitionLogBase = std::numbers::e;
// log n in the information formula: base 2 (stated explicitly).
inline constexpr double kInformationLogBase = 2.0;
// log n in the plotted channel rule k = 20 sqrt(n) log n: base 2.
inline constexpr double kChannelRuleLogBase = 2.0;

/// Human-readable summary of the conventions above, one "key=value" per entry.
std::vector<std::pair<std::string, std::string>> log_conventions();

/// ((1 - 2 sqrt(delta)) sqrt(n / (2 ln 2)) - 1) / log2 k, floored at 0.
/// Throws InvalidArgument for k < 2.
double classical_lower_bound(double n, double delta, double k);

/// Same bound on a single channel (no log k division), floored at 0.
double classical_lower_bound_single_channel(double n, double delta);

/// (20 sqrt(n) + 10) / log2 k. Throws InvalidArgument for k < 2.
double classical_best_protocol(double n, double k);

struct QuantumResources {
  double t_quantum = 0.0;  ///< time units, P n / k
  double i_quantum = 0.0;  ///< bits, P mu log2 n
};

/// P = 3 ln(1/delta) / (2 eps^2 mu (2 nu - 1)), the pre-ceiling repetition
/// count; uses mu, nu, epsilon and delta of `params`.
QuantumResources quantum_resources(const ProtocolParams& params, double n, double k);
/// Uses params.n and params.k.
QuantumResources quantum_resources(const ProtocolParams& params);

/// Channel count at which the quantum protocol matches the classical lower
/// bound in time:
///   P / (1 - 2 sqrt(delta)) * log2(sqrt n) * sqrt(2 ln 2 * n).
/// Throws InvalidArgument for delta >= 1/4.
double channels_for_advantage(const ProtocolParams& params, double n);

using KRule = std::function<double(double n)>;

/// k = 20 sqrt(n) log2 n, the rule used for the published performance plot.
KRule plotted_k_rule();
KRule constant_k_rule(double k);
KRule advantage_k_rule(const ProtocolParams& params);

struct ResourceReport {
  double n = 0.0;
  double k = 0.0;
  double t_classical_lb = 0.0;    ///< T_cl = I_cl, bits
  double t_classical_best = 0.0;  ///< T_cp = I_cp, bits
  double t_quantum = 0.0;         ///< T_qp, time units
  double i_quantum = 0.0;         ///< I_qp, bits
};

ResourceReport resource_report(const ProtocolParams& params, double n, double k);

/// Input sizes 2^(i / points_per_octave), rounded, deduplicated, within
/// [n_min, n_max]. A grid with a multiple of points_per_octave contains
/// every point of the coarser one.
std::vector<double> power_grid(double n_min, double n_max, unsigned points_per_octave = 1);

struct Crossover {
  std::optional<double> n_time;  ///< first n with T_qp < T_cl
  std::optional<double> n_both;  ///< first n with T_qp < T_cl and I_qp < T_cl
};

Crossover crossover_search(const ProtocolParams& params, const KRule& k_rule, double n_max, double n_min = 2.0,
                           unsigned points_per_octave = 1);

struct Table1Row {
  std::string protocol;
  std::string time_order;
  std::string info_order;
  double time_value = 0.0;
  double info_value = 0.0;
};

/// The four protocol rows (single-channel classical, single-channel
/// coherent, multiplexed classical, multiplexed coherent) with their
/// asymptotic orders and values at (n, k).
std::vector<Table1Row> table1_orders(const ProtocolParams& params, double n, double k);

}  // namespace cfp::resources
