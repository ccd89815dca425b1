#include "cfp/resources.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cfp/errors.h"
#include "cfp/estimator.h"

namespace cfp::resources {

namespace {

double log_base(double x, double base) { return std::log(x) / std::log(base); }

void require_multi_channel(double k) {
  if (!(k >= 2.0)) throw InvalidArgument("classical multiplexed formulas need k >= 2 (log k must be positive)");
}

// (1 - 2 sqrt(delta)) sqrt(n / (2 ln 2)) - 1
double lower_bound_numerator(double n, double delta) {
  if (!(n >= 1.0)) throw InvalidArgument("n must be at least 1");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  const double two_log_two = 2.0 * log_base(2.0, kLowerBoundLogBase);
  return (1.0 - 2.0 * std::sqrt(delta)) * std::sqrt(n / two_log_two) - 1.0;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> log_conventions() {
  return {
      {"log_k_classical", "base 2"},
      {"log_2_in_lower_bound", "natural"},
      {"log_1_over_delta", "natural"},
      {"log_n_information", "base 2"},
      {"log_n_channel_rule", "base 2"},
  };
}

double classical_lower_bound(double n, double delta, double k) {
  require_multi_channel(k);
  return std::max(0.0, lower_bound_numerator(n, delta) / log_base(k, kChannelLogBase));
}

double classical_lower_bound_single_channel(double n, double delta) {
  return std::max(0.0, lower_bound_numerator(n, delta));
}

double classical_best_protocol(double n, double k) {
  require_multi_channel(k);
  if (!(n >= 1.0)) throw InvalidArgument("n must be at least 1");
  return (20.0 * std::sqrt(n) + 10.0) / log_base(k, kChannelLogBase);
}

QuantumResources quantum_resources(const ProtocolParams& params, double n, double k) {
  if (!(n >= 1.0)) throw InvalidArgument("n must be at least 1");
  if (!(k >= 1.0)) throw InvalidArgument("k must be at least 1");
  const double prefactor = repetition_prefactor(params);
  return {prefactor * n / k, prefactor * params.mu * log_base(n, kInformationLogBase)};
}

QuantumResources quantum_resources(const ProtocolParams& params) {
  return quantum_resources(params, static_cast<double>(params.n), static_cast<double>(params.k));
}

double channels_for_advantage(const ProtocolParams& params, double n) {
  if (!(params.delta < 0.25)) throw InvalidArgument("channels_for_advantage needs delta < 1/4");
  if (!(n >= 1.0)) throw InvalidArgument("n must be at least 1");
  const double two_log_two = 2.0 * log_base(2.0, kLowerBoundLogBase);
  return repetition_prefactor(params) / (1.0 - 2.0 * std::sqrt(params.delta)) *
         log_base(std::sqrt(n), kInformationLogBase) * std::sqrt(two_log_two * n);
}

KRule plotted_k_rule() {
  return [](double n) { return 20.0 * std::sqrt(n) * log_base(n, kChannelRuleLogBase); };
}

KRule constant_k_rule(double k) {
  return [k](double) { return k; };
}

KRule advantage_k_rule(const ProtocolParams& params) {
  return [params](double n) { return channels_for_advantage(params, n); };
}

ResourceReport resource_report(const ProtocolParams& params, double n, double k) {
  ResourceReport r;
  r.n = n;
  r.k = k;
  r.t_classical_lb = classical_lower_bound(n, params.delta, k);
  r.t_classical_best = classical_best_protocol(n, k);
  const auto q = quantum_resources(params, n, k);
  r.t_quantum = q.t_quantum;
  r.i_quantum = q.i_quantum;
  return r;
}

std::vector<double> power_grid(double n_min, double n_max, unsigned points_per_octave) {
  if (points_per_octave == 0) throw InvalidArgument("points_per_octave must be positive");
  if (!(n_min >= 1.0) || n_max < n_min) throw InvalidArgument("grid needs 1 <= n_min <= n_max");
  std::vector<double> grid;
  const double step = 1.0 / points_per_octave;
  const auto first = static_cast<long>(std::ceil(std::log2(n_min) * points_per_octave - 1e-9));
  for (long i = first;; ++i) {
    const double n = std::round(std::exp2(static_cast<double>(i) * step));
    if (n > n_max) break;
    if (n < n_min) continue;
    if (grid.empty() || n > grid.back()) grid.push_back(n);
  }
  return grid;
}

Crossover crossover_search(const ProtocolParams& params, const KRule& k_rule, double n_max, double n_min,
                           unsigned points_per_octave) {
  Crossover out;
  for (double n : power_grid(n_min, n_max, points_per_octave)) {
    const ResourceReport r = resource_report(params, n, k_rule(n));
    const bool time_wins = r.t_quantum < r.t_classical_lb;
    if (time_wins && !out.n_time) out.n_time = n;
    if (time_wins && r.i_quantum < r.t_classical_lb) {
      out.n_both = n;
      break;
    }
  }
  return out;
}

std::vector<Table1Row> table1_orders(const ProtocolParams& params, double n, double k) {
  const double cl_single = classical_lower_bound_single_channel(n, params.delta);
  const auto coherent = quantum_resources(params, n, 1.0);
  const auto mux = quantum_resources(params, n, k);
  const double cl_mux = k >= 2.0 ? classical_lower_bound(n, params.delta, k) : cl_single;
  return {
      {"Classical", "Omega(sqrt(n))", "Omega(sqrt(n))", cl_single, cl_single},
      {"Coherent", "O(n)", "O(mu log n)", coherent.t_quantum, coherent.i_quantum},
      {"Mux Classical", "Omega(sqrt(n)/log k)", "Omega(sqrt(n)/log k)", cl_mux, cl_mux},
      {"Mux Coherent", "O(n/k)", "O(mu log n)", mux.t_quantum, mux.i_quantum},
  };
}

}  // namespace cfp::resources
