#include "cfp/cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

#include <json.hpp>

#include "cfp/errors.h"
#include "cfp/estimator.h"
#include "cfp/rng.h"

namespace cfp::cli {

using Json = nlohmann::ordered_json;

std::string software_version() { return CFP_VERSION; }

namespace {

// Stream indices under a trial seed.
constexpr std::uint64_t kAliceInputStream = 1;
constexpr std::uint64_t kBobInputStream = 2;
constexpr std::uint64_t kSamplingStream = 3;

Json params_json(const ProtocolParams& p) {
  Json j;
  j["mu"] = p.mu;
  j["nu"] = p.nu;
  j["p_dark"] = p.p_dark;
  j["p_dark_d1"] = p.p_dark_d1 ? Json(*p.p_dark_d1) : Json(nullptr);
  j["epsilon"] = p.epsilon;
  j["delta"] = p.delta;
  j["n"] = p.n;
  j["k"] = p.k;
  return j;
}

Json config_json(const ExperimentConfig& c) {
  Json j = params_json(c.params);
  j["source"] = to_string(c.source);
  if (c.source != InputSource::kRandom) {
    j["x_file"] = c.x_file.string();
    j["y_file"] = c.y_file.string();
  } else {
    j["same_inputs"] = c.same_inputs;
  }
  j["seed"] = c.seed;
  j["repetitions"] = c.repetitions ? Json(*c.repetitions) : Json(nullptr);
  j["model"] = to_string(c.model);
  j["backend"] = to_string(c.backend);
  j["trials"] = c.trials;
  return j;
}

Json conventions_json() {
  Json j;
  for (const auto& [key, value] : resources::log_conventions()) j[key] = value;
  return j;
}

Json meta_json(std::string_view command, const Json& config) {
  Json j;
  j["type"] = "meta";
  j["command"] = command;
  j["software"] = "cfp";
  j["version"] = software_version();
  j["generator"] = rng::kGeneratorName;
  j["log_conventions"] = conventions_json();
  j["ofdm_subcarriers"] = "1-based, omega_j = 2 pi j / T, omega_0 = 0";
  j["config"] = config;
  return j;
}

Json record_json(const RunRecord& r) {
  Json j;
  j["type"] = "run";
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["e_hat"] = r.e_hat;
  j["e_hat_clamped"] = r.e_hat_clamped;
  j["std_error"] = r.std_error ? Json(*r.std_error) : Json(nullptr);
  j["true_distance"] = r.true_distance;
  j["repetitions"] = r.repetitions;
  j["s0"] = r.s0;
  j["s1"] = r.s1;
  j["raw_diff"] = r.raw_diff;
  j["communication_time"] = r.communication_time;
  if (r.inputs_equal) j["inputs_equal"] = *r.inputs_equal;
  if (r.decided_equal) j["decision"] = *r.decided_equal ? "EQUAL" : "UNEQUAL";
  if (r.wall_time_s) j["wall_time_s"] = *r.wall_time_s;
  return j;
}

struct TrialInputs {
  UnitVector x;
  UnitVector y;
  std::optional<bool> inputs_equal;
};

using InputMaker = std::function<TrialInputs(std::uint64_t trial_seed)>;

// Runs every trial, possibly in parallel, and returns records in trial order.
std::vector<RunRecord> run_trials(const ExperimentConfig& config, const InputMaker& make_inputs) {
  const std::size_t trials = config.trials;
  const unsigned threads = std::max(1u, config.threads);
  const unsigned trial_workers = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
  const unsigned sampling_workers = trial_workers > 1 ? 1 : threads;

  std::vector<RunRecord> records(trials);
  auto run_one = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t trial_seed = rng::derive_seed(config.seed, i);
    const TrialInputs in = make_inputs(trial_seed);

    MultiplexOptions opts;
    opts.model = config.model;
    opts.backend = config.backend;
    opts.repetitions = config.repetitions;
    opts.workers = sampling_workers;
    const MultiplexedRun run =
        run_multiplexed_protocol(in.x, in.y, config.params, rng::derive_seed(trial_seed, kSamplingStream), opts);

    RunRecord& r = records[i];
    r.trial = i;
    r.seed = trial_seed;
    r.e_hat = run.estimate.e_hat;
    r.e_hat_clamped = run.estimate.e_hat_clamped;
    r.std_error = run.estimate.std_error;
    r.true_distance = euclidean_distance_sq(in.x, in.y);
    r.repetitions = run.estimate.repetitions;
    r.s0 = run.tally.s0;
    r.s1 = run.tally.s1;
    r.raw_diff = run.estimate.raw_diff;
    r.communication_time = run.communication_time;
    r.inputs_equal = in.inputs_equal;
    if (config.record_timing) {
      r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  if (trial_workers <= 1) {
    for (std::size_t i = 0; i < trials; ++i) run_one(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < trial_workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < trials; i += trial_workers) run_one(i);
      });
    }
  }
  return records;
}

UnitVector load_unit_vector(const std::filesystem::path& path) {
  const auto raw = read_vector_file(path);
  try {
    return normalize(raw);
  } catch (const InvalidArgument& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::vector<RunRecord> cmd_simulate(const ExperimentConfig& config_in, std::ostream& out) {
  ExperimentConfig config = config_in;
  std::optional<UnitVector> file_x;
  std::optional<UnitVector> file_y;
  if (config.source == InputSource::kBitFiles) throw ConfigError("simulate takes real vectors; use equality for bit strings");
  if (config.source == InputSource::kVectorFiles) {
    if (config.x_file.empty() || config.y_file.empty()) throw ConfigError("file input needs both x_file and y_file");
    file_x = load_unit_vector(config.x_file);
    file_y = load_unit_vector(config.y_file);
    if (file_x->size() != file_y->size()) {
      throw ConfigError("input vectors differ in length: " + std::to_string(file_x->size()) + " vs " +
                        std::to_string(file_y->size()));
    }
    config.params.n = file_x->size();
  }
  validate(config);

  const std::size_t n = config.params.n;
  const bool same = config.same_inputs;
  const InputMaker make_inputs = [&](std::uint64_t trial_seed) -> TrialInputs {
    if (file_x) return {*file_x, *file_y, std::nullopt};
    UnitVector x = random_unit_vector(n, rng::derive_seed(trial_seed, kAliceInputStream));
    if (same) return {x, x, std::nullopt};
    return {x, random_unit_vector(n, rng::derive_seed(trial_seed, kBobInputStream)), std::nullopt};
  };

  const auto records = run_trials(config, make_inputs);
  out << meta_json("simulate", config_json(config)).dump() << '\n';
  for (const auto& r : records) out << record_json(r).dump() << '\n';
  return records;
}

std::vector<RunRecord> cmd_equality(const ExperimentConfig& config_in, std::ostream& out) {
  ExperimentConfig config = config_in;
  if (config.source == InputSource::kVectorFiles) throw ConfigError("equality takes bit strings, not real vectors");
  if (config.rate_inverse < 2) throw ConfigError("rate_inverse must be at least 2");

  std::optional<BinaryString> file_s;
  std::optional<BinaryString> file_t;
  std::size_t n_bits = config.message_bits;
  if (config.source == InputSource::kBitFiles) {
    if (config.x_file.empty() || config.y_file.empty()) throw ConfigError("file input needs both x_file and y_file");
    file_s = read_bits_file(config.x_file);
    file_t = read_bits_file(config.y_file);
    if (file_s->empty() || file_t->empty()) throw ConfigError("equality inputs must be non-empty");
    if (file_s->size() != file_t->size()) {
      throw ConfigError("bit strings differ in length: " + std::to_string(file_s->size()) + " vs " +
                        std::to_string(file_t->size()));
    }
    n_bits = file_s->size();
  }
  if (n_bits == 0) throw ConfigError("equality inputs must be non-empty");
  config.params.n = n_bits * config.rate_inverse;
  validate(config);

  const RandomLinearCode code(n_bits, config.rate_inverse, config.code_seed);
  const bool same = config.same_inputs;
  const InputMaker make_inputs = [&](std::uint64_t trial_seed) -> TrialInputs {
    BinaryString s;
    BinaryString t;
    if (file_s) {
      s = *file_s;
      t = *file_t;
    } else {
      s = random_binary_string(n_bits, rng::derive_seed(trial_seed, kAliceInputStream));
      t = same ? s : random_binary_string(n_bits, rng::derive_seed(trial_seed, kBobInputStream));
    }
    return {codeword_to_unit_vector(code.encode(s)), codeword_to_unit_vector(code.encode(t)), s == t};
  };

  auto records = run_trials(config, make_inputs);
  for (auto& r : records) r.decided_equal = r.e_hat <= config.params.epsilon;

  Json cfg = config_json(config);
  cfg["message_bits"] = n_bits;
  cfg["rate_inverse"] = config.rate_inverse;
  cfg["code_seed"] = config.code_seed;
  cfg["threshold"] = config.params.epsilon;
  out << meta_json("equality", cfg).dump() << '\n';
  for (const auto& r : records) out << record_json(r).dump() << '\n';
  return records;
}

std::vector<resources::ResourceReport> cmd_resources(const ExperimentConfig& config, const ResourceOptions& options,
                                                     std::ostream& out) {
  if (options.n_list.empty()) throw ConfigError("resources needs at least one input size");
  if (!(options.nu_band >= 0.0)) throw ConfigError("nu band must be non-negative");
  const ProtocolParams& p = config.params;
  try {
    repetition_prefactor(p);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  const auto k_rule = parse_k_rule(options.k_rule, p);
  const bool band = options.nu_band > 0.0;
  ProtocolParams lo = p;
  ProtocolParams hi = p;
  lo.nu = p.nu - options.nu_band;
  hi.nu = std::min(1.0, p.nu + options.nu_band);
  if (band && !(lo.nu > 0.5)) throw PhysicsViolation("lower edge of the visibility band must exceed 1/2");

  std::vector<resources::ResourceReport> rows;
  rows.reserve(options.n_list.size());
  for (double n : options.n_list) rows.push_back(resources::resource_report(p, n, k_rule(n)));

  out << "# software=cfp version=" << software_version() << '\n';
  out << "# command=resources k_rule=" << options.k_rule << '\n';
  out << "# mu=" << format_real(p.mu) << " nu=" << format_real(p.nu) << " epsilon=" << format_real(p.epsilon)
      << " delta=" << format_real(p.delta) << '\n';
  if (band) out << "# nu_band=" << format_real(options.nu_band) << '\n';
  for (const auto& [key, value] : resources::log_conventions()) out << "# " << key << '=' << value << '\n';
  out << "n,k,T_cl,T_cp,T_qp,I_qp";
  if (band) out << ",T_qp_nu_lo,T_qp_nu_hi,I_qp_nu_lo,I_qp_nu_hi";
  out << '\n';
  for (const auto& r : rows) {
    out << format_real(r.n) << ',' << format_real(r.k) << ',' << format_real(r.t_classical_lb) << ','
        << format_real(r.t_classical_best) << ',' << format_real(r.t_quantum) << ',' << format_real(r.i_quantum);
    if (band) {
      const auto ql = resources::quantum_resources(lo, r.n, r.k);
      const auto qh = resources::quantum_resources(hi, r.n, r.k);
      out << ',' << format_real(ql.t_quantum) << ',' << format_real(qh.t_quantum) << ','
          << format_real(ql.i_quantum) << ',' << format_real(qh.i_quantum);
    }
    out << '\n';
  }
  return rows;
}

std::vector<OfdmCheckRow> cmd_ofdm_check(const std::vector<std::size_t>& k_list, std::size_t trials,
                                         std::uint64_t seed, std::ostream& out) {
  if (k_list.empty()) throw ConfigError("ofdm-check needs at least one k");
  if (trials == 0) throw ConfigError("trials must be at least 1");
  std::vector<OfdmCheckRow> rows;
  for (std::size_t k : k_list) {
    if (k == 0) throw ConfigError("subcarrier count must be positive");
    OfdmCheckRow row{k, trials, 0.0, 0.0};
    for (std::size_t t = 0; t < trials; ++t) {
      const rng::Stream stream(rng::derive_seed(seed, k), t);
      std::vector<Complex> a(k);
      for (std::size_t j = 0; j < k; ++j) a[j] = {stream.normal(2 * j), stream.normal(2 * j + 1)};
      const OfdmSymbol sym = ofdm_encode(a);
      double in_energy = 0.0;
      double out_energy = 0.0;
      for (std::size_t q = 1; q <= k; ++q) {
        row.max_abs_error = std::max(row.max_abs_error, std::abs(ofdm_decode(sym.time_samples, q) - a[q - 1]));
        in_energy += std::norm(a[q - 1]);
        out_energy += std::norm(sym.time_samples[q - 1]);
      }
      row.max_parseval_error =
          std::max(row.max_parseval_error, std::abs(out_energy / static_cast<double>(k) - in_energy));
    }
    rows.push_back(row);
  }

  out << "# software=cfp version=" << software_version() << " generator=" << rng::kGeneratorName
      << " seed=" << seed << '\n';
  out << "# ofdm_subcarriers=1-based omega_j=2*pi*j/T omega_0=0\n";
  out << "k,trials,max_abs_error,max_parseval_error\n";
  for (const auto& r : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%zu,%zu,%.6e,%.6e\n", r.k, r.trials, r.max_abs_error, r.max_parseval_error);
    out << line;
  }
  return rows;
}

}  // namespace cfp::cli
