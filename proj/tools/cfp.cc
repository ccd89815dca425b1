// cfp: simulator and resource calculator for multiplexed coherent-state
// fingerprinting.
//
//   cfp simulate   --mu 5 --nu 0.98 --n 1024 --k 16 --trials 10
//   cfp equality   --message-bits 64 --rate-inverse 16 --same-inputs
//   cfp resources  --mu 100 --nu 0.99 --delta 1e-6 --n-list 2^10,2^20,2^30
//   cfp ofdm-check --k-list 2,4,8 --check-trials 100
//
// Every option can also be given in a flat key=value file passed with
// --config; command-line flags override the file.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfp/cli/commands.h"
#include "cfp/cli/config.h"
#include "cfp/errors.h"

namespace {

int fail(int code, std::string_view kind, std::string_view message) {
  nlohmann::ordered_json j;
  j["type"] = "error";
  j["kind"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  std::cerr << j.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cfp;
  using namespace cfp::cli;

  CLI::App app{"Multiplexed coherent-state fingerprinting simulator"};
  app.set_version_flag("--version", software_version());
  app.set_config("--config", "", "Flat key=value configuration file");
  app.require_subcommand(1);
  app.fallthrough();

  ExperimentConfig config;
  ProtocolParams& p = config.params;
  p.mu = 5.0;
  p.nu = 0.99;
  p.n = 1024;
  double p_dark_d1 = -1.0;
  std::string source = "random";
  std::string model = "exact";
  std::string backend = "fibers";
  std::uint64_t repetitions = 0;
  std::string x_file;
  std::string y_file;
  std::string output;

  app.add_option("--mu", p.mu, "Mean photon number per fingerprint")->capture_default_str();
  app.add_option("--nu", p.nu, "Interferometer visibility")->capture_default_str();
  app.add_option("--p-dark", p.p_dark, "Dark-count probability per detector per time unit")->capture_default_str();
  app.add_option("--p-dark-d1", p_dark_d1, "Separate dark-count probability for D1 (default: same as D0)");
  app.add_option("--epsilon", p.epsilon, "Additive accuracy")->capture_default_str();
  app.add_option("--delta", p.delta, "Failure probability")->capture_default_str();
  app.add_option("--n", p.n, "Input dimension (random input)")->capture_default_str();
  app.add_option("--k", p.k, "Channel count")->capture_default_str();
  app.add_option("--seed", config.seed, "Master seed")->capture_default_str();
  app.add_option("--source", source, "random|vector-files|bit-files")->capture_default_str();
  app.add_option("--x-file", x_file, "Alice's input file");
  app.add_option("--y-file", y_file, "Bob's input file");
  app.add_flag("--same-inputs", config.same_inputs, "Random mode: Bob receives Alice's input");
  app.add_option("--repetitions", repetitions, "Override the planned repetition count");
  app.add_option("--model", model, "Click model: exact|linearized")->capture_default_str();
  app.add_option("--backend", backend, "Multiplexing backend: fibers|ofdm")->capture_default_str();
  app.add_option("--trials", config.trials, "Independent protocol runs")->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads")->capture_default_str();
  app.add_flag("--timing", config.record_timing, "Record wall time (output no longer byte-reproducible)");
  app.add_option("--output,-o", output, "Output file (default stdout)");
  app.add_option("--message-bits", config.message_bits, "Equality random mode: bits per message")
      ->capture_default_str();
  app.add_option("--rate-inverse", config.rate_inverse, "Code length / message length")->capture_default_str();
  app.add_option("--code-seed", config.code_seed, "Seed of the generator matrix")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Run the distance-estimation protocol");
  auto* equality = app.add_subcommand("equality", "Decide Equality through the code reduction");

  auto* resources_cmd = app.add_subcommand("resources", "Emit resource curves as CSV");
  std::string n_list = "2^4,2^8,2^12,2^16,2^20,2^24,2^28,2^32,2^36,2^40";
  ResourceOptions res_opts;
  resources_cmd->add_option("--n-list", n_list, "Comma-separated input sizes (2^e allowed)")->capture_default_str();
  resources_cmd->add_option("--k-rule", res_opts.k_rule, "plotted|advantage|const:<k>")->capture_default_str();
  resources_cmd->add_option("--nu-band", res_opts.nu_band, "Visibility band half-width (0 = off)");

  auto* ofdm = app.add_subcommand("ofdm-check", "OFDM encode/decode round-trip report");
  std::vector<std::size_t> k_list{2, 4, 8, 16, 64};
  std::size_t check_trials = 100;
  ofdm->add_option("--k-list", k_list, "Subcarrier counts")->delimiter(',');
  ofdm->add_option("--check-trials", check_trials, "Random symbols per k")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitConfigError, "config", e.what());
  }

  try {
    if (p_dark_d1 >= 0.0) p.p_dark_d1 = p_dark_d1;
    if (repetitions > 0) config.repetitions = repetitions;
    config.source = parse_input_source(source);
    config.model = parse_click_model(model);
    config.backend = parse_mux_backend(backend);
    config.x_file = x_file;
    config.y_file = y_file;
    config.output = output;

    std::unique_ptr<std::ofstream> file;
    if (!config.output.empty()) {
      file = std::make_unique<std::ofstream>(config.output);
      if (!*file) return fail(kExitConfigError, "config", "cannot open output file " + config.output.string());
    }
    std::ostream& out = file ? *file : std::cout;

    if (*simulate) {
      cmd_simulate(config, out);
    } else if (*equality) {
      cmd_equality(config, out);
    } else if (*resources_cmd) {
      res_opts.n_list = parse_n_list(n_list);
      cmd_resources(config, res_opts, out);
    } else if (*ofdm) {
      cmd_ofdm_check(k_list, check_trials, config.seed, out);
    }
    out.flush();
    if (!out) return fail(kExitConfigError, "io", "failed to write output");
  } catch (const PhysicsViolation& e) {
    return fail(kExitPhysicsViolation, "physics", e.what());
  } catch (const ConfigError& e) {
    return fail(kExitConfigError, "config", e.what());
  } catch (const InvalidArgument& e) {
    return fail(kExitConfigError, "config", e.what());
  }
  return kExitOk;
}
