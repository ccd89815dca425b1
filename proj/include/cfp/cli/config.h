#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfp/multiplex.h"
#include "cfp/optics.h"
#include "cfp/resources.h"
#include "cfp/vectors.h"

namespace cfp::cli {

// Exit codes of the cfp tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitPhysicsViolation = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InputSource {
  kRandom,       ///< seeded random unit vectors (simulate) or bit strings (equality)
  kVectorFiles,  ///< x_file / y_file hold one real per line
  kBitFiles,     ///< x_file / y_file hold '0'/'1' characters
};

struct ExperimentConfig {
  ProtocolParams params;
  InputSource source = InputSource::kRandom;
  std::filesystem::path x_file;
  std::filesystem::path y_file;
  /// Random mode only: Bob's input equals Alice's.
  bool same_inputs = false;
  /// Equality random mode: message length.
  std::size_t message_bits = 64;
  std::size_t rate_inverse = 16;
  std::uint64_t code_seed = 1;

  std::uint64_t seed = 1;
  std::optional<std::uint64_t> repetitions;
  ClickModel model = ClickModel::kExact;
  MuxBackend backend = MuxBackend::kFibers;
  std::size_t trials = 1;
  unsigned threads = 1;
  /// Adds wall-clock time to every record; output is then no longer
  /// byte-reproducible.
  bool record_timing = false;
  std::filesystem::path output;  ///< empty means stdout
};

/// One real per line; blank lines and lines starting with '#' are skipped.
std::vector<double> read_vector_file(const std::filesystem::path& path);
/// '0'/'1' characters on any number of lines; '#' lines are skipped.
BinaryString read_bits_file(const std::filesystem::path& path);

/// "plotted" (20 sqrt(n) log2 n), "advantage" (the break-even formula) or
/// "const:<k>".
resources::KRule parse_k_rule(const std::string& spec, const ProtocolParams& params);

/// Comma-separated list of input sizes; entries may be written 2^e.
std::vector<double> parse_n_list(const std::string& text);

std::string_view to_string(InputSource source);
InputSource parse_input_source(std::string_view name);

/// Checks the configuration before any sampling. ConfigError for malformed
/// settings, PhysicsViolation for nu <= 1/2 or a photon budget >= 1.
void validate(const ExperimentConfig& config);

}  // namespace cfp::cli
