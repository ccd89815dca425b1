#include "cfp/cli/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cfp/errors.h"

namespace cfp::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file '" + path.string() + "'");
  return in;
}

double parse_double(const std::string& text, const std::string& where) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError("not a finite real number: '" + text + "' (" + where + ")");
  }
  return value;
}

}  // namespace

std::vector<double> read_vector_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<double> values;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    values.push_back(parse_double(t, path.string() + ":" + std::to_string(line_no)));
  }
  if (values.empty()) throw ConfigError("vector file '" + path.string() + "' is empty");
  return values;
}

BinaryString read_bits_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::string bits;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    bits += t;
  }
  try {
    return BinaryString::parse(bits);
  } catch (const InvalidArgument& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

resources::KRule parse_k_rule(const std::string& spec, const ProtocolParams& params) {
  if (spec == "plotted") return resources::plotted_k_rule();
  if (spec == "advantage") return resources::advantage_k_rule(params);
  if (spec.starts_with("const:")) {
    const double k = parse_double(spec.substr(6), "k rule");
    if (!(k >= 2.0)) throw ConfigError("constant k rule needs k >= 2");
    return resources::constant_k_rule(k);
  }
  throw ConfigError("unknown k rule '" + spec + "' (expected plotted|advantage|const:<k>)");
}

std::vector<double> parse_n_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    double n = 0.0;
    if (t.starts_with("2^")) {
      n = std::exp2(parse_double(t.substr(2), "n list"));
    } else {
      n = parse_double(t, "n list");
    }
    if (!(n >= 1.0)) throw ConfigError("input sizes must be at least 1");
    out.push_back(n);
  }
  if (out.empty()) throw ConfigError("n list is empty");
  return out;
}

std::string_view to_string(InputSource source) {
  switch (source) {
    case InputSource::kRandom:
      return "random";
    case InputSource::kVectorFiles:
      return "vector-files";
    case InputSource::kBitFiles:
      return "bit-files";
  }
  return "unknown";
}

InputSource parse_input_source(std::string_view name) {
  if (name == "random") return InputSource::kRandom;
  if (name == "vector-files") return InputSource::kVectorFiles;
  if (name == "bit-files") return InputSource::kBitFiles;
  throw ConfigError("unknown input source '" + std::string(name) + "' (expected random|vector-files|bit-files)");
}

void validate(const ExperimentConfig& config) {
  try {
    config.params.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (config.trials == 0) throw ConfigError("trials must be at least 1");
  if (config.repetitions && *config.repetitions == 0) throw ConfigError("repetitions must be at least 1");
  if (config.rate_inverse < 2) throw ConfigError("rate_inverse must be at least 2");
  if (config.source != InputSource::kRandom && (config.x_file.empty() || config.y_file.empty())) {
    throw ConfigError("file input needs both x_file and y_file");
  }
  const PhotonBudget budget = photon_budget(config.params);
  if (!budget.valid) {
    throw PhysicsViolation("photon budget mu k / n = " + std::to_string(budget.photons_per_time_unit) +
                           " is not below one photon per time unit");
  }
}

}  // namespace cfp::cli
