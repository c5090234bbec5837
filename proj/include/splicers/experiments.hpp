#ifndef SPLICERS_EXPERIMENTS_HPP
#define SPLICERS_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace splicers {

/// Flat "key = value" configuration. Absent keys take per-preset defaults.
struct ExperimentConfig {
  std::string preset;
  std::uint64_t seed = 1;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::size_t> d;
  std::optional<std::size_t> k;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> pairs;
  std::optional<double> failure_prob;
  std::optional<std::string> out_json;
  std::optional<std::string> out_csv;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ParseError on malformed lines, unknown keys or repeated keys.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
/// Keys in a fixed order; doubles in shortest round-trip form.
std::string serialize_config(const ExperimentConfig& config);

const std::vector<std::string_view>& preset_names();

struct PresetResult {
  /// {"preset", "config", "assertions", "estimates", "passed", "metadata"};
  /// everything except "metadata" is a function of the config alone.
  nlohmann::json summary;
  std::string csv;
  bool passed = false;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitUsage = 2;

/// Throws InvalidArgument for an unknown preset or bad parameters.
PresetResult run_preset(const ExperimentConfig& config);

/// Runs the preset, writes out_json / out_csv when set, and maps the outcome
/// to an exit code. Errors are reported on `err`.
int run_preset_to_files(const ExperimentConfig& config, std::ostream& err);

/// The summary without its "metadata" member, dumped with fixed formatting.
std::string deterministic_dump(const nlohmann::json& summary);

}  // namespace splicers

#endif  // SPLICERS_EXPERIMENTS_HPP
