#ifndef PROXPAIR_EXPERIMENT_CONFIG_HPP
#define PROXPAIR_EXPERIMENT_CONFIG_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "proxpair/sampling.hpp"

namespace proxpair {

enum class OutputFormat { Csv, Json };

std::string to_string(OutputFormat format);
OutputFormat parse_output_format(const std::string& text);

/// Knobs shared by every experiment and CLI command.
struct ExperimentConfig {
  int truncation_depth = 32;
  int horizon = 400;
  int window = 50;
  int sample_count = 1000;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-9;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  // empty writes to stdout

  /// Throws ArgumentError unless depth >= 4, horizon >= window >= 1,
  /// sample_count >= 1, tolerance > 0.
  void validate() const;

  nlohmann::json to_json() const;
};

}  // namespace proxpair

#endif  // PROXPAIR_EXPERIMENT_CONFIG_HPP
