#include "proxpair/experiment_config.hpp"

#include "proxpair/errors.hpp"

namespace proxpair {

std::string to_string(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ArgumentError("unknown output format '" + text + "' (expected csv or json)");
}

void ExperimentConfig::validate() const {
  if (truncation_depth < 4) {
    throw ArgumentError("config: truncation depth must be >= 4, got " +
                        std::to_string(truncation_depth));
  }
  if (window < 1 || horizon < window) {
    throw ArgumentError("config: need horizon >= window >= 1, got horizon " +
                        std::to_string(horizon) + ", window " + std::to_string(window));
  }
  if (sample_count < 1) {
    throw ArgumentError("config: sample count must be >= 1, got " +
                        std::to_string(sample_count));
  }
  if (!(tolerance > 0.0)) {
    throw ArgumentError("config: tolerance must be positive");
  }
}

nlohmann::json ExperimentConfig::to_json() const {
  return {{"depth", truncation_depth}, {"horizon", horizon},
          {"window", window},          {"samples", sample_count},
          {"seed", seed},              {"tolerance", tolerance},
          {"format", to_string(format)}};
}

}  // namespace proxpair
