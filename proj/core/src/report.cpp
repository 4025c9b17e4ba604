#include "proxpair/report.hpp"

namespace proxpair {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::HoldsOnSamples: return "holds-on-samples";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

nlohmann::json to_json(const PropertyReport& report) {
  return nlohmann::json{{"property", report.property},
                        {"verdict", to_string(report.verdict)},
                        {"max_violation", report.max_violation},
                        {"witness", report.witness},
                        {"samples", report.sample_count},
                        {"seed", report.seed}};
}

PropertyReport finalize_report(std::string property, double max_violation, double tolerance,
                               nlohmann::json witness, int sample_count, std::uint64_t seed) {
  PropertyReport report;
  report.property = std::move(property);
  report.max_violation = max_violation;
  report.sample_count = sample_count;
  report.seed = seed;
  if (max_violation > tolerance) {
    report.verdict = Verdict::Violated;
    report.witness = std::move(witness);
  } else {
    report.verdict = Verdict::HoldsOnSamples;
    report.witness = nullptr;
  }
  return report;
}

nlohmann::json vector_json(const FlatVector& v) { return nlohmann::json(v); }

nlohmann::json vector_json(const BlockVector& v) {
  nlohmann::json blocks = nlohmann::json::array();
  for (int n = 1; n <= v.depth(); ++n) {
    auto b = v.block(n);
    blocks.push_back(std::vector<double>(b.begin(), b.end()));
  }
  return blocks;
}

}  // namespace proxpair
