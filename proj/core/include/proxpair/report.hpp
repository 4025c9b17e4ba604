#ifndef PROXPAIR_REPORT_HPP
#define PROXPAIR_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "proxpair/block_vector.hpp"
#include "proxpair/norms.hpp"
#include "proxpair/sampling.hpp"

namespace proxpair {

enum class Verdict { HoldsOnSamples, Violated, Inconclusive };

std::string to_string(Verdict verdict);

/// Outcome of a sampled property check. Serializes to JSON with exactly the
/// fields (property, verdict, max_violation, witness, samples, seed); the
/// trend members are diagnostic extras for inconclusive verdicts and stay off
/// the wire.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Inconclusive;
  double max_violation = 0.0;
  nlohmann::json witness;  // null unless violated
  int sample_count = 0;
  std::uint64_t seed = 0;

  std::optional<double> trend_start;
  std::optional<double> trend_end;

  bool violated() const { return verdict == Verdict::Violated; }
};

nlohmann::json to_json(const PropertyReport& report);

/// verdict = Violated iff max_violation > tolerance; the witness is attached
/// only in that case.
PropertyReport finalize_report(std::string property, double max_violation, double tolerance,
                               nlohmann::json witness, int sample_count, std::uint64_t seed);

nlohmann::json vector_json(const FlatVector& v);
nlohmann::json vector_json(const BlockVector& v);

}  // namespace proxpair

#endif  // PROXPAIR_REPORT_HPP
