#ifndef PROXPAIR_PROPERTIES_HPP
#define PROXPAIR_PROPERTIES_HPP

#include <cmath>
#include <span>
#include <vector>

#include "proxpair/pair.hpp"
#include "proxpair/report.hpp"
#include "proxpair/sampling.hpp"
#include "proxpair/solver.hpp"

namespace proxpair {

struct CheckOptions {
  int sample_count = 1000;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = kDefaultTolerance;
};

/// Nearest-point closeness demanded of sharp pairs, and the band around d
/// within which a second hull point counts as "also nearest".
inline constexpr double kSharpnessCloseness = 1e-6;
inline constexpr double kSharpnessDistanceBand = 1e-9;

namespace detail {

/// The 1e-6 nearest-point closeness needs value accuracy beyond the default
/// 1e-9 gap: quadratic growth puts the iterate within ~sqrt(2 f gap) of the
/// true projection, so the sharpness checker runs the solver tighter.
inline SolveOptions sharpness_solve_options() {
  SolveOptions opts;
  opts.gap_tolerance = 1e-13;
  return opts;
}

template <class V>
struct NearestScan {
  double worst_violation = 0.0;
  const V* second = nullptr;
  double separation = 0.0;
};

// scan a pool of candidate hull points for a "second nearest" far from q
template <class V>
NearestScan<V> scan_second_nearest(const V& sample, const V& nearest, double distance,
                                   std::span<const V> pool, NormKind kind) {
  NearestScan<V> out;
  for (const V& z : pool) {
    if (norm_eval(sub(sample, z), kind) > distance + kSharpnessDistanceBand) continue;
    const double separation = norm_eval(sub(z, nearest), kind);
    if (separation > kSharpnessCloseness && separation > out.separation) {
      out.second = &z;
      out.separation = separation;
      out.worst_violation = separation;
    }
  }
  return out;
}

}  // namespace detail

/// Uniqueness of nearest points for a general (A, B): every sampled a in A
/// must see a single nearest point of B up to tolerance. Reports the worst
/// offender as witness.
template <class V>
PropertyReport check_sharpness(const Hull<V>& a_hull, const Hull<V>& b_hull,
                               const CheckOptions& opts = {}) {
  if (opts.sample_count < 1) throw ArgumentError("check_sharpness: sample_count must be >= 1");
  Sampler sampler(opts.seed);
  const NormKind kind = a_hull.norm();
  const auto dist = hull_distance(a_hull, b_hull);

  const int pool_size = std::min(opts.sample_count, 256);
  std::vector<V> pool;
  pool.reserve(pool_size);
  for (int i = 0; i < pool_size; ++i) pool.push_back(sample_hull_point(b_hull, sampler).value);

  double max_violation = 0.0;
  nlohmann::json witness;
  for (int i = 0; i < opts.sample_count; ++i) {
    const V a = sample_hull_point(a_hull, sampler).value;
    const auto proj = project_onto_hull(a, b_hull, detail::sharpness_solve_options());
    const auto scan = detail::scan_second_nearest<V>(a, proj.point.value, proj.distance,
                                                     std::span<const V>(pool), kind);
    if (scan.worst_violation > max_violation) {
      max_violation = scan.worst_violation;
      witness = {{"sample", vector_json(a)},
                 {"nearest", vector_json(proj.point.value)},
                 {"second_nearest", vector_json(*scan.second)},
                 {"separation", scan.separation},
                 {"distance", proj.distance}};
    }
    max_violation = std::max(max_violation, std::abs(proj.distance - dist.distance));
  }
  return finalize_report("sharpness", max_violation, kSharpnessCloseness, std::move(witness),
                         opts.sample_count, opts.seed);
}

/// Sharpness for a parallel pair: the nearest point of B to a must be a + h,
/// unique up to tolerance.
template <class V>
PropertyReport check_sharpness(const ProximalParallelPair<V>& pair,
                               const CheckOptions& opts = {}) {
  if (opts.sample_count < 1) throw ArgumentError("check_sharpness: sample_count must be >= 1");
  Sampler sampler(opts.seed);
  const NormKind kind = pair.norm();

  const int pool_size = std::min(opts.sample_count, 256);
  std::vector<V> pool;
  pool.reserve(pool_size);
  for (int i = 0; i < pool_size; ++i) pool.push_back(sample_hull_point(pair.second, sampler).value);

  double max_violation = 0.0;
  nlohmann::json witness;
  for (int i = 0; i < opts.sample_count; ++i) {
    const V a = sample_hull_point(pair.first, sampler).value;
    const V expected = add(a, pair.translation);
    const auto proj = project_onto_hull(a, pair.second, detail::sharpness_solve_options());
    double violation = std::abs(proj.distance - pair.distance);
    violation = std::max(violation, norm_eval(sub(proj.point.value, expected), kind));
    const auto scan =
        detail::scan_second_nearest<V>(a, expected, pair.distance, std::span<const V>(pool), kind);
    violation = std::max(violation, scan.worst_violation);
    if (violation > max_violation) {
      max_violation = violation;
      witness = {{"sample", vector_json(a)},
                 {"nearest", vector_json(proj.point.value)},
                 {"expected", vector_json(expected)},
                 {"distance", proj.distance}};
      if (scan.second != nullptr) {
        witness["second_nearest"] = vector_json(*scan.second);
        witness["separation"] = scan.separation;
      }
    }
  }
  return finalize_report("sharpness", max_violation, kSharpnessCloseness, std::move(witness),
                         opts.sample_count, opts.seed);
}

/// Rectangle property: ||x + h - y|| = ||y + h - x|| over sampled x, y in A.
template <class V>
PropertyReport check_rectangle(const ProximalParallelPair<V>& pair,
                               const CheckOptions& opts = {}) {
  if (opts.sample_count < 1) throw ArgumentError("check_rectangle: sample_count must be >= 1");
  Sampler sampler(opts.seed);
  const NormKind kind = pair.norm();
  double max_violation = 0.0;
  nlohmann::json witness;
  for (int i = 0; i < opts.sample_count; ++i) {
    const V x = sample_hull_point(pair.first, sampler).value;
    const V y = sample_hull_point(pair.first, sampler).value;
    const V forward = add(sub(x, y), pair.translation);
    const V backward = add(sub(y, x), pair.translation);
    const double violation = std::abs(norm_eval(forward, kind) - norm_eval(backward, kind));
    if (violation > max_violation) {
      max_violation = violation;
      witness = {{"x", vector_json(x)}, {"y", vector_json(y)}, {"violation", violation}};
    }
  }
  return finalize_report("rectangle", max_violation, opts.tolerance, std::move(witness),
                         opts.sample_count, opts.seed);
}

/// Quantitative modulus available for a pair, turning the UC limit statement
/// into a per-index inequality. Pythagorean covers pairs whose cross
/// distances satisfy ||x - y||^2 = d^2 + ||x - (y - h)||^2 (the Day pair and
/// Euclidean pairs with h orthogonal to the generators).
enum class UcModulus { None, Pythagorean };

template <class V>
struct UcSequences {
  std::vector<V> xs;  // in A
  std::vector<V> zs;  // in A
  std::vector<V> ys;  // in B
};

/// Sequences x_k, z_k -> t and y_k -> t + h along hull segments, so both
/// cross distances converge to d.
template <class V>
UcSequences<V> sample_uc_sequences(const ProximalParallelPair<V>& pair, int horizon,
                                   Sampler& sampler) {
  if (horizon < 1) throw ArgumentError("sample_uc_sequences: horizon must be >= 1");
  const V t = sample_hull_point(pair.first, sampler).value;
  const V p = sample_hull_point(pair.first, sampler).value;
  const V q = sample_hull_point(pair.first, sampler).value;
  const V r = sample_hull_point(pair.first, sampler).value;
  UcSequences<V> seqs;
  seqs.xs.reserve(horizon);
  seqs.zs.reserve(horizon);
  seqs.ys.reserve(horizon);
  for (int k = 1; k <= horizon; ++k) {
    const double step = 1.0 / k;
    V x = t;
    add_scaled_in_place(x, sub(p, t), step);
    V z = t;
    add_scaled_in_place(z, sub(r, t), step);
    V y = t;
    add_scaled_in_place(y, sub(q, t), step);
    seqs.xs.push_back(std::move(x));
    seqs.zs.push_back(std::move(z));
    seqs.ys.push_back(add(y, pair.translation));
  }
  return seqs;
}

/// Property UC check. With the Pythagorean modulus the inequality
///   ||x_k - z_k|| <= sqrt(||x_k - y_k||^2 - d^2) + sqrt(||z_k - y_k||^2 - d^2)
/// is asserted at every index. Without a modulus the verdict is inconclusive
/// and the report carries the start/horizon gap trend.
template <class V>
PropertyReport check_property_uc(const ProximalParallelPair<V>& pair, std::span<const V> xs,
                                 std::span<const V> zs, std::span<const V> ys, UcModulus modulus,
                                 const CheckOptions& opts = {}) {
  if (xs.size() != zs.size() || xs.size() != ys.size()) {
    throw ArgumentError("check_property_uc: sequences have mismatched lengths");
  }
  if (xs.size() < 10) {
    throw ArgumentError("check_property_uc: horizon must be >= 10, got " +
                        std::to_string(xs.size()));
  }
  const NormKind kind = pair.norm();
  const double d_sq = pair.distance * pair.distance;

  if (modulus == UcModulus::None) {
    PropertyReport report;
    report.property = "property-uc";
    report.verdict = Verdict::Inconclusive;
    report.sample_count = static_cast<int>(xs.size());
    report.seed = opts.seed;
    report.witness = nullptr;
    report.trend_start = norm_eval(sub(xs.front(), zs.front()), kind);
    report.trend_end = norm_eval(sub(xs.back(), zs.back()), kind);
    report.max_violation = *report.trend_end;
    return report;
  }

  double max_violation = 0.0;
  nlohmann::json witness;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double lhs = norm_eval(sub(xs[k], zs[k]), kind);
    const double dx = norm_eval(sub(xs[k], ys[k]), kind);
    const double dz = norm_eval(sub(zs[k], ys[k]), kind);
    const double rhs = std::sqrt(std::max(0.0, dx * dx - d_sq)) +
                       std::sqrt(std::max(0.0, dz * dz - d_sq));
    const double violation = lhs - rhs;
    if (violation > max_violation) {
      max_violation = violation;
      witness = {{"index", k + 1}, {"lhs", lhs}, {"rhs", rhs}};
    }
  }
  return finalize_report("property-uc", max_violation, opts.tolerance, std::move(witness),
                         static_cast<int>(xs.size()), opts.seed);
}

template <class V>
PropertyReport check_property_uc(const ProximalParallelPair<V>& pair, const UcSequences<V>& seqs,
                                 UcModulus modulus, const CheckOptions& opts = {}) {
  return check_property_uc<V>(pair, std::span<const V>(seqs.xs), std::span<const V>(seqs.zs),
                              std::span<const V>(seqs.ys), modulus, opts);
}

/// VI slack tolerated at approximate projections; the solver's stopping gap
/// certifies <z - q, q - p> >= -gap * ||q - p||.
inline constexpr double kVariationalTolerance = 1e-8;

/// Hilbert-space orthogonality of h to differences within A, plus the
/// projection variational inequality at sampled projections. Euclidean pairs
/// only.
PropertyReport check_hilbert_orthogonality(const ProximalParallelPair<FlatVector>& pair,
                                           const CheckOptions& opts = {});

/// Evidence record for the failure of sharp proximality in a non-strictly
/// convex norm: A = {0} against a unit-sphere segment.
struct StrictConvexityDemo {
  Hull<FlatVector> point_set;       // A = {0}
  Hull<FlatVector> segment;         // B, a segment of the unit sphere
  double distance = 0.0;            // hull-to-hull distance (1)
  double max_norm_deviation = 0.0;  // max | ||b|| - 1 | over samples
  PropertyReport sharpness;         // expected verdict: violated
  FlatVector witness_a;             // two nearest points of B to 0 ...
  FlatVector witness_b;
  double witness_separation = 0.0;  // ... at this mutual distance
  bool translation_impossible = false;  // no h can satisfy B = A + h
};

StrictConvexityDemo strict_convexity_demo(NormKind kind, const CheckOptions& opts = {});

}  // namespace proxpair

#endif  // PROXPAIR_PROPERTIES_HPP
