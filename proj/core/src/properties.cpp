#include "proxpair/properties.hpp"

#include <algorithm>
#include <cmath>

namespace proxpair {

PropertyReport check_hilbert_orthogonality(const ProximalParallelPair<FlatVector>& pair,
                                           const CheckOptions& opts) {
  if (pair.norm() != NormKind::Euclidean) {
    throw ArgumentError("check_hilbert_orthogonality: pair must use the Euclidean norm");
  }
  if (opts.sample_count < 1) {
    throw ArgumentError("check_hilbert_orthogonality: sample_count must be >= 1");
  }
  Sampler sampler(opts.seed);
  const FlatVector& h = pair.translation;
  const double h_norm = norm_eval(h, NormKind::Euclidean);

  PropertyReport report;
  if (h_norm == 0.0) {
    // degenerate pair (A, A): orthogonality holds trivially
    report = finalize_report("hilbert-orthogonality", 0.0, kVariationalTolerance, nullptr,
                             opts.sample_count, opts.seed);
    return report;
  }

  constexpr double kEps = 1e-15;
  double max_violation = 0.0;
  nlohmann::json witness;

  for (int i = 0; i < opts.sample_count; ++i) {
    const FlatVector x = sample_hull_point(pair.first, sampler).value;
    const FlatVector y = sample_hull_point(pair.first, sampler).value;
    const FlatVector diff = sub(y, x);
    const double diff_norm = norm_eval(diff, NormKind::Euclidean);
    const double violation = std::abs(dot(diff, h)) / (diff_norm * h_norm + kEps);
    if (violation > max_violation) {
      max_violation = violation;
      witness = {{"x", vector_json(x)}, {"y", vector_json(y)}, {"cosine", violation}};
    }
  }

  // variational inequality at sampled projections: project perturbed points
  // onto B and test <z - q, q - p> >= -tolerance over hull samples
  const int projection_count = std::max(1, opts.sample_count / 100);
  const int z_per_projection = std::min(100, opts.sample_count);
  for (int i = 0; i < projection_count; ++i) {
    FlatVector p = sample_hull_point(pair.first, sampler).value;
    for (auto& coord : p) coord += sampler.uniform(-1.0, 1.0);
    const auto proj = project_onto_hull(p, pair.second);
    const FlatVector& q = proj.point.value;
    const FlatVector direction = sub(q, p);
    for (int j = 0; j < z_per_projection; ++j) {
      const FlatVector z = sample_hull_point(pair.second, sampler).value;
      const double inner = dot(sub(z, q), direction);
      const double violation = std::max(0.0, -inner);
      if (violation > max_violation) {
        max_violation = violation;
        witness = {{"p", vector_json(p)},
                   {"projection", vector_json(q)},
                   {"z", vector_json(z)},
                   {"inner_product", inner}};
      }
    }
  }
  return finalize_report("hilbert-orthogonality", max_violation, kVariationalTolerance,
                         std::move(witness), opts.sample_count, opts.seed);
}

StrictConvexityDemo strict_convexity_demo(NormKind kind, const CheckOptions& opts) {
  if (kind == NormKind::Euclidean) {
    throw ArgumentError("strict_convexity_demo: norm is strictly convex");
  }
  if (kind != NormKind::SupNorm2D && kind != NormKind::OneNorm2D) {
    throw ArgumentError("strict_convexity_demo: demo needs a 2-D non-strictly-convex norm");
  }

  // a unit-sphere segment the norm keeps flat
  std::vector<FlatVector> endpoints =
      kind == NormKind::SupNorm2D ? std::vector<FlatVector>{{1.0, 0.0}, {1.0, 1.0}}
                                  : std::vector<FlatVector>{{1.0, 0.0}, {0.0, 1.0}};

  Hull<FlatVector> point_set({FlatVector{0.0, 0.0}}, ClosureMode::Simplex, kind);
  Hull<FlatVector> segment(endpoints, ClosureMode::Simplex, kind);

  StrictConvexityDemo demo{point_set, segment, 0.0, 0.0, PropertyReport{}, {}, {}, 0.0, false};
  const auto dist = hull_distance(point_set, segment);
  demo.distance = dist.distance;

  Sampler sampler(opts.seed);
  for (int i = 0; i < opts.sample_count; ++i) {
    const FlatVector b = sample_hull_point(segment, sampler).value;
    demo.max_norm_deviation =
        std::max(demo.max_norm_deviation, std::abs(norm_eval(b, kind) - 1.0));
  }

  demo.sharpness = check_sharpness(point_set, segment, opts);

  demo.witness_a = endpoints[0];
  demo.witness_b = endpoints[1];
  demo.witness_separation = norm_eval(sub(endpoints[0], endpoints[1]), kind);

  // B = A + h would force B to be the singleton {h}
  demo.translation_impossible = demo.witness_separation > opts.tolerance;
  return demo;
}

}  // namespace proxpair
