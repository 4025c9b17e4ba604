#ifndef PROXPAIR_PAIR_HPP
#define PROXPAIR_PAIR_HPP

#include <cmath>
#include <sstream>
#include <utility>

#include "proxpair/hull.hpp"
#include "proxpair/norms.hpp"
#include "proxpair/solver.hpp"

namespace proxpair {

inline constexpr double kPairDistanceTolerance = 1e-7;

/// A pair (A, B) with B = A + h and dist(A, B) attained along h. h = 0 gives
/// the degenerate pair (A, A).
template <class V>
struct ProximalParallelPair {
  Hull<V> first;
  Hull<V> second;
  V translation;
  double distance;

  NormKind norm() const { return first.norm(); }
};

/// Builds (A, A + h), stores d = ||h||, and verifies that the hull-to-hull
/// distance is actually attained along h; geometries where the translate gets
/// closer than ||h|| are rejected.
template <class V>
ProximalParallelPair<V> make_parallel_pair(const Hull<V>& hull, const V& h,
                                           const SolveOptions& opts = {}) {
  if (!same_shape(h, hull.generators().front())) {
    throw StructuralError("make_parallel_pair: translation shape does not match the hull");
  }
  const double translation_norm = norm_eval(h, hull.norm());
  Hull<V> translated = hull.translated(h);
  const auto dist = hull_distance(hull, translated, opts);
  if (!dist.converged) {
    std::ostringstream msg;
    msg << "make_parallel_pair: hull distance solver did not converge (gap " << dist.gap << ")";
    throw ConstructionError(msg.str());
  }
  if (std::abs(dist.distance - translation_norm) > kPairDistanceTolerance) {
    std::ostringstream msg;
    msg << "make_parallel_pair: pair is parallel but distance is not attained along h"
        << " (||h|| = " << translation_norm << ", dist = " << dist.distance << ")";
    throw ConstructionError(msg.str());
  }
  return {hull, std::move(translated), h, translation_norm};
}

/// A random Euclidean pair whose translation is orthogonal to the affine hull
/// of the generators: generators live in the first ambient_dim - 1
/// coordinates, h along the last axis.
inline ProximalParallelPair<FlatVector> make_orthogonal_euclidean_pair(
    int ambient_dim, int generator_count, double height, Sampler& sampler,
    ClosureMode mode = ClosureMode::Simplex) {
  if (ambient_dim < 2) throw ArgumentError("make_orthogonal_euclidean_pair: need dimension >= 2");
  if (generator_count < 1) {
    throw ArgumentError("make_orthogonal_euclidean_pair: need at least one generator");
  }
  std::vector<FlatVector> generators;
  generators.reserve(generator_count);
  for (int g = 0; g < generator_count; ++g) {
    FlatVector v(ambient_dim, 0.0);
    for (int i = 0; i + 1 < ambient_dim; ++i) v[i] = sampler.uniform(-1.0, 1.0);
    generators.push_back(std::move(v));
  }
  FlatVector h(ambient_dim, 0.0);
  h.back() = height;
  Hull<FlatVector> hull(std::move(generators), mode, NormKind::Euclidean);
  return make_parallel_pair(hull, h);
}

}  // namespace proxpair

#endif  // PROXPAIR_PAIR_HPP
