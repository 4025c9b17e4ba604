#ifndef PROXPAIR_RELATIVE_MAP_HPP
#define PROXPAIR_RELATIVE_MAP_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "proxpair/errors.hpp"
#include "proxpair/pair.hpp"
#include "proxpair/sampling.hpp"

namespace proxpair {

enum class Side { A, B };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
inline std::string to_string(Side s) { return s == Side::A ? "A" : "B"; }

template <class V>
struct LabeledPoint {
  V value;
  Side side;
};

enum class MapMode { Swap, Preserve };

/// A map on A u B together with its declared asymptotic constants k_n.
/// Swap mode sends each side to the other; Preserve keeps sides. Every
/// application checks that the produced side tag honors the mode.
template <class V>
class RelativeMap {
 public:
  using ApplyFn = std::function<LabeledPoint<V>(const LabeledPoint<V>&)>;
  using KBoundFn = std::function<double(int)>;

  RelativeMap(MapMode mode, ProximalParallelPair<V> pair, ApplyFn apply, KBoundFn k_bound)
      : mode_(mode),
        pair_(std::make_shared<ProximalParallelPair<V>>(std::move(pair))),
        apply_(std::move(apply)),
        k_bound_(std::move(k_bound)) {
    for (int n : {1, 2, 4, 8}) {
      if (k_bound_(n) < 1.0) {
        throw ArgumentError("RelativeMap: k_bound must stay >= 1 (violated at n = " +
                            std::to_string(n) + ")");
      }
    }
  }

  MapMode mode() const { return mode_; }
  const ProximalParallelPair<V>& pair() const { return *pair_; }
  double k_bound(int n) const {
    if (n < 1) throw ArgumentError("k_bound: n must be >= 1");
    return k_bound_(n);
  }

  LabeledPoint<V> apply(const LabeledPoint<V>& point) const {
    LabeledPoint<V> image = apply_(point);
    const Side expected = mode_ == MapMode::Swap ? opposite(point.side) : point.side;
    if (image.side != expected) {
      throw StructuralError("RelativeMap: image side tag violates the map mode");
    }
    return image;
  }

  LabeledPoint<V> operator()(const LabeledPoint<V>& point) const { return apply(point); }

 private:
  MapMode mode_;
  std::shared_ptr<ProximalParallelPair<V>> pair_;
  ApplyFn apply_;
  KBoundFn k_bound_;
};

/// n-fold application T^n.
template <class V>
LabeledPoint<V> iterate_map(const RelativeMap<V>& map, LabeledPoint<V> point, int n) {
  if (n < 1) throw ArgumentError("iterate_map: n must be >= 1");
  for (int i = 0; i < n; ++i) point = map.apply(point);
  return point;
}

/// S = T o T: a Preserve-mode map whose constants at n are T's at 2n.
template <class V>
RelativeMap<V> squared_map_preserve(const RelativeMap<V>& map) {
  if (map.mode() != MapMode::Swap) {
    throw ArgumentError("squared_map_preserve: map must be in Swap mode");
  }
  return RelativeMap<V>(
      MapMode::Preserve, map.pair(),
      [map](const LabeledPoint<V>& p) { return map.apply(map.apply(p)); },
      [map](int n) { return map.k_bound(2 * n); });
}

/// Empirical asymptotic constants: the max over sampled (x, y) in A x B of
/// ||T^n x - T^n y|| / ||x - y||, reported for every n = 1..n_max in one
/// pass over the sampled orbit pairs.
template <class V>
std::vector<double> estimate_asymptotic_constants(const RelativeMap<V>& map, int n_max,
                                                  int sample_count,
                                                  std::uint64_t seed = kDefaultSeed) {
  if (n_max < 1) throw ArgumentError("estimate_asymptotic_constants: n_max must be >= 1");
  if (sample_count < 1) {
    throw ArgumentError("estimate_asymptotic_constants: sample_count must be >= 1");
  }
  constexpr double kDegenerate = 1e-6;
  Sampler sampler(seed);
  const auto& pair = map.pair();
  const NormKind kind = pair.norm();
  std::vector<double> ratios(n_max, 0.0);
  int usable = 0;
  for (int s = 0; s < sample_count; ++s) {
    LabeledPoint<V> x{sample_hull_point(pair.first, sampler).value, Side::A};
    LabeledPoint<V> y{sample_hull_point(pair.second, sampler).value, Side::B};
    const double denom = norm_eval(sub(x.value, y.value), kind);
    if (denom <= kDegenerate) continue;
    ++usable;
    for (int n = 1; n <= n_max; ++n) {
      x = map.apply(x);
      y = map.apply(y);
      const double numer = norm_eval(sub(x.value, y.value), kind);
      ratios[n - 1] = std::max(ratios[n - 1], numer / denom);
    }
  }
  if (usable == 0) {
    throw ArgumentError("estimate_asymptotic_constants: all sampled pairs were degenerate");
  }
  return ratios;
}

/// The sampled ratio for a single power n.
template <class V>
double estimate_asymptotic_constant(const RelativeMap<V>& map, int n, int sample_count,
                                    std::uint64_t seed = kDefaultSeed) {
  return estimate_asymptotic_constants(map, n, sample_count, seed).back();
}

}  // namespace proxpair

#endif  // PROXPAIR_RELATIVE_MAP_HPP
