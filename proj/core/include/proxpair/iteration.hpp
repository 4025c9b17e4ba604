#ifndef PROXPAIR_ITERATION_HPP
#define PROXPAIR_ITERATION_HPP

#include <cmath>
#include <string>
#include <vector>

#include "proxpair/relative_map.hpp"

namespace proxpair {

/// Orbit of the alternating-start iteration
///   u_n(x) = T^n(x') for odd n,  T^n(x) for even n,
/// where x' is the proximal counterpart of x (x + h on side A, x - h on
/// side B). Odd powers applied to the counterpart land back on x's side, so
/// every u_n(x) carries the start's side tag.
template <class V>
struct IterationTrace {
  LabeledPoint<V> start;
  std::vector<LabeledPoint<V>> points;  // u_1 .. u_H
  std::vector<double> residuals;        // ||u_n - T(u_n)|| - d
  std::vector<double> gaps;             // ||u_n(x) + h - u_n(x')|| (sign per side)
  int horizon = 0;

  const LabeledPoint<V>& at(int n) const { return points.at(n - 1); }
};

/// The proximal counterpart x' with ||x - x'|| = d, forced by parallelism.
template <class V>
LabeledPoint<V> proximal_counterpart(const ProximalParallelPair<V>& pair,
                                     const LabeledPoint<V>& point) {
  V moved = point.side == Side::A ? add(point.value, pair.translation)
                                  : sub(point.value, pair.translation);
  return {std::move(moved), opposite(point.side)};
}

/// Runs the u_n iteration to the given horizon, recording best-proximity
/// residuals and the cross-orbit gap sequence whose decay witnesses property
/// UC.
template <class V>
IterationTrace<V> run_u_sequence(const RelativeMap<V>& map, const LabeledPoint<V>& start,
                                 int horizon) {
  if (map.mode() != MapMode::Swap) {
    throw ArgumentError("run_u_sequence: map must be in Swap mode");
  }
  if (horizon < 1) throw ArgumentError("run_u_sequence: horizon must be >= 1");

  const auto& pair = map.pair();
  const NormKind kind = pair.norm();
  const LabeledPoint<V> counterpart = proximal_counterpart(pair, start);

  // two plain orbits cover every u_n: odd n reads the counterpart orbit and
  // even n the start orbit; one extra step supplies T(u_H)
  std::vector<LabeledPoint<V>> orbit_start{start};
  std::vector<LabeledPoint<V>> orbit_counter{counterpart};
  orbit_start.reserve(horizon + 2);
  orbit_counter.reserve(horizon + 2);
  for (int k = 0; k <= horizon; ++k) {
    orbit_start.push_back(map.apply(orbit_start.back()));
    orbit_counter.push_back(map.apply(orbit_counter.back()));
  }

  IterationTrace<V> trace;
  trace.start = start;
  trace.horizon = horizon;
  trace.points.reserve(horizon);
  trace.residuals.reserve(horizon);
  trace.gaps.reserve(horizon);

  const double sign = start.side == Side::A ? 1.0 : -1.0;
  for (int n = 1; n <= horizon; ++n) {
    const bool odd = n % 2 == 1;
    const LabeledPoint<V>& u_n = odd ? orbit_counter[n] : orbit_start[n];
    const LabeledPoint<V>& t_u_n = odd ? orbit_counter[n + 1] : orbit_start[n + 1];
    trace.residuals.push_back(norm_eval(sub(u_n.value, t_u_n.value), kind) - pair.distance);
    // u_n of the counterpart swaps the orbit roles
    const LabeledPoint<V>& u_n_counter = odd ? orbit_start[n] : orbit_counter[n];
    V gap_vec = sub(u_n.value, u_n_counter.value);
    add_scaled_in_place(gap_vec, pair.translation, sign);
    trace.gaps.push_back(norm_eval(gap_vec, kind));
    trace.points.push_back(u_n);
  }
  return trace;
}

/// ||x - Tx|| - d; zero certifies x as a best proximity point.
template <class V>
double best_proximity_residual(const RelativeMap<V>& map, const LabeledPoint<V>& point) {
  const auto image = map.apply(point);
  return norm_eval(sub(point.value, image.value), map.pair().norm()) - map.pair().distance;
}

/// Finite-horizon limsup of distances from the orbit u_n(x) to a fixed
/// target: the max over the trailing window.
template <class V>
struct RadiusEstimate {
  double value = 0.0;
  int window = 0;
  int horizon = 0;
  LabeledPoint<V> target;
};

template <class V>
RadiusEstimate<V> estimate_radius(const RelativeMap<V>& map, const LabeledPoint<V>& start,
                                  const LabeledPoint<V>& target, int horizon, int window) {
  if (horizon < 1 || window < 1 || window > horizon) {
    throw ArgumentError("estimate_radius: need horizon >= window >= 1");
  }
  if (target.side == start.side) {
    throw ArgumentError("estimate_radius: target must sit on the opposite side of the start");
  }
  const auto trace = run_u_sequence(map, start, horizon);
  const NormKind kind = map.pair().norm();
  double value = 0.0;
  for (int n = horizon - window + 1; n <= horizon; ++n) {
    value = std::max(value, norm_eval(sub(trace.at(n).value, target.value), kind));
  }
  return {value, window, horizon, target};
}

/// Both finite-horizon radius estimates r_x(y + h) and r_{y+h}(x) and their
/// absolute gap. The underlying identity holds on minimal pairs, so a
/// nonzero gap is diagnostic output, not a failure.
struct RadiusSymmetryDiagnostic {
  double r_xy = 0.0;
  double r_yx = 0.0;
  double gap = 0.0;
};

template <class V>
RadiusSymmetryDiagnostic radius_symmetry_diagnostic(const RelativeMap<V>& map, const V& x,
                                                    const V& y, int horizon, int window) {
  const auto& pair = map.pair();
  const LabeledPoint<V> x_a{x, Side::A};
  const LabeledPoint<V> y_b{add(y, pair.translation), Side::B};
  const double r_xy = estimate_radius(map, x_a, y_b, horizon, window).value;
  const double r_yx = estimate_radius(map, y_b, x_a, horizon, window).value;
  return {r_xy, r_yx, std::abs(r_xy - r_yx)};
}

/// Outcome of iterating a Preserve-mode map from x and from x + h.
template <class V>
struct PreserveExperiment {
  LabeledPoint<V> fixed_a;
  LabeledPoint<V> fixed_b;
  double residual_a = 0.0;  // ||S a* - a*||
  double residual_b = 0.0;  // ||S b* - b*||
  double pair_distance = 0.0;
  bool converged = false;
};

/// Iterates S on x and on its proximal counterpart for the horizon and
/// reports final iterates, their fixed-point residuals, and mutual distance.
/// Non-convergence is reported, not thrown.
template <class V>
PreserveExperiment<V> run_preserve_experiment(const RelativeMap<V>& map,
                                              const LabeledPoint<V>& start, int horizon,
                                              double tolerance = 1e-6) {
  if (map.mode() != MapMode::Preserve) {
    throw ArgumentError("run_preserve_experiment: map must be in Preserve mode");
  }
  if (horizon < 1) throw ArgumentError("run_preserve_experiment: horizon must be >= 1");
  const auto& pair = map.pair();
  const NormKind kind = pair.norm();

  LabeledPoint<V> a = start;
  LabeledPoint<V> b = proximal_counterpart(pair, start);
  for (int k = 0; k < horizon; ++k) {
    a = map.apply(a);
    b = map.apply(b);
  }
  PreserveExperiment<V> out{a, b};
  out.residual_a = norm_eval(sub(map.apply(a).value, a.value), kind);
  out.residual_b = norm_eval(sub(map.apply(b).value, b.value), kind);
  out.pair_distance = norm_eval(sub(a.value, b.value), kind);
  out.converged = out.residual_a <= tolerance && out.residual_b <= tolerance &&
                  std::abs(out.pair_distance - pair.distance) <= tolerance;
  return out;
}

}  // namespace proxpair

#endif  // PROXPAIR_ITERATION_HPP
