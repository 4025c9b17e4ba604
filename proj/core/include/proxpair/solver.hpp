#ifndef PROXPAIR_SOLVER_HPP
#define PROXPAIR_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "proxpair/hull.hpp"
#include "proxpair/norms.hpp"

namespace proxpair {

/// Conditional-gradient solver controls. The gap tolerance certifies the
/// returned value: best - optimum <= gap whenever the run reports
/// convergence by gap. Checkers that need tighter point accuracy than the
/// defaults pass their own options.
struct SolveOptions {
  int max_iterations = 10000;
  double gap_tolerance = 1e-9;
  /// Stop outright once the objective falls this low; the iterate is then a
  /// membership certificate regardless of the gap.
  double objective_floor = 1e-12;
};

template <class V>
struct ProjectionResult {
  CoefficientPoint<V> point;
  double distance = 0.0;
  /// Conditional-gradient gap at the returned iterate; for all hull points z,
  /// <z - q, g> >= -gap where g is the norm subgradient of (q - p).
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

template <class V>
struct DistanceResult {
  CoefficientPoint<V> first;
  CoefficientPoint<V> second;
  double distance = 0.0;
  double gap = 0.0;
  /// Certified bounds: lower_bound <= dist(h1, h2) <= distance.
  double lower_bound = 0.0;
  int iterations = 0;
  bool converged = false;
};

namespace detail {

// Weights over the oracle vertex view (generators plus base for sub-simplex
// hulls), kept nonnegative with unit sum.
template <class V>
struct SimplexState {
  const Hull<V>* hull;
  std::vector<double> weights;
  V point;

  explicit SimplexState(const Hull<V>& h)
      : hull(&h), weights(h.vertex_count(), 0.0), point(zeros_like(h.vertex(0))) {
    weights[0] = 1.0;
    refresh();
  }

  void refresh() {
    point = scaled(hull->vertex(0), weights[0]);
    for (std::size_t i = 1; i < weights.size(); ++i) {
      if (weights[i] != 0.0) add_scaled_in_place(point, hull->vertex(i), weights[i]);
    }
  }

  void fw_step(std::size_t target, double gamma) {
    for (auto& w : weights) w *= 1.0 - gamma;
    weights[target] += gamma;
    tidy();
  }

  void away_step(std::size_t away, double gamma, double gamma_max) {
    if (gamma >= gamma_max) {
      // drop step: the away vertex leaves the active set exactly
      const double removed = weights[away];
      weights[away] = 0.0;
      const double rescale = 1.0 / (1.0 - removed);
      for (auto& w : weights) w *= rescale;
    } else {
      for (auto& w : weights) w *= 1.0 + gamma;
      weights[away] -= gamma;
    }
    tidy();
  }

  void tidy() {
    double sum = 0.0;
    for (auto& w : weights) {
      if (w < 0.0) w = 0.0;
      sum += w;
    }
    if (sum > 0.0 && std::abs(sum - 1.0) > 1e-15) {
      for (auto& w : weights) w /= sum;
    }
    refresh();
  }

  CoefficientPoint<V> coefficient_point() const {
    // user-facing coefficients cover generators only; the base vertex carries
    // the sub-simplex slack
    const std::size_t n = hull->generators().size();
    return {std::vector<double>(weights.begin(), weights.begin() + n), point};
  }
};

// Exact minimization of gamma -> ||r + gamma * dr|| on [0, gamma_max].
// Euclidean norms (and Day residuals supported on first block coordinates
// only, where the Day norm restricts to a Euclidean one) admit the closed
// form; other cases fall back to ternary search on the convex section.
inline bool day_first_coordinate_support(const BlockVector& v) {
  for (int n = 2; n <= v.depth(); ++n) {
    auto b = v.block(n);
    for (std::size_t i = 1; i < b.size(); ++i) {
      if (b[i] != 0.0) return false;
    }
  }
  return true;
}

inline bool quadratic_line_search_applies(const BlockVector& r, const BlockVector& dr,
                                          NormKind kind) {
  return kind == NormKind::Day && day_first_coordinate_support(r) &&
         day_first_coordinate_support(dr);
}

inline bool quadratic_line_search_applies(const FlatVector&, const FlatVector&, NormKind kind) {
  return kind == NormKind::Euclidean;
}

template <class V>
double line_search(const V& r, const V& dr, NormKind kind, double gamma_max) {
  if (quadratic_line_search_applies(r, dr, kind)) {
    const double dd = dot(dr, dr);
    if (dd == 0.0) return 0.0;
    return std::clamp(-dot(r, dr) / dd, 0.0, gamma_max);
  }
  auto value = [&](double gamma) {
    V probe = r;
    add_scaled_in_place(probe, dr, gamma);
    return norm_eval(probe, kind);
  };
  double lo = 0.0, hi = gamma_max;
  for (int it = 0; it < 120 && hi - lo > 1e-18; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double f1 = value(m1);
    const double f2 = value(m2);
    if (f1 < f2) {
      hi = m2;
    } else if (f2 < f1) {
      lo = m1;
    } else {
      lo = m1;
      hi = m2;
    }
  }
  const double mid = 0.5 * (lo + hi);
  // the section may be flat; never accept an uphill step
  return value(mid) <= value(0.0) ? mid : 0.0;
}

struct BlockScores {
  std::size_t fw_index = 0;
  std::size_t away_index = 0;
  double fw_gap = 0.0;    // <s, w> - min_i s_i
  double away_gap = 0.0;  // max_active s_i - <s, w>
  bool away_valid = false;
};

// Scores s_i = sign * <g, vertex_i>; fw minimizes, away maximizes over the
// active set. Ties break toward the lowest index.
template <class V>
BlockScores score_block(const SimplexState<V>& state, const V& grad, double sign) {
  BlockScores out;
  const std::size_t count = state.weights.size();
  double avg = 0.0;
  double fw_best = 0.0;
  double away_best = 0.0;
  bool fw_set = false;
  for (std::size_t i = 0; i < count; ++i) {
    const double s = sign * dot(grad, state.hull->vertex(i));
    avg += state.weights[i] * s;
    if (!fw_set || s < fw_best) {
      fw_best = s;
      out.fw_index = i;
      fw_set = true;
    }
    if (state.weights[i] > 0.0 && (!out.away_valid || s > away_best)) {
      away_best = s;
      out.away_index = i;
      out.away_valid = true;
    }
  }
  out.fw_gap = avg - fw_best;
  out.away_gap = out.away_valid ? away_best - avg : 0.0;
  return out;
}

template <class V>
struct CgOutcome {
  double distance = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Away-step conditional gradient on ||first - second|| where either side may
// be a hull state or a fixed point. One step per iteration on the block and
// direction with the larger oracle gap.
template <class V>
CgOutcome<V> run_conditional_gradient(SimplexState<V>* a, SimplexState<V>* b, const V* fixed,
                                      NormKind kind, const SolveOptions& opts) {
  CgOutcome<V> out;
  auto residual = [&]() {
    const V& x = a != nullptr ? a->point : *fixed;
    const V& y = b != nullptr ? b->point : *fixed;
    return sub(x, y);
  };

  double best_value = norm_eval(residual(), kind);
  std::vector<double> best_a = a ? a->weights : std::vector<double>{};
  std::vector<double> best_b = b ? b->weights : std::vector<double>{};
  int stagnant = 0;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    out.iterations = iter;
    const V r = residual();
    const double value = norm_eval(r, kind);
    // line search never accepts uphill steps, so the latest iterate ties or
    // beats every earlier one; prefer it so gap-based stops stay consistent
    if (value <= best_value) {
      best_value = value;
      if (a) best_a = a->weights;
      if (b) best_b = b->weights;
    }
    if (value <= opts.objective_floor) {
      out.converged = true;
      break;
    }
    const V grad = norm_subgradient(r, kind);

    std::optional<BlockScores> sa, sb;
    if (a) sa = score_block(*a, grad, +1.0);
    if (b) sb = score_block(*b, grad, -1.0);
    const double total_gap = (sa ? sa->fw_gap : 0.0) + (sb ? sb->fw_gap : 0.0);
    out.gap = total_gap;
    if (total_gap <= opts.gap_tolerance) {
      out.converged = true;
      break;
    }

    // candidate selection: larger oracle gap wins; away only when it beats
    // the FW gap on its own block
    SimplexState<V>* block = nullptr;
    double sign = +1.0;
    const BlockScores* scores = nullptr;
    if (sa && (!sb || sa->fw_gap + sa->away_gap >= sb->fw_gap + sb->away_gap)) {
      block = a;
      sign = +1.0;
      scores = &*sa;
    } else {
      block = b;
      sign = -1.0;
      scores = &*sb;
    }

    const bool use_away = scores->away_valid && scores->away_gap > scores->fw_gap &&
                          block->weights[scores->away_index] < 1.0;
    V dr = zeros_like(r);
    double gamma_max = 1.0;
    if (use_away) {
      // direction point - away_vertex, feasible up to w/(1-w)
      const double w = block->weights[scores->away_index];
      gamma_max = w / (1.0 - w);
      dr = sub(block->point, block->hull->vertex(scores->away_index));
    } else {
      dr = sub(block->hull->vertex(scores->fw_index), block->point);
    }
    if (sign < 0.0) dr = scaled(dr, -1.0);

    const double gamma = line_search(r, dr, kind, gamma_max);
    if (gamma <= 0.0) {
      if (++stagnant >= 64) break;
      // a zero step on one block may still free the other: nudge via pure FW
      // next round by treating this as a no-op iteration
      if (use_away) {
        // retry with the FW direction before declaring stagnation
        V fw_dir = sub(block->hull->vertex(scores->fw_index), block->point);
        if (sign < 0.0) fw_dir = scaled(fw_dir, -1.0);
        const double g2 = line_search(r, fw_dir, kind, 1.0);
        if (g2 > 0.0) {
          block->fw_step(scores->fw_index, g2);
          stagnant = 0;
        }
      }
      continue;
    }
    stagnant = 0;
    if (use_away) {
      block->away_step(scores->away_index, gamma, gamma_max);
    } else {
      block->fw_step(scores->fw_index, gamma);
    }
  }

  if (a) {
    a->weights = best_a;
    a->refresh();
  }
  if (b) {
    b->weights = best_b;
    b->refresh();
  }
  const V r = residual();
  out.distance = norm_eval(r, kind);
  // recertify the gap at the returned iterate
  const V grad = norm_subgradient(r, kind);
  double gap = 0.0;
  if (a) gap += score_block(*a, grad, +1.0).fw_gap;
  if (b) gap += score_block(*b, grad, -1.0).fw_gap;
  out.gap = gap;
  if (!out.converged) {
    out.converged = gap <= opts.gap_tolerance || out.distance <= opts.objective_floor;
  }
  return out;
}

}  // namespace detail

/// Nearest point of the hull to p in the hull's norm, via away-step
/// conditional gradient over the (sub-)simplex. Non-convergence is reported
/// in the result, not thrown: the best iterate and its certified gap come
/// back either way.
template <class V>
ProjectionResult<V> project_onto_hull(const V& p, const Hull<V>& hull,
                                      const SolveOptions& opts = {}) {
  if (!same_shape(p, hull.generators().front())) {
    throw StructuralError("project_onto_hull: point shape does not match the hull");
  }
  detail::SimplexState<V> state(hull);
  auto outcome = detail::run_conditional_gradient<V>(&state, nullptr, &p, hull.norm(), opts);
  ProjectionResult<V> result;
  result.point = state.coefficient_point();
  result.distance = outcome.distance;
  result.gap = outcome.gap;
  result.iterations = outcome.iterations;
  result.converged = outcome.converged;
  return result;
}

/// Minimum distance between two hulls with the minimizing pair, via the same
/// engine over the product of the two (sub-)simplices.
template <class V>
DistanceResult<V> hull_distance(const Hull<V>& h1, const Hull<V>& h2,
                                const SolveOptions& opts = {}) {
  if (h1.norm() != h2.norm()) {
    throw StructuralError("hull_distance: hulls use different norms");
  }
  if (!same_shape(h1.generators().front(), h2.generators().front())) {
    throw StructuralError("hull_distance: hulls live in different spaces");
  }
  detail::SimplexState<V> sa(h1);
  detail::SimplexState<V> sb(h2);
  auto outcome = detail::run_conditional_gradient<V>(&sa, &sb, nullptr, h1.norm(), opts);
  DistanceResult<V> result;
  result.first = sa.coefficient_point();
  result.second = sb.coefficient_point();
  result.distance = outcome.distance;
  result.gap = outcome.gap;
  result.lower_bound = std::max(0.0, outcome.distance - outcome.gap);
  result.iterations = outcome.iterations;
  result.converged = outcome.converged;
  return result;
}

}  // namespace proxpair

#endif  // PROXPAIR_SOLVER_HPP
