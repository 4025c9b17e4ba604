#ifndef PROXPAIR_HULL_HPP
#define PROXPAIR_HULL_HPP

#include <span>
#include <string>
#include <vector>

#include "proxpair/errors.hpp"
#include "proxpair/norms.hpp"
#include "proxpair/sampling.hpp"

namespace proxpair {

enum class ClosureMode { Simplex, SubSimplex };

inline std::string to_string(ClosureMode mode) {
  return mode == ClosureMode::Simplex ? "simplex" : "sub-simplex";
}

inline constexpr double kCoefficientTolerance = 1e-12;

/// A convex body given by finite generators.
///
/// Simplex mode: combinations with nonnegative coefficients summing to 1.
/// SubSimplex mode: coefficient sum <= 1; the remaining mass sits on the
/// hull's base point (the origin for freshly built hulls), so the hull also
/// contains the base and all scalings of generators toward it. Translating a
/// hull translates the base along with the generators, which keeps the
/// translate of a sub-simplex hull exact.
template <class V>
class Hull {
 public:
  Hull(std::vector<V> generators, ClosureMode mode, NormKind norm)
      : Hull(std::move(generators), mode, norm, V{}) {
    if (mode_ == ClosureMode::SubSimplex) base_ = zeros_like(generators_.front());
  }

  const std::vector<V>& generators() const { return generators_; }
  ClosureMode closure_mode() const { return mode_; }
  NormKind norm() const { return norm_; }

  /// The point carrying the slack coefficient mass in SubSimplex mode.
  const V& base() const {
    if (mode_ != ClosureMode::SubSimplex) {
      throw StructuralError("Hull::base: only sub-simplex hulls have a base point");
    }
    return base_;
  }

  /// Vertex view used by the linear-minimization oracle: the generators,
  /// plus the base point as a final extra vertex in SubSimplex mode.
  std::size_t vertex_count() const {
    return generators_.size() + (mode_ == ClosureMode::SubSimplex ? 1 : 0);
  }
  const V& vertex(std::size_t k) const {
    return k < generators_.size() ? generators_[k] : base_;
  }

  /// The combination for generator coefficients satisfying the mode
  /// constraint; in SubSimplex mode the slack 1 - sum lands on the base.
  V combine(std::span<const double> coefficients) const {
    V out = mode_ == ClosureMode::SubSimplex
                ? scaled(base_, 1.0 - coefficient_sum(coefficients))
                : zeros_like(generators_.front());
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      add_scaled_in_place(out, generators_[i], coefficients[i]);
    }
    return out;
  }

  Hull translated(const V& h) const {
    std::vector<V> moved;
    moved.reserve(generators_.size());
    for (const auto& g : generators_) moved.push_back(add(g, h));
    V base = mode_ == ClosureMode::SubSimplex ? add(base_, h) : V{};
    return Hull(std::move(moved), mode_, norm_, std::move(base));
  }

 private:
  Hull(std::vector<V> generators, ClosureMode mode, NormKind norm, V base)
      : generators_(std::move(generators)), base_(std::move(base)), mode_(mode), norm_(norm) {
    if (generators_.empty()) throw ArgumentError("Hull: generator list must be nonempty");
    for (const auto& g : generators_) {
      if (!same_shape(g, generators_.front())) {
        throw StructuralError("Hull: generators have mismatched shapes");
      }
    }
  }

  static double coefficient_sum(std::span<const double> coefficients) {
    double sum = 0.0;
    for (double c : coefficients) sum += c;
    return sum;
  }

  std::vector<V> generators_;
  V base_;
  ClosureMode mode_;
  NormKind norm_;
};

/// A hull point that remembers the generator coefficients producing it.
template <class V>
struct CoefficientPoint {
  std::vector<double> coefficients;
  V value;
};

/// Validates the coefficients against the hull's closure mode and returns the
/// combination.
template <class V>
CoefficientPoint<V> hull_point(const Hull<V>& hull, std::span<const double> coefficients) {
  if (coefficients.size() != hull.generators().size()) {
    throw ArgumentError("hull_point: expected " + std::to_string(hull.generators().size()) +
                        " coefficients, got " + std::to_string(coefficients.size()));
  }
  double sum = 0.0;
  for (double c : coefficients) {
    if (c < 0.0) throw ArgumentError("hull_point: negative coefficient " + std::to_string(c));
    sum += c;
  }
  if (hull.closure_mode() == ClosureMode::Simplex) {
    if (std::abs(sum - 1.0) > kCoefficientTolerance) {
      throw ArgumentError("hull_point: simplex coefficients must sum to 1, got sum " +
                          std::to_string(sum));
    }
  } else if (sum > 1.0 + kCoefficientTolerance) {
    throw ArgumentError("hull_point: sub-simplex coefficient sum exceeds 1: " +
                        std::to_string(sum));
  }
  return {std::vector<double>(coefficients.begin(), coefficients.end()),
          hull.combine(coefficients)};
}

template <class V>
CoefficientPoint<V> hull_point(const Hull<V>& hull, const std::vector<double>& coefficients) {
  return hull_point(hull, std::span<const double>(coefficients));
}

/// Coefficients drawn from a symmetric Dirichlet (Simplex) or a Dirichlet
/// scaled by a uniform factor (SubSimplex).
template <class V>
CoefficientPoint<V> sample_hull_point(const Hull<V>& hull, Sampler& sampler) {
  const std::size_t count = hull.generators().size();
  auto coeffs = hull.closure_mode() == ClosureMode::Simplex
                    ? sampler.simplex_coefficients(count)
                    : sampler.sub_simplex_coefficients(count);
  return {coeffs, hull.combine(coeffs)};
}

}  // namespace proxpair

#endif  // PROXPAIR_HULL_HPP
