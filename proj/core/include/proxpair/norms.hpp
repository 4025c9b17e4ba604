#ifndef PROXPAIR_NORMS_HPP
#define PROXPAIR_NORMS_HPP

#include <span>
#include <string>
#include <vector>

#include "proxpair/block_vector.hpp"
#include "proxpair/errors.hpp"

namespace proxpair {

/// Absolute tolerance used for comparisons when an operation does not state
/// its own.
inline constexpr double kDefaultTolerance = 1e-9;

/// Flat real vectors. Kept distinct from BlockVector on purpose: no implicit
/// conversion in either direction.
using FlatVector = std::vector<double>;

enum class NormKind { Day, Euclidean, SupNorm2D, OneNorm2D };

std::string to_string(NormKind kind);

// Generic vector-space interface for FlatVector (BlockVector overloads live
// in block_vector.hpp).
FlatVector add(const FlatVector& a, const FlatVector& b);
FlatVector sub(const FlatVector& a, const FlatVector& b);
FlatVector scaled(const FlatVector& a, double s);
void add_scaled_in_place(FlatVector& acc, const FlatVector& v, double s);
double dot(const FlatVector& a, const FlatVector& b);
FlatVector zeros_like(const FlatVector& a);
bool same_shape(const FlatVector& a, const FlatVector& b);

/// The square root of the sum of squared block l1-norms.
double day_norm(const BlockVector& x);

/// Norm dispatch. Day requires a BlockVector; the other kinds require flat
/// vectors (SupNorm2D/OneNorm2D additionally require exactly two entries).
double norm_eval(const BlockVector& x, NormKind kind);
double norm_eval(const FlatVector& x, NormKind kind);

/// A subgradient of the norm at x, under the convention sign(0) = 0 and
/// subgradient 0 at the zero vector. Satisfies <g, x> = ||x|| and has dual
/// norm at most 1.
BlockVector norm_subgradient(const BlockVector& x, NormKind kind);
FlatVector norm_subgradient(const FlatVector& x, NormKind kind);

/// Minimum pairwise distance over all unordered distinct pairs.
template <class V>
double sep_of_family(std::span<const V> points, NormKind kind) {
  if (points.size() < 2) {
    throw ArgumentError("sep_of_family: needs at least 2 points, got " +
                        std::to_string(points.size()));
  }
  double best = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dist = norm_eval(sub(points[i], points[j]), kind);
      if (best < 0.0 || dist < best) best = dist;
    }
  }
  return best;
}

template <class V>
double sep_of_family(const std::vector<V>& points, NormKind kind) {
  return sep_of_family(std::span<const V>(points), kind);
}

}  // namespace proxpair

#endif  // PROXPAIR_NORMS_HPP
