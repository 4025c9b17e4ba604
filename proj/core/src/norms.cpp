#include "proxpair/norms.hpp"

#include <cmath>
#include <cstdlib>

namespace proxpair {

namespace {

double sign_of(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }

void require_flat_shape(const FlatVector& x, NormKind kind) {
  switch (kind) {
    case NormKind::Day:
      throw StructuralError("norm_eval: Day norm applies to BlockVector, not flat vectors");
    case NormKind::Euclidean:
      if (x.empty()) throw StructuralError("norm_eval: empty vector");
      return;
    case NormKind::SupNorm2D:
    case NormKind::OneNorm2D:
      if (x.size() != 2) {
        throw StructuralError("norm_eval: " + to_string(kind) + " requires exactly 2 entries, got " +
                              std::to_string(x.size()));
      }
      return;
  }
  throw StructuralError("norm_eval: unknown norm kind");
}

}  // namespace

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::Day: return "day";
    case NormKind::Euclidean: return "euclidean";
    case NormKind::SupNorm2D: return "sup-2d";
    case NormKind::OneNorm2D: return "one-2d";
  }
  return "unknown";
}

FlatVector add(const FlatVector& a, const FlatVector& b) {
  if (a.size() != b.size()) throw StructuralError("add: flat vector sizes differ");
  FlatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

FlatVector sub(const FlatVector& a, const FlatVector& b) {
  if (a.size() != b.size()) throw StructuralError("sub: flat vector sizes differ");
  FlatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

FlatVector scaled(const FlatVector& a, double s) {
  FlatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

void add_scaled_in_place(FlatVector& acc, const FlatVector& v, double s) {
  if (acc.size() != v.size()) throw StructuralError("add_scaled_in_place: flat vector sizes differ");
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
}

double dot(const FlatVector& a, const FlatVector& b) {
  if (a.size() != b.size()) throw StructuralError("dot: flat vector sizes differ");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

FlatVector zeros_like(const FlatVector& a) { return FlatVector(a.size(), 0.0); }

bool same_shape(const FlatVector& a, const FlatVector& b) { return a.size() == b.size(); }

double day_norm(const BlockVector& x) {
  double sum_sq = 0.0;
  for (int n = 1; n <= x.depth(); ++n) {
    double block_l1 = 0.0;
    for (double t : x.block(n)) block_l1 += std::abs(t);
    sum_sq += block_l1 * block_l1;
  }
  return std::sqrt(sum_sq);
}

double norm_eval(const BlockVector& x, NormKind kind) {
  if (kind != NormKind::Day) {
    throw StructuralError("norm_eval: BlockVector supports only the Day norm");
  }
  return day_norm(x);
}

double norm_eval(const FlatVector& x, NormKind kind) {
  require_flat_shape(x, kind);
  switch (kind) {
    case NormKind::Euclidean: {
      double acc = 0.0;
      for (double t : x) acc += t * t;
      return std::sqrt(acc);
    }
    case NormKind::SupNorm2D:
      return std::max(std::abs(x[0]), std::abs(x[1]));
    case NormKind::OneNorm2D:
      return std::abs(x[0]) + std::abs(x[1]);
    default:
      throw StructuralError("norm_eval: unsupported norm kind for flat vectors");
  }
}

BlockVector norm_subgradient(const BlockVector& x, NormKind kind) {
  if (kind != NormKind::Day) {
    throw StructuralError("norm_subgradient: BlockVector supports only the Day norm");
  }
  const double total = day_norm(x);
  BlockVector g(x.depth());
  if (total == 0.0) return g;
  for (int n = 1; n <= x.depth(); ++n) {
    auto src = x.block(n);
    double block_l1 = 0.0;
    for (double t : src) block_l1 += std::abs(t);
    if (block_l1 == 0.0) continue;
    const double scale = block_l1 / total;
    auto dst = g.block(n);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = scale * sign_of(src[i]);
  }
  return g;
}

FlatVector norm_subgradient(const FlatVector& x, NormKind kind) {
  require_flat_shape(x, kind);
  FlatVector g(x.size(), 0.0);
  switch (kind) {
    case NormKind::Euclidean: {
      const double total = norm_eval(x, kind);
      if (total == 0.0) return g;
      for (std::size_t i = 0; i < x.size(); ++i) g[i] = x[i] / total;
      return g;
    }
    case NormKind::OneNorm2D:
      g[0] = sign_of(x[0]);
      g[1] = sign_of(x[1]);
      return g;
    case NormKind::SupNorm2D: {
      // ties break toward the lowest index
      const std::size_t j = std::abs(x[0]) >= std::abs(x[1]) ? 0 : 1;
      g[j] = sign_of(x[j]);
      return g;
    }
    default:
      throw StructuralError("norm_subgradient: unsupported norm kind for flat vectors");
  }
}

}  // namespace proxpair
