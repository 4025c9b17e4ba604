#include "proxpair/day_space.hpp"

#include <cmath>
#include <string>

namespace proxpair {

namespace {

double b_term(int n) {
  // 1/(2n-1) - 1/(2n), in the cancellation-free product form
  return 1.0 / (static_cast<double>(2 * n - 1) * static_cast<double>(2 * n));
}

}  // namespace

double DayCoefficients::b_at(int n) const {
  if (n < 1) throw ArgumentError("DayCoefficients::b_at: n must be >= 1");
  if (n <= n_max) return b[n - 1];
  return b_term(n);
}

double DayCoefficients::c_at(int n) const {
  if (n < 2) throw ArgumentError("DayCoefficients::c_at: n must be >= 2");
  if (n <= n_max) return c[n - 2];
  return std::exp(-b_term(n - 1));
}

double DayCoefficients::product_to(int n) const {
  if (n < 1) throw ArgumentError("DayCoefficients::product_to: n must be >= 1");
  if (n == 1) return 1.0;
  if (n <= n_max) return partial_products[n - 2];
  double log_sum = b_prefix.back();
  for (int i = n_max; i <= n - 1; ++i) log_sum += b_term(i);
  return std::exp(-log_sum);
}

DayCoefficients day_coefficients(int n_max) {
  if (n_max < 2) throw ArgumentError("day_coefficients: n_max must be >= 2");
  DayCoefficients out;
  out.n_max = n_max;
  out.b.resize(n_max);
  out.b_prefix.resize(n_max);
  out.c.resize(n_max - 1);
  out.partial_products.resize(n_max - 1);
  double prefix = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    out.b[n - 1] = b_term(n);
    prefix += out.b[n - 1];
    out.b_prefix[n - 1] = prefix;
  }
  for (int n = 2; n <= n_max; ++n) {
    out.c[n - 2] = std::exp(-out.b[n - 2]);
    // P_n = exp(-sum_{i=1}^{n-1} b_i)
    out.partial_products[n - 2] = std::exp(-out.b_prefix[n - 2]);
  }
  return out;
}

ProximalParallelPair<BlockVector> day_pair(int depth, const SolveOptions& opts) {
  if (depth < 2) throw ArgumentError("day_pair: depth must be >= 2");
  std::vector<BlockVector> generators;
  generators.reserve(depth - 1);
  for (int n = 2; n <= depth; ++n) generators.push_back(BlockVector::unit(depth, n));
  Hull<BlockVector> hull(std::move(generators), ClosureMode::SubSimplex, NormKind::Day);
  return make_parallel_pair(hull, BlockVector::unit(depth, 1), opts);
}

bool day_hull_readout(const BlockVector& x, Side side, double tolerance) {
  const double lead = side == Side::A ? 0.0 : 1.0;
  if (std::abs(x.first_coordinate(1) - lead) > tolerance) return false;
  double sum = 0.0;
  for (int n = 2; n <= x.depth(); ++n) {
    auto block = x.block(n);
    if (block[0] < -tolerance) return false;
    sum += block[0];
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (std::abs(block[i]) > tolerance) return false;
    }
  }
  return sum <= 1.0 + tolerance;
}

RelativeMap<BlockVector> day_example_map(const ProximalParallelPair<BlockVector>& pair,
                                         double domain_tolerance) {
  const int depth = pair.translation.depth();
  auto coeffs = std::make_shared<DayCoefficients>(day_coefficients(std::max(depth, 2)));

  auto apply = [depth, coeffs, domain_tolerance](const LabeledPoint<BlockVector>& point) {
    const BlockVector& x = point.value;
    if (x.depth() != depth) {
      throw StructuralError("day_example_map: truncation depth mismatch");
    }
    if (!day_hull_readout(x, point.side, domain_tolerance)) {
      throw DomainError("day_example_map: input is not in the declared hull (side " +
                        to_string(point.side) + ")");
    }
    BlockVector image(depth);
    image.set_first_coordinate(1, point.side == Side::A ? 1.0 : 0.0);
    if (depth >= 3) {
      const double x2 = x.first_coordinate(2);
      image.set_first_coordinate(3, x2 * x2);
    }
    for (int n = 3; n + 1 <= depth; ++n) {
      image.set_first_coordinate(n + 1, coeffs->c_at(n - 1) * x.first_coordinate(n));
    }
    return LabeledPoint<BlockVector>{std::move(image), opposite(point.side)};
  };

  auto k_bound = [coeffs](int n) { return n <= 1 ? 2.0 : 2.0 * coeffs->product_to(n); };

  return RelativeMap<BlockVector>(MapMode::Swap, pair, std::move(apply), std::move(k_bound));
}

}  // namespace proxpair
