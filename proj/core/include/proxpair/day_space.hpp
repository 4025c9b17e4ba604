#ifndef PROXPAIR_DAY_SPACE_HPP
#define PROXPAIR_DAY_SPACE_HPP

#include <vector>

#include "proxpair/block_vector.hpp"
#include "proxpair/pair.hpp"
#include "proxpair/relative_map.hpp"

namespace proxpair {

/// Coefficients of the example contraction on the Day pair:
///   b_n = 1/(2n-1) - 1/(2n),   c_{n+1} = exp(-b_n),
/// with partial products P_n = prod_{i=2}^n c_i = exp(-sum_{i<n} b_i)
/// decreasing to 1/2. Products are kept in the log domain.
struct DayCoefficients {
  int n_max;
  std::vector<double> b;                 // b[i] = b_{i+1}, i = 0..n_max-1
  std::vector<double> b_prefix;          // b_prefix[i] = sum_{j<=i} b[j]
  std::vector<double> c;                 // c[i] = c_{i+2}, i = 0..n_max-2
  std::vector<double> partial_products;  // partial_products[i] = P_{i+2}

  double b_at(int n) const;  // b_n, n >= 1
  double c_at(int n) const;  // c_n, n >= 2
  /// P_n for n >= 2; P_1 is interpreted as 1. Values beyond n_max are
  /// computed on demand from the log-domain formula.
  double product_to(int n) const;
};

/// Sequences up to n_max (n_max >= 2).
DayCoefficients day_coefficients(int n_max);

/// The pair A = sub-simplex hull of the unit block vectors for blocks
/// 2..depth, B = A translated by the block-1 unit vector. dist(A, B) = 1,
/// verified against the conditional-gradient solver on construction.
ProximalParallelPair<BlockVector> day_pair(int depth, const SolveOptions& opts = {});

/// The example Swap-mode map on the Day pair: the image flips the first
/// coordinate between 0 and 1, squares coordinate 2 into slot 3, and shifts
/// coordinate n into slot n+1 scaled by c_{n-1}; the coordinate leaving the
/// truncation window is dropped. Declared constants: k_1 = 2, k_n = 2 P_n.
RelativeMap<BlockVector> day_example_map(const ProximalParallelPair<BlockVector>& pair,
                                         double domain_tolerance = kDefaultTolerance);

/// Membership readout used by the example map's domain check: first-block
/// coordinate 0 (A) or 1 (B), nonnegative first coordinates summing to at
/// most 1, nothing anywhere else.
bool day_hull_readout(const BlockVector& x, Side side, double tolerance);

}  // namespace proxpair

#endif  // PROXPAIR_DAY_SPACE_HPP
