#ifndef PROXPAIR_BLOCK_VECTOR_HPP
#define PROXPAIR_BLOCK_VECTOR_HPP

#include <span>
#include <vector>

#include "proxpair/errors.hpp"

namespace proxpair {

/// An element of the truncated block-sequence space: blocks 1..N, block n
/// living in R^n. Storage is a single flat array with triangular offsets.
/// All arithmetic is blockwise and requires equal truncation depths.
class BlockVector {
 public:
  explicit BlockVector(int truncation_depth = 32);

  /// The vector whose block `block_index` is the first standard basis vector
  /// of R^block_index and whose other blocks vanish.
  static BlockVector unit(int truncation_depth, int block_index);

  int depth() const { return depth_; }
  std::size_t flat_size() const { return data_.size(); }

  std::span<const double> block(int n) const;
  std::span<double> block(int n);

  /// First coordinate of block n; the only coordinate the hull geometry in
  /// this project ever populates.
  double first_coordinate(int n) const;
  void set_first_coordinate(int n, double value);

  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

  /// Copy into a deeper truncation; new blocks are zero.
  BlockVector embedded(int new_depth) const;

  bool same_shape(const BlockVector& other) const { return depth_ == other.depth_; }

  BlockVector& operator+=(const BlockVector& rhs);
  BlockVector& operator-=(const BlockVector& rhs);
  BlockVector& operator*=(double s);

  friend BlockVector operator+(BlockVector lhs, const BlockVector& rhs) { return lhs += rhs; }
  friend BlockVector operator-(BlockVector lhs, const BlockVector& rhs) { return lhs -= rhs; }
  friend BlockVector operator*(BlockVector lhs, double s) { return lhs *= s; }
  friend BlockVector operator*(double s, BlockVector rhs) { return rhs *= s; }

  bool operator==(const BlockVector& rhs) const {
    return depth_ == rhs.depth_ && data_ == rhs.data_;
  }

 private:
  void require_block(int n) const;
  void require_shape(const BlockVector& other) const;

  int depth_;
  std::vector<double> data_;
};

// Generic vector-space interface shared with flat vectors (see norms.hpp).
BlockVector add(const BlockVector& a, const BlockVector& b);
BlockVector sub(const BlockVector& a, const BlockVector& b);
BlockVector scaled(const BlockVector& a, double s);
void add_scaled_in_place(BlockVector& acc, const BlockVector& v, double s);
double dot(const BlockVector& a, const BlockVector& b);
BlockVector zeros_like(const BlockVector& a);
bool same_shape(const BlockVector& a, const BlockVector& b);

}  // namespace proxpair

#endif  // PROXPAIR_BLOCK_VECTOR_HPP
