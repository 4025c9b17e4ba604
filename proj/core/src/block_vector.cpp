#include "proxpair/block_vector.hpp"

#include <string>

namespace proxpair {

namespace {
std::size_t triangular(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }
}  // namespace

BlockVector::BlockVector(int truncation_depth) : depth_(truncation_depth) {
  if (truncation_depth < 1) {
    throw StructuralError("BlockVector: truncation depth must be >= 1, got " +
                          std::to_string(truncation_depth));
  }
  data_.assign(triangular(truncation_depth), 0.0);
}

BlockVector BlockVector::unit(int truncation_depth, int block_index) {
  BlockVector v(truncation_depth);
  v.set_first_coordinate(block_index, 1.0);
  return v;
}

void BlockVector::require_block(int n) const {
  if (n < 1 || n > depth_) {
    throw StructuralError("BlockVector: block index " + std::to_string(n) +
                          " outside 1.." + std::to_string(depth_));
  }
}

void BlockVector::require_shape(const BlockVector& other) const {
  if (depth_ != other.depth_) {
    throw StructuralError("BlockVector: truncation depths differ (" + std::to_string(depth_) +
                          " vs " + std::to_string(other.depth_) + ")");
  }
}

std::span<const double> BlockVector::block(int n) const {
  require_block(n);
  return {data_.data() + triangular(n - 1), static_cast<std::size_t>(n)};
}

std::span<double> BlockVector::block(int n) {
  require_block(n);
  return {data_.data() + triangular(n - 1), static_cast<std::size_t>(n)};
}

double BlockVector::first_coordinate(int n) const {
  require_block(n);
  return data_[triangular(n - 1)];
}

void BlockVector::set_first_coordinate(int n, double value) {
  require_block(n);
  data_[triangular(n - 1)] = value;
}

BlockVector BlockVector::embedded(int new_depth) const {
  if (new_depth < depth_) {
    throw StructuralError("BlockVector::embedded: target depth " + std::to_string(new_depth) +
                          " shallower than " + std::to_string(depth_));
  }
  BlockVector out(new_depth);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i];
  return out;
}

BlockVector& BlockVector::operator+=(const BlockVector& rhs) {
  require_shape(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

BlockVector& BlockVector::operator-=(const BlockVector& rhs) {
  require_shape(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

BlockVector& BlockVector::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

BlockVector add(const BlockVector& a, const BlockVector& b) { return a + b; }
BlockVector sub(const BlockVector& a, const BlockVector& b) { return a - b; }
BlockVector scaled(const BlockVector& a, double s) { return a * s; }

void add_scaled_in_place(BlockVector& acc, const BlockVector& v, double s) {
  if (!acc.same_shape(v)) {
    throw StructuralError("add_scaled_in_place: truncation depths differ");
  }
  auto dst = acc.flat();
  auto src = v.flat();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
}

double dot(const BlockVector& a, const BlockVector& b) {
  if (!a.same_shape(b)) throw StructuralError("dot: truncation depths differ");
  double acc = 0.0;
  auto xa = a.flat();
  auto xb = b.flat();
  for (std::size_t i = 0; i < xa.size(); ++i) acc += xa[i] * xb[i];
  return acc;
}

BlockVector zeros_like(const BlockVector& a) { return BlockVector(a.depth()); }

bool same_shape(const BlockVector& a, const BlockVector& b) { return a.same_shape(b); }

}  // namespace proxpair
