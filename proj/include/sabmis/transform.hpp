#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sabmis/image.hpp"

namespace sabmis {

// Orthonormal DCT-II basis matrix C of size n x n:
//   C(0, j) = sqrt(1/n)
//   C(k, j) = sqrt(2/n) * cos(pi * (2j + 1) * k / (2n)),  k >= 1
// C is unitary, so the 2-D transform is dct2(X) = C * X * C^T and its exact
// inverse is idct2(Y) = C^T * Y * C.
template <class Scalar = double>
Image<Scalar> dct_basis(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("dct_basis: side must be positive");
  Image<Scalar> c(n, n);
  const Scalar norm0 = std::sqrt(Scalar(1) / Scalar(n));
  const Scalar norm = std::sqrt(Scalar(2) / Scalar(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (k == 0) {
        c(k, j) = norm0;
      } else {
        c(k, j) = norm * std::cos(std::numbers::pi_v<Scalar> * Scalar(2 * j + 1) *
                                  Scalar(k) / Scalar(2 * n));
      }
    }
  }
  return c;
}

template <class Derived>
Image<typename Derived::Scalar> dct2(const Eigen::MatrixBase<Derived>& block) {
  using Scalar = typename Derived::Scalar;
  if (block.rows() != block.cols())
    throw std::invalid_argument("dct2: block must be square");
  const Image<Scalar> c = dct_basis<Scalar>(block.rows());
  return c * block * c.transpose();
}

template <class Derived>
Image<typename Derived::Scalar> idct2(const Eigen::MatrixBase<Derived>& block) {
  using Scalar = typename Derived::Scalar;
  if (block.rows() != block.cols())
    throw std::invalid_argument("idct2: block must be square");
  const Image<Scalar> c = dct_basis<Scalar>(block.rows());
  return c.transpose() * block * c;
}

// Splits an image into side x side tiles, emitted column-major over the tile
// grid: all tiles of the first tile-column top to bottom, then the next
// tile-column, and so on. Embedding and extraction both rely on this order.
template <class Derived>
std::vector<Image<typename Derived::Scalar>> partition_blocks(
    const Eigen::MatrixBase<Derived>& img, Eigen::Index side) {
  using Scalar = typename Derived::Scalar;
  if (side < 1 || img.rows() % side != 0 || img.cols() % side != 0)
    throw std::invalid_argument("partition_blocks: side must divide both dimensions");
  const Eigen::Index grid_rows = img.rows() / side;
  const Eigen::Index grid_cols = img.cols() / side;
  std::vector<Image<Scalar>> blocks;
  blocks.reserve(static_cast<size_t>(grid_rows * grid_cols));
  for (Eigen::Index bj = 0; bj < grid_cols; ++bj)
    for (Eigen::Index bi = 0; bi < grid_rows; ++bi)
      blocks.emplace_back(img.block(bi * side, bj * side, side, side));
  return blocks;
}

template <class Scalar>
Image<Scalar> assemble_blocks(const std::vector<Image<Scalar>>& blocks,
                              Eigen::Index width, Eigen::Index height) {
  if (blocks.empty()) throw std::invalid_argument("assemble_blocks: no blocks");
  const Eigen::Index side = blocks.front().rows();
  if (side < 1 || blocks.front().cols() != side)
    throw std::invalid_argument("assemble_blocks: blocks must be square");
  if (height % side != 0 || width % side != 0 ||
      static_cast<Eigen::Index>(blocks.size()) * side * side != width * height)
    throw std::invalid_argument("assemble_blocks: block count does not match dimensions");
  const Eigen::Index grid_rows = height / side;
  Image<Scalar> img(height, width);
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].rows() != side || blocks[k].cols() != side)
      throw std::invalid_argument("assemble_blocks: inconsistent block sizes");
    const Eigen::Index bi = static_cast<Eigen::Index>(k) % grid_rows;
    const Eigen::Index bj = static_cast<Eigen::Index>(k) / grid_rows;
    img.block(bi * side, bj * side, side, side) = blocks[k];
  }
  return img;
}

// Zig-zag scan order for an n x n block: anti-diagonal serpentine starting
// rightward from the top-left corner. Returns the permutation as row-major
// linear indices, position k in the scan -> order[k] in the block.
inline std::vector<Eigen::Index> zigzag_order(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("zigzag_order: side must be positive");
  std::vector<Eigen::Index> order;
  order.reserve(static_cast<size_t>(n * n));
  for (Eigen::Index d = 0; d < 2 * n - 1; ++d) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, d - n + 1);
    const Eigen::Index hi = std::min<Eigen::Index>(d, n - 1);
    if (d % 2 == 1) {
      for (Eigen::Index i = lo; i <= hi; ++i) order.push_back(i * n + (d - i));
    } else {
      for (Eigen::Index i = hi; i >= lo; --i) order.push_back(i * n + (d - i));
    }
  }
  return order;
}

template <class Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> zigzag(
    const Eigen::MatrixBase<Derived>& block) {
  using Scalar = typename Derived::Scalar;
  if (block.rows() != block.cols())
    throw std::invalid_argument("zigzag: block must be square");
  const Eigen::Index n = block.rows();
  const auto order = zigzag_order(n);
  Eigen::Vector<Scalar, Eigen::Dynamic> vec(n * n);
  for (Eigen::Index k = 0; k < n * n; ++k)
    vec(k) = block(order[k] / n, order[k] % n);
  return vec;
}

template <class Derived>
Image<typename Derived::Scalar> inverse_zigzag(const Eigen::MatrixBase<Derived>& vec) {
  using Scalar = typename Derived::Scalar;
  if (vec.cols() != 1) throw std::invalid_argument("inverse_zigzag: expected a vector");
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(vec.rows()))));
  if (n * n != vec.rows())
    throw std::invalid_argument("inverse_zigzag: length is not a perfect square");
  const auto order = zigzag_order(n);
  Image<Scalar> block(n, n);
  for (Eigen::Index k = 0; k < n * n; ++k)
    block(order[k] / n, order[k] % n) = vec(k);
  return block;
}

// Head/tail split of a zig-zag vector: head = first p1 entries (the
// low-frequency, large-magnitude group), tail = the rest, with p1 <= tail
// length. Concatenation restores the input.
template <class Derived>
std::pair<Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic>,
          Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic>>
split(const Eigen::MatrixBase<Derived>& vec, Eigen::Index p1) {
  if (vec.cols() != 1) throw std::invalid_argument("split: expected a vector");
  const Eigen::Index len = vec.rows();
  if (p1 < 0 || p1 > len - p1)
    throw std::invalid_argument("split: require 0 <= p1 <= len - p1");
  return {vec.head(p1), vec.tail(len - p1)};
}

}  // namespace sabmis
