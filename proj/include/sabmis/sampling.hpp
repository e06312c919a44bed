#pragma once

#include <array>
#include <stdexcept>

#include "sabmis/image.hpp"

namespace sabmis {

// The four parity sub-images of an even-sided square image, in the fixed
// order: (even row, even col), (odd row, even col), (even row, odd col),
// (odd row, odd col) — 0-based; equivalently the (odd, odd), (even, odd),
// (odd, even), (even, even) quadrants of the 1-based definition.
template <class Scalar>
using SubImages = std::array<Image<Scalar>, 4>;

template <class Derived>
SubImages<typename Derived::Scalar> subsample(const Eigen::MatrixBase<Derived>& img) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index r = img.rows();
  if (r != img.cols()) throw std::invalid_argument("subsample: image must be square");
  if (r < 2 || r % 2 != 0)
    throw std::invalid_argument("subsample: side must be even and positive");
  const Eigen::Index h = r / 2;
  SubImages<Scalar> parts;
  for (auto& p : parts) p.resize(h, h);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < h; ++j) {
      parts[0](i, j) = img(2 * i, 2 * j);
      parts[1](i, j) = img(2 * i + 1, 2 * j);
      parts[2](i, j) = img(2 * i, 2 * j + 1);
      parts[3](i, j) = img(2 * i + 1, 2 * j + 1);
    }
  }
  return parts;
}

template <class Scalar>
Image<Scalar> inverse_sample(const SubImages<Scalar>& parts) {
  const Eigen::Index h = parts[0].rows();
  for (const auto& p : parts)
    if (p.rows() != h || p.cols() != h)
      throw std::invalid_argument("inverse_sample: parts must be square and equal-sized");
  Image<Scalar> img(2 * h, 2 * h);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < h; ++j) {
      img(2 * i, 2 * j) = parts[0](i, j);
      img(2 * i + 1, 2 * j) = parts[1](i, j);
      img(2 * i, 2 * j + 1) = parts[2](i, j);
      img(2 * i + 1, 2 * j + 1) = parts[3](i, j);
    }
  }
  return img;
}

}  // namespace sabmis
