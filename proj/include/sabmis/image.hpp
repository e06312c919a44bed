#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace sabmis {

// Images are dense Eigen matrices, row-major so that raster order matches
// storage order. GrayImage holds 8-bit pixels; RealImage is the
// floating-point staging representation used between transform and solver
// stages.
template <class Scalar>
using Image = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GrayImage = Image<std::uint8_t>;
using RealImage = Image<double>;

template <class Derived>
RealImage to_real(const Eigen::MatrixBase<Derived>& img) {
  return img.template cast<double>();
}

// Round to nearest integer with ties away from zero, then clamp to [0, 255].
inline std::uint8_t quantize_value(double v) {
  double r = std::llround(v);
  if (r < 0.0) return 0;
  if (r > 255.0) return 255;
  return static_cast<std::uint8_t>(r);
}

template <class Derived>
GrayImage quantize(const Eigen::MatrixBase<Derived>& img) {
  GrayImage out(img.rows(), img.cols());
  for (Eigen::Index i = 0; i < img.rows(); ++i)
    for (Eigen::Index j = 0; j < img.cols(); ++j)
      out(i, j) = quantize_value(static_cast<double>(img(i, j)));
  return out;
}

}  // namespace sabmis
