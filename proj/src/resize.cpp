#include "sabmis/resize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sabmis {
namespace {

// Resamples along the column axis (each row independently); the row axis is
// handled by transposing around this.
RealImage resample_cols(const RealImage& img, Eigen::Index out_cols) {
  const Eigen::Index in_cols = img.cols();
  if (out_cols == in_cols) return img;
  RealImage out(img.rows(), out_cols);
  if (out_cols < in_cols) {
    // Area average: destination pixel j covers the source interval
    // [j*s, (j+1)*s) with s = in/out > 1.
    const double s = static_cast<double>(in_cols) / static_cast<double>(out_cols);
    for (Eigen::Index j = 0; j < out_cols; ++j) {
      const double lo = j * s, hi = (j + 1) * s;
      const Eigen::Index first = static_cast<Eigen::Index>(std::floor(lo));
      const Eigen::Index last =
          std::min<Eigen::Index>(in_cols - 1, static_cast<Eigen::Index>(std::ceil(hi)) - 1);
      for (Eigen::Index i = 0; i < img.rows(); ++i) {
        double acc = 0.0;
        for (Eigen::Index k = first; k <= last; ++k) {
          const double w = std::min<double>(hi, k + 1.0) - std::max<double>(lo, k);
          acc += w * img(i, k);
        }
        out(i, j) = acc / s;
      }
    }
  } else {
    // Bilinear at pixel centers.
    const double s = static_cast<double>(in_cols) / static_cast<double>(out_cols);
    for (Eigen::Index j = 0; j < out_cols; ++j) {
      const double src = (j + 0.5) * s - 0.5;
      const double clamped = std::clamp(src, 0.0, static_cast<double>(in_cols - 1));
      const Eigen::Index j0 = static_cast<Eigen::Index>(std::floor(clamped));
      const Eigen::Index j1 = std::min(j0 + 1, in_cols - 1);
      const double f = clamped - j0;
      for (Eigen::Index i = 0; i < img.rows(); ++i)
        out(i, j) = (1.0 - f) * img(i, j0) + f * img(i, j1);
    }
  }
  return out;
}

}  // namespace

RealImage resample(const RealImage& img, Eigen::Index out_rows, Eigen::Index out_cols) {
  if (out_rows < 1 || out_cols < 1)
    throw std::invalid_argument("resample: output dimensions must be positive");
  const RealImage cols_done = resample_cols(img, out_cols);
  return resample_cols(cols_done.transpose(), out_rows).transpose();
}

GrayImage resize_to(const GrayImage& img, Eigen::Index out_rows, Eigen::Index out_cols) {
  if (img.rows() == out_rows && img.cols() == out_cols) return img;
  return quantize(resample(to_real(img), out_rows, out_cols));
}

}  // namespace sabmis
