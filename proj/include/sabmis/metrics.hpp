#pragma once

#include <array>
#include <cstdint>

#include "sabmis/image.hpp"

namespace sabmis {

// Stabilized SSIM parameters: 11x11 Gaussian window (sigma 1.5) normalized
// to unit mass, stored as the separable 1-D kernel.
struct SsimParams {
  Eigen::VectorXd kernel;  // length 11, sums to 1 together with itself
  double C1 = (0.01 * 255.0) * (0.01 * 255.0);
  double C2 = (0.03 * 255.0) * (0.03 * 255.0);

  static SsimParams defaults();
  Eigen::MatrixXd window() const { return kernel * kernel.transpose(); }
};

double mse(const GrayImage& a, const GrayImage& b);
double mse_real(const RealImage& a, const RealImage& b);

// 10*log10(255^2 / mse); identical inputs return +infinity (the sentinel),
// never an overflow.
double psnr(const GrayImage& a, const GrayImage& b);
double psnr_real(const RealImage& a, const RealImage& b);

// Mean SSIM over every fully-interior 11x11 window, stride 1. Requires both
// dimensions >= 11.
double mssim(const GrayImage& a, const GrayImage& b,
             const SsimParams& params = SsimParams::defaults());

// Normalized cross-correlation per the asymmetric definition
// sum(a*b) / sum(a^2); the first argument is the reference.
double ncc(const GrayImage& a, const GrayImage& b);

// Shannon entropy (bits) of the 256-bin pixel histogram.
double entropy(const GrayImage& img);

// Normalized absolute error sum|a-b| / sum(a); the first argument is the
// reference.
double nae(const GrayImage& a, const GrayImage& b);

std::array<std::uint64_t, 256> histogram256(const GrayImage& img);

// Sobel gradient magnitude binarized with Otsu's threshold; returns a 0/255
// edge map of the same dimensions (1-pixel border is non-edge).
GrayImage sobel_edges_otsu(const GrayImage& img);

}  // namespace sabmis
