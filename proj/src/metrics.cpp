#include "sabmis/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sabmis {

SsimParams SsimParams::defaults() {
  SsimParams p;
  p.kernel.resize(11);
  const double sigma = 1.5;
  for (int i = 0; i < 11; ++i) {
    const double x = i - 5.0;
    p.kernel(i) = std::exp(-x * x / (2.0 * sigma * sigma));
  }
  p.kernel /= p.kernel.sum();
  return p;
}

namespace {

void require_same_dims(const Eigen::Index ar, const Eigen::Index ac,
                       const Eigen::Index br, const Eigen::Index bc) {
  if (ar != br || ac != bc)
    throw std::invalid_argument("metrics: images must have equal dimensions");
}

double mse_impl(const RealImage& a, const RealImage& b) {
  require_same_dims(a.rows(), a.cols(), b.rows(), b.cols());
  return (a - b).squaredNorm() / static_cast<double>(a.size());
}

double psnr_from_mse(double m) {
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

// Separable "valid" convolution with a symmetric 1-D kernel: rows first,
// then columns; output shrinks by (len-1) in each dimension.
RealImage conv_valid(const RealImage& img, const Eigen::VectorXd& kernel) {
  const Eigen::Index len = kernel.size();
  const Eigen::Index rows = img.rows(), cols = img.cols();
  RealImage tmp(rows, cols - len + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j + len <= cols; ++j) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < len; ++k) acc += img(i, j + k) * kernel(k);
      tmp(i, j) = acc;
    }
  }
  RealImage out(rows - len + 1, tmp.cols());
  for (Eigen::Index j = 0; j < tmp.cols(); ++j) {
    for (Eigen::Index i = 0; i + len <= rows; ++i) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < len; ++k) acc += tmp(i + k, j) * kernel(k);
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

double mse(const GrayImage& a, const GrayImage& b) {
  return mse_impl(to_real(a), to_real(b));
}

double mse_real(const RealImage& a, const RealImage& b) { return mse_impl(a, b); }

double psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

double psnr_real(const RealImage& a, const RealImage& b) {
  return psnr_from_mse(mse_impl(a, b));
}

double mssim(const GrayImage& a, const GrayImage& b, const SsimParams& params) {
  require_same_dims(a.rows(), a.cols(), b.rows(), b.cols());
  const Eigen::Index len = params.kernel.size();
  if (a.rows() < len || a.cols() < len)
    throw std::invalid_argument("mssim: images smaller than the window");

  const RealImage x = to_real(a), y = to_real(b);
  const RealImage mu_x = conv_valid(x, params.kernel);
  const RealImage mu_y = conv_valid(y, params.kernel);
  const RealImage xx = conv_valid(x.cwiseProduct(x), params.kernel);
  const RealImage yy = conv_valid(y.cwiseProduct(y), params.kernel);
  const RealImage xy = conv_valid(x.cwiseProduct(y), params.kernel);

  double acc = 0.0;
  for (Eigen::Index i = 0; i < mu_x.rows(); ++i) {
    for (Eigen::Index j = 0; j < mu_x.cols(); ++j) {
      const double mx = mu_x(i, j), my = mu_y(i, j);
      const double vx = xx(i, j) - mx * mx;
      const double vy = yy(i, j) - my * my;
      const double cxy = xy(i, j) - mx * my;
      const double num = (2.0 * mx * my + params.C1) * (2.0 * cxy + params.C2);
      const double den = (mx * mx + my * my + params.C1) * (vx + vy + params.C2);
      acc += num / den;
    }
  }
  return acc / (static_cast<double>(mu_x.rows()) * mu_x.cols());
}

double ncc(const GrayImage& a, const GrayImage& b) {
  require_same_dims(a.rows(), a.cols(), b.rows(), b.cols());
  const RealImage x = to_real(a), y = to_real(b);
  const double denom = x.squaredNorm();
  if (denom == 0.0) throw std::invalid_argument("ncc: reference image is all zero");
  return x.cwiseProduct(y).sum() / denom;
}

double entropy(const GrayImage& img) {
  const auto hist = histogram256(img);
  const double total = static_cast<double>(img.size());
  double e = 0.0;
  for (const auto count : hist) {
    if (count == 0) continue;
    const double p = count / total;
    e -= p * std::log2(p);
  }
  return e;
}

double nae(const GrayImage& a, const GrayImage& b) {
  require_same_dims(a.rows(), a.cols(), b.rows(), b.cols());
  const RealImage x = to_real(a), y = to_real(b);
  const double denom = x.sum();
  if (denom == 0.0) throw std::invalid_argument("nae: reference image sums to zero");
  return (x - y).cwiseAbs().sum() / denom;
}

std::array<std::uint64_t, 256> histogram256(const GrayImage& img) {
  std::array<std::uint64_t, 256> hist{};
  for (Eigen::Index i = 0; i < img.size(); ++i) ++hist[img.data()[i]];
  return hist;
}

GrayImage sobel_edges_otsu(const GrayImage& img) {
  const Eigen::Index rows = img.rows(), cols = img.cols();
  if (rows < 3 || cols < 3)
    throw std::invalid_argument("sobel_edges_otsu: image must be at least 3x3");
  const RealImage x = to_real(img);
  RealImage mag = RealImage::Zero(rows, cols);
  double max_mag = 0.0;
  for (Eigen::Index i = 1; i + 1 < rows; ++i) {
    for (Eigen::Index j = 1; j + 1 < cols; ++j) {
      const double gx = (x(i - 1, j + 1) + 2.0 * x(i, j + 1) + x(i + 1, j + 1)) -
                        (x(i - 1, j - 1) + 2.0 * x(i, j - 1) + x(i + 1, j - 1));
      const double gy = (x(i + 1, j - 1) + 2.0 * x(i + 1, j) + x(i + 1, j + 1)) -
                        (x(i - 1, j - 1) + 2.0 * x(i - 1, j) + x(i - 1, j + 1));
      const double m = std::sqrt(gx * gx + gy * gy);
      mag(i, j) = m;
      max_mag = std::max(max_mag, m);
    }
  }

  // Scale magnitudes to 0..255, then split the histogram with Otsu's
  // between-class variance criterion.
  GrayImage scaled(rows, cols);
  const double scale = max_mag > 0.0 ? 255.0 / max_mag : 0.0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      scaled(i, j) = quantize_value(mag(i, j) * scale);

  const auto hist = histogram256(scaled);
  const double total = static_cast<double>(scaled.size());
  double sum_all = 0.0;
  for (int v = 0; v < 256; ++v) sum_all += v * static_cast<double>(hist[v]);
  double w0 = 0.0, sum0 = 0.0, best_var = -1.0;
  int threshold = 0;
  for (int v = 0; v < 256; ++v) {
    w0 += static_cast<double>(hist[v]);
    if (w0 == 0.0) continue;
    const double w1 = total - w0;
    if (w1 == 0.0) break;
    sum0 += v * static_cast<double>(hist[v]);
    const double mu0 = sum0 / w0;
    const double mu1 = (sum_all - sum0) / w1;
    const double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (var > best_var) {
      best_var = var;
      threshold = v;
    }
  }

  GrayImage edges(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      edges(i, j) = scaled(i, j) > threshold ? 255 : 0;
  return edges;
}

}  // namespace sabmis
