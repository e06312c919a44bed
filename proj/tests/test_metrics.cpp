#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "sabmis/image_io.hpp"
#include "sabmis/metrics.hpp"

using sabmis::GrayImage;
using sabmis::RealImage;

namespace {

// Double-loop reference implementations, deliberately naive.
double mse_reference(const GrayImage& a, const GrayImage& b) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double d = static_cast<double>(a(i, j)) - static_cast<double>(b(i, j));
      acc += d * d;
    }
  return acc / static_cast<double>(a.size());
}

// SSIM of a single window pair, straight from the definition with plain sums.
double ssim_window_reference(const RealImage& x, const RealImage& y,
                             const Eigen::MatrixXd& w, double c1, double c2) {
  double mx = 0.0, my = 0.0;
  for (Eigen::Index i = 0; i < 11; ++i)
    for (Eigen::Index j = 0; j < 11; ++j) {
      mx += w(i, j) * x(i, j);
      my += w(i, j) * y(i, j);
    }
  double vx = 0.0, vy = 0.0, cov = 0.0;
  for (Eigen::Index i = 0; i < 11; ++i)
    for (Eigen::Index j = 0; j < 11; ++j) {
      vx += w(i, j) * (x(i, j) - mx) * (x(i, j) - mx);
      vy += w(i, j) * (y(i, j) - my) * (y(i, j) - my);
      cov += w(i, j) * (x(i, j) - mx) * (y(i, j) - my);
    }
  return ((2 * mx * my + c1) * (2 * cov + c2)) /
         ((mx * mx + my * my + c1) * (vx + vy + c2));
}

double mssim_reference(const GrayImage& a, const GrayImage& b) {
  const auto params = sabmis::SsimParams::defaults();
  const Eigen::MatrixXd w = params.window();
  const RealImage x = sabmis::to_real(a);
  const RealImage y = sabmis::to_real(b);
  double acc = 0.0;
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i + 11 <= x.rows(); ++i)
    for (Eigen::Index j = 0; j + 11 <= x.cols(); ++j) {
      acc += ssim_window_reference(x.block(i, j, 11, 11), y.block(i, j, 11, 11), w,
                                   params.C1, params.C2);
      ++count;
    }
  return acc / static_cast<double>(count);
}

}  // namespace

TEST_CASE("mse matches hand-computed values") {
  GrayImage a(1, 1), b(1, 1);
  a << 0;
  b << 255;
  CHECK(sabmis::mse(a, b) == 65025.0);

  GrayImage c(1, 2), d(1, 2);
  c << 0, 0;
  d << 3, 4;
  CHECK(sabmis::mse(c, d) == 12.5);
}

TEST_CASE("mse matches the double-loop reference on random images") {
  const auto a = testutil::random_gray(33, 47, 1);
  const auto b = testutil::random_gray(33, 47, 2);
  CHECK(sabmis::mse(a, b) == doctest::Approx(mse_reference(a, b)).epsilon(1e-12));
}

TEST_CASE("psnr endpoints") {
  GrayImage a(1, 1), b(1, 1);
  a << 0;
  b << 255;
  CHECK(sabmis::psnr(a, b) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::isinf(sabmis::psnr(a, a)));
  CHECK(sabmis::psnr(a, a) > 0.0);
}

TEST_CASE("psnr of a known mse") {
  GrayImage a(2, 2), b(2, 2);
  a << 10, 10, 10, 10;
  b << 15, 15, 15, 15;  // mse = 25
  CHECK(sabmis::psnr(a, b) ==
        doctest::Approx(10.0 * std::log10(65025.0 / 25.0)).epsilon(1e-12));
}

TEST_CASE("ssim kernel is normalized and symmetric") {
  const auto params = sabmis::SsimParams::defaults();
  REQUIRE(params.kernel.size() == 11);
  CHECK(params.kernel.sum() == doctest::Approx(1.0).epsilon(1e-12));
  for (Eigen::Index i = 0; i < 5; ++i)
    CHECK(params.kernel(i) == doctest::Approx(params.kernel(10 - i)).epsilon(1e-14));
  CHECK(params.window().sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identical images score mssim of one") {
  const auto img = testutil::random_gray(32, 32, 9);
  CHECK(sabmis::mssim(img, img) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("constant images hit the closed-form luminance term") {
  const GrayImage zeros = GrayImage::Constant(16, 16, 0);
  const GrayImage full = GrayImage::Constant(16, 16, 255);
  const auto params = sabmis::SsimParams::defaults();
  // mu_x=0, mu_y=255, variances 0: ssim = C1 / (255^2 + C1) everywhere.
  const double expected = params.C1 / (255.0 * 255.0 + params.C1);
  CHECK(sabmis::mssim(zeros, full) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("mssim matches the naive sliding-window reference") {
  const auto a = testutil::random_gray(24, 19, 3);
  GrayImage b = a;
  // Perturb half the pixels so the comparison is not trivially 1.
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); j += 2)
      b(i, j) = static_cast<std::uint8_t>((b(i, j) + 31) % 256);
  CHECK(sabmis::mssim(a, b) == doctest::Approx(mssim_reference(a, b)).epsilon(1e-10));
}

TEST_CASE("mssim requires 11x11 coverage and matching shapes") {
  CHECK_THROWS_AS(sabmis::mssim(GrayImage::Zero(10, 32), GrayImage::Zero(10, 32)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sabmis::mssim(GrayImage::Zero(16, 16), GrayImage::Zero(16, 17)),
                  std::invalid_argument);
}

TEST_CASE("ncc is one for identical images and scales linearly") {
  const auto a = testutil::random_gray(20, 20, 4);
  CHECK(sabmis::ncc(a, a) == doctest::Approx(1.0).epsilon(1e-12));

  GrayImage twice(2, 2), once(2, 2);
  once << 10, 20, 30, 40;
  twice << 20, 40, 60, 80;
  CHECK(sabmis::ncc(once, twice) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sabmis::ncc(twice, once) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ncc rejects an all-zero reference") {
  CHECK_THROWS_AS(sabmis::ncc(GrayImage::Zero(4, 4), GrayImage::Constant(4, 4, 1)),
                  std::invalid_argument);
}

TEST_CASE("entropy of canonical histograms") {
  CHECK(sabmis::entropy(GrayImage::Constant(8, 8, 77)) == 0.0);

  GrayImage half(2, 2);
  half << 0, 0, 255, 255;
  CHECK(sabmis::entropy(half) == doctest::Approx(1.0).epsilon(1e-12));

  GrayImage all(16, 16);
  for (Eigen::Index i = 0; i < 16; ++i)
    for (Eigen::Index j = 0; j < 16; ++j)
      all(i, j) = static_cast<std::uint8_t>(i * 16 + j);
  CHECK(sabmis::entropy(all) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("nae matches hand-computed ratios") {
  GrayImage a = GrayImage::Constant(10, 10, 100);
  GrayImage b = GrayImage::Constant(10, 10, 101);
  CHECK(sabmis::nae(a, b) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(sabmis::nae(a, a) == 0.0);
}

TEST_CASE("histogram256 counts every pixel once") {
  const auto img = testutil::random_gray(64, 64, 8);
  const auto hist = sabmis::histogram256(img);
  std::uint64_t total = 0;
  for (auto c : hist) total += c;
  CHECK(total == 64 * 64);

  std::uint64_t expected_zero = 0;
  for (Eigen::Index i = 0; i < img.size(); ++i)
    if (img.data()[i] == 0) ++expected_zero;
  CHECK(hist[0] == expected_zero);
}

TEST_CASE("edge map is binary and finds a vertical step edge") {
  GrayImage img = GrayImage::Constant(32, 32, 10);
  for (Eigen::Index i = 0; i < 32; ++i)
    for (Eigen::Index j = 16; j < 32; ++j) img(i, j) = 240;

  const auto edges = sabmis::sobel_edges_otsu(img);
  REQUIRE(edges.rows() == 32);
  REQUIRE(edges.cols() == 32);
  for (Eigen::Index i = 0; i < edges.size(); ++i) {
    const auto v = edges.data()[i];
    CHECK((v == 0 || v == 255));
  }
  // The step column must light up away from the border.
  CHECK(edges(16, 15) == 255);
  CHECK(edges(16, 16) == 255);
  // Flat regions stay dark.
  CHECK(edges(16, 4) == 0);
  CHECK(edges(16, 28) == 0);
  // Border stays non-edge by construction.
  CHECK(edges(0, 15) == 0);
}
