#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "sabmis/image.hpp"

namespace testutil {

inline std::string testdata(const std::string& rel) {
  return std::string(SABMIS_TESTDATA_DIR) + "/" + rel;
}

// Unique scratch directory per test binary run, removed on destruction.
class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    std::random_device rd;
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto candidate = base / ("sabmis_test_" + std::to_string(rd()));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("could not create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline sabmis::GrayImage random_gray(Eigen::Index rows, Eigen::Index cols,
                                     std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  sabmis::GrayImage img(rows, cols);
  for (Eigen::Index i = 0; i < img.size(); ++i)
    img.data()[i] = static_cast<std::uint8_t>(dist(rng));
  return img;
}

inline sabmis::RealImage random_real(Eigen::Index rows, Eigen::Index cols,
                                     std::uint32_t seed, double scale = 1.0) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, scale);
  sabmis::RealImage img(rows, cols);
  for (Eigen::Index i = 0; i < img.size(); ++i) img.data()[i] = dist(rng);
  return img;
}

}  // namespace testutil
