#pragma once

#include <stdexcept>
#include <string>

#include "sabmis/image.hpp"

namespace sabmis {

// I/O failures carry one of a small set of stable message prefixes
// ("malformed header", "unsupported maxval", "truncated payload", ...) so
// callers and tests can distinguish the causes.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// PGM: binary (P5) and ASCII (P2) readers, P5 writer. Only maxval <= 255 is
// accepted; pixels are stored exactly as read, no rescaling.
GrayImage load_pgm(const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path);

// Float raster: magic "SABF", little-endian u32 width, u32 height, then
// width*height little-endian f64 in raster (row-major) order.
RealImage load_float_raster(const std::string& path);
void save_float_raster(const RealImage& img, const std::string& path);

// 8-bit grayscale non-interlaced PNG. Throws io_error when the build has no
// PNG support or the file is not 8-bit grayscale.
GrayImage load_png(const std::string& path);
void save_png(const GrayImage& img, const std::string& path);
bool png_supported();

// Dispatch on file extension: .pgm/.pnm -> PGM, .png -> PNG.
GrayImage load_image(const std::string& path);
void save_image(const GrayImage& img, const std::string& path);

}  // namespace sabmis
