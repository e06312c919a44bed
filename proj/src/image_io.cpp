#include "sabmis/image_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#ifdef SABMIS_HAS_PNG
#include <png.h>
#endif

namespace sabmis {
namespace {

// Reads the next PNM header token, skipping whitespace and '#' comments.
bool next_token(std::istream& in, std::string& tok) {
  tok.clear();
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (!std::isspace(ch)) break;
  }
  if (ch == EOF) return false;
  do {
    tok.push_back(static_cast<char>(ch));
    ch = in.get();
  } while (ch != EOF && !std::isspace(ch) && ch != '#');
  // Leave the terminating byte in the stream: the P5 reader validates it as
  // the single whitespace that separates header from payload.
  if (ch != EOF) in.unget();
  return true;
}

long parse_header_int(std::istream& in, const std::string& path) {
  std::string tok;
  if (!next_token(in, tok)) throw io_error("malformed header: " + path);
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw io_error("malformed header: " + path);
  }
}

}  // namespace

GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);

  std::string magic;
  if (!next_token(in, magic) || (magic != "P5" && magic != "P2"))
    throw io_error("malformed header: " + path);
  long width = parse_header_int(in, path);
  long height = parse_header_int(in, path);
  long maxval = parse_header_int(in, path);
  if (width < 1 || height < 1) throw io_error("malformed header: " + path);
  if (maxval > 255) throw io_error("unsupported maxval: " + path);
  if (maxval < 1) throw io_error("malformed header: " + path);

  GrayImage img(height, width);
  if (magic == "P5") {
    // Exactly one whitespace byte separates the header from the payload.
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) throw io_error("malformed header: " + path);
    in.read(reinterpret_cast<char*>(img.data()),
            static_cast<std::streamsize>(width) * height);
    if (in.gcount() != static_cast<std::streamsize>(width) * height)
      throw io_error("truncated payload: " + path);
  } else {
    for (Eigen::Index i = 0; i < img.size(); ++i) {
      long v;
      std::string tok;
      if (!next_token(in, tok)) throw io_error("truncated payload: " + path);
      try {
        size_t pos = 0;
        v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw io_error("truncated payload: " + path);
      }
      if (v < 0 || v > maxval) throw io_error("truncated payload: " + path);
      img.data()[i] = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

void save_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open file for writing: " + path);
  out << "P5\n" << img.cols() << " " << img.rows() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data()), img.size());
  if (!out) throw io_error("write failure: " + path);
}

namespace {

constexpr char kFloatMagic[4] = {'S', 'A', 'B', 'F'};

std::uint32_t read_u32_le(std::istream& in, const std::string& path) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (in.gcount() != 4) throw io_error("malformed header: " + path);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

RealImage load_float_raster(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::memcmp(magic, kFloatMagic, 4) != 0)
    throw io_error("malformed header: " + path);
  std::uint32_t width = read_u32_le(in, path);
  std::uint32_t height = read_u32_le(in, path);
  if (width < 1 || height < 1) throw io_error("malformed header: " + path);

  RealImage img(height, width);
  static_assert(std::numeric_limits<double>::is_iec559 && sizeof(double) == 8);
  // This code targets little-endian hosts, so the payload maps directly.
  in.read(reinterpret_cast<char*>(img.data()),
          static_cast<std::streamsize>(img.size()) * 8);
  if (in.gcount() != static_cast<std::streamsize>(img.size()) * 8)
    throw io_error("truncated payload: " + path);
  return img;
}

void save_float_raster(const RealImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open file for writing: " + path);
  out.write(kFloatMagic, 4);
  write_u32_le(out, static_cast<std::uint32_t>(img.cols()));
  write_u32_le(out, static_cast<std::uint32_t>(img.rows()));
  out.write(reinterpret_cast<const char*>(img.data()),
            static_cast<std::streamsize>(img.size()) * 8);
  if (!out) throw io_error("write failure: " + path);
}

bool png_supported() {
#ifdef SABMIS_HAS_PNG
  return true;
#else
  return false;
#endif
}

#ifdef SABMIS_HAS_PNG

GrayImage load_png(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw io_error("cannot open file: " + path);
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw io_error("png init failure: " + path);
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw io_error("malformed header: " + path);
  }
  png_init_io(png, fp);
  png_read_info(png, info);
  const bool ok = png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY &&
                  png_get_bit_depth(png, info) == 8 &&
                  png_get_interlace_type(png, info) == PNG_INTERLACE_NONE;
  if (!ok) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw io_error("unsupported png format (need 8-bit gray, non-interlaced): " + path);
  }
  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  GrayImage img(height, width);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 i = 0; i < height; ++i) rows[i] = img.data() + static_cast<size_t>(i) * width;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return img;
}

void save_png(const GrayImage& img, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw io_error("cannot open file for writing: " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw io_error("png init failure: " + path);
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw io_error("write failure: " + path);
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.cols()),
               static_cast<png_uint_32>(img.rows()), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_bytep> rows(img.rows());
  for (Eigen::Index i = 0; i < img.rows(); ++i)
    rows[i] = const_cast<png_bytep>(img.data() + static_cast<size_t>(i) * img.cols());
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

#else

GrayImage load_png(const std::string& path) {
  throw io_error("png support not built: " + path);
}

void save_png(const GrayImage&, const std::string& path) {
  throw io_error("png support not built: " + path);
}

#endif  // SABMIS_HAS_PNG

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
  if (s.size() < suffix.size()) return false;
  for (size_t i = 0; i < suffix.size(); ++i) {
    char a = s[s.size() - suffix.size() + i];
    if (std::tolower(static_cast<unsigned char>(a)) != suffix[i]) return false;
  }
  return true;
}

}  // namespace

GrayImage load_image(const std::string& path) {
  if (has_suffix(path, ".png")) return load_png(path);
  return load_pgm(path);
}

void save_image(const GrayImage& img, const std::string& path) {
  if (has_suffix(path, ".png")) return save_png(img, path);
  save_pgm(img, path);
}

}  // namespace sabmis
