#pragma once

#include <map>
#include <vector>

#include "sabmis/config.hpp"
#include "sabmis/image.hpp"

namespace sabmis {

struct EmbedOptions {
  // Carrier-less sub-images normally run through the same
  // project-and-reconstruct path as loaded ones so all four quarters of the
  // stego image share the transform/solver footprint. This flag copies them
  // through exactly instead.
  bool passthrough_empty = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Per-embed solver telemetry (one entry per solved block).
struct EmbedStats {
  std::vector<int> iterations;
  int nonconverged = 0;
};

// Embedding capacity in bits per cover pixel for n secrets.
double capacity(const SabmisConfig& cfg, int n_secrets);

// Secrets are keyed by carrier slot 1..4 (which parity sub-image hides the
// payload). The cover must be r x r, each secret m x m, 1-4 distinct slots.
// embed_real returns the stego image before 8-bit quantization; embed is its
// quantized composition.
RealImage embed_real(const GrayImage& cover, const std::map<int, GrayImage>& secrets,
                     const SabmisConfig& cfg, const EmbedOptions& opts = {},
                     EmbedStats* stats = nullptr);
GrayImage embed(const GrayImage& cover, const std::map<int, GrayImage>& secrets,
                const SabmisConfig& cfg, const EmbedOptions& opts = {},
                EmbedStats* stats = nullptr);

// Blind extraction: consumes only the stego image and the key-derived
// config — no cover data enters this path. Returns one m x m image per
// requested slot, in request order.
std::vector<GrayImage> extract(const GrayImage& stego, const std::vector<int>& slots,
                               const SabmisConfig& cfg, unsigned threads = 0);
std::vector<GrayImage> extract_real(const RealImage& stego, const std::vector<int>& slots,
                                    const SabmisConfig& cfg, unsigned threads = 0);

// Coefficient-level views (columns follow the shared column-major block
// order), used to study payload fidelity directly:
//   secret_coefficients: the p4-per-block payload embedding would carry.
//   extract_coefficients: the p4-per-block payload recovered from a stego.
Eigen::MatrixXd secret_coefficients(const GrayImage& secret, const SabmisConfig& cfg);
Eigen::MatrixXd extract_coefficients(const RealImage& stego, int slot,
                                     const SabmisConfig& cfg, unsigned threads = 0);

// Staging helpers shared by embedding and extraction (exposed for reuse and
// testing): an image whose dimensions are divisible by `side` maps to a
// side^2 x nblocks matrix whose columns are zig-zag-ordered DCT coefficients
// of the blocks in column-major grid order, and back.
Eigen::MatrixXd image_to_coeffs(const RealImage& img, int side, unsigned threads = 0);
RealImage coeffs_to_image(const Eigen::MatrixXd& coeffs, int side, int rows, int cols,
                          unsigned threads = 0);

// Measurement staging: head rows pass through, tail rows project through
// phi. coeffs is b^2 x nblocks; the result is (p1 + p3) x nblocks.
Eigen::MatrixXd measure_coeffs(const Eigen::MatrixXd& coeffs, int p1,
                               const Eigen::MatrixXd& phi);

}  // namespace sabmis
