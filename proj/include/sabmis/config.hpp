#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sabmis/codec.hpp"
#include "sabmis/lasso_admm.hpp"

namespace sabmis {

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// The shared secret: everything the receiver needs to regenerate the
// measurement matrix (seed + dimensions) plus the embedding constants and
// geometry. Serialized as a flat, strict-schema JSON document.
struct SecretKey {
  std::uint64_t seed = 0;
  int p1 = 32;
  int p2 = 32;
  int p3 = 1600;
  int p4 = 32;
  double alpha = 0.01;
  double beta = 0.1;
  double gamma = 1.0;
  int c = 6;
  int b = 8;   // cover block side
  int l = 8;   // secret block side
  int r = 1024;  // cover side
  int m = 512;   // secret side

  bool operator==(const SecretKey&) const = default;
};

// Runtime configuration derived from a validated key.
struct SabmisConfig {
  int r = 1024;
  int b = 8;
  int m = 512;
  int l = 8;
  int p2 = 32;
  int p3 = 1600;
  EmbedConstants embed;
  SolverConfig solver;
  std::uint64_t seed = 0;
};

SecretKey default_key(std::uint64_t seed);

// Returns every violated invariant (empty list = valid):
// geometry divisibility, block-count capacity, p1+p2 = b^2, p1 <= p2,
// p3 > p2, and all embedding-constant constraints including write/read
// index disjointness.
std::vector<std::string> validate_key(const SecretKey& key);

// Converts a key to a runtime config; throws config_error listing all
// violations when the key is invalid.
SabmisConfig to_config(const SecretKey& key);

// Strict JSON (de)serialization: exact field set, named errors for missing,
// unknown, or mistyped fields; reals written with 17 significant digits so
// load(save(k)) == k exactly.
SecretKey load_key(const std::string& path);
void save_key(const SecretKey& key, const std::string& path);

SecretKey parse_key(const std::string& json_text);
std::string format_key(const SecretKey& key);

}  // namespace sabmis
