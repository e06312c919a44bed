#include "sabmis/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sabmis {

SecretKey default_key(std::uint64_t seed) {
  SecretKey key;
  key.seed = seed;
  return key;
}

std::vector<std::string> validate_key(const SecretKey& key) {
  std::vector<std::string> bad;
  if (key.r < 2 || key.r % 2 != 0) bad.push_back("r must be even and >= 2");
  if (key.b < 1) bad.push_back("b must be >= 1");
  if (key.l < 1) bad.push_back("l must be >= 1");
  if (key.m < 1) bad.push_back("m must be >= 1");
  if (key.b >= 1 && key.r >= 2) {
    if (key.r % key.b != 0) bad.push_back("b must divide r");
    if (key.r % 2 == 0 && (key.r / 2) % key.b != 0)
      bad.push_back("b must divide r/2 (blocks partition the sub-images)");
  }
  if (key.l >= 1 && key.m >= 1 && key.m % key.l != 0) bad.push_back("l must divide m");
  if (key.b >= 1 && key.l >= 1 && key.m >= 1 && key.r >= 2) {
    // Secret blocks may not outnumber the blocks of one sub-image.
    const long long secret_blocks = 1LL * key.m * key.m / (key.l * key.l);
    const long long cover_blocks = 1LL * key.r * key.r / (4LL * key.b * key.b);
    if (secret_blocks > cover_blocks)
      bad.push_back("m^2/l^2 must be <= r^2/(4*b^2)");
  }
  if (key.p1 < 1) bad.push_back("p1 must be >= 1");
  if (key.p2 < 1) bad.push_back("p2 must be >= 1");
  if (key.p1 + key.p2 != key.b * key.b) bad.push_back("p1 + p2 must equal b^2");
  if (key.p1 > key.p2) bad.push_back("p1 must be <= p2");
  if (key.p3 <= key.p2) bad.push_back("p3 must be > p2");
  if (key.p4 < 1) bad.push_back("p4 must be >= 1");
  if (key.p4 > key.l * key.l)
    bad.push_back("p4 must be <= l^2 (payload comes from one secret block)");
  EmbedConstants ec{key.alpha, key.beta, key.gamma, key.c, key.p1, key.p4};
  for (auto& v : validate_constants(ec, key.p3)) bad.push_back(v);
  return bad;
}

SabmisConfig to_config(const SecretKey& key) {
  const auto bad = validate_key(key);
  if (!bad.empty()) {
    std::string msg = "invalid key:";
    for (const auto& v : bad) msg += "\n  - " + v;
    throw config_error(msg);
  }
  SabmisConfig cfg;
  cfg.r = key.r;
  cfg.b = key.b;
  cfg.m = key.m;
  cfg.l = key.l;
  cfg.p2 = key.p2;
  cfg.p3 = key.p3;
  cfg.embed = EmbedConstants{key.alpha, key.beta, key.gamma, key.c, key.p1, key.p4};
  cfg.seed = key.seed;
  return cfg;
}

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* const kIntFields[] = {"p1", "p2", "p3", "p4", "c", "b", "l", "r", "m"};
const char* const kRealFields[] = {"alpha", "beta", "gamma"};

}  // namespace

std::string format_key(const SecretKey& key) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"seed\": " << key.seed << ",\n";
  out << "  \"p1\": " << key.p1 << ",\n";
  out << "  \"p2\": " << key.p2 << ",\n";
  out << "  \"p3\": " << key.p3 << ",\n";
  out << "  \"p4\": " << key.p4 << ",\n";
  out << "  \"alpha\": " << format_real(key.alpha) << ",\n";
  out << "  \"beta\": " << format_real(key.beta) << ",\n";
  out << "  \"gamma\": " << format_real(key.gamma) << ",\n";
  out << "  \"c\": " << key.c << ",\n";
  out << "  \"b\": " << key.b << ",\n";
  out << "  \"l\": " << key.l << ",\n";
  out << "  \"r\": " << key.r << ",\n";
  out << "  \"m\": " << key.m << "\n";
  out << "}\n";
  return out.str();
}

SecretKey parse_key(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("key parse error: ") + e.what());
  }
  if (!j.is_object()) throw config_error("key parse error: top level must be an object");

  // Strict schema: every known field present, nothing else.
  for (const auto& item : j.items()) {
    const std::string& name = item.key();
    bool known = name == "seed";
    for (const char* f : kIntFields) known = known || name == f;
    for (const char* f : kRealFields) known = known || name == f;
    if (!known) throw config_error("key parse error: unknown field '" + name + "'");
  }
  auto require = [&](const char* name) -> const nlohmann::json& {
    auto it = j.find(name);
    if (it == j.end())
      throw config_error(std::string("key parse error: missing field '") + name + "'");
    return *it;
  };
  auto get_int = [&](const char* name) {
    const auto& v = require(name);
    if (!v.is_number_integer())
      throw config_error(std::string("key parse error: field '") + name +
                         "' must be an integer");
    return v.get<std::int64_t>();
  };
  auto get_real = [&](const char* name) {
    const auto& v = require(name);
    if (!v.is_number())
      throw config_error(std::string("key parse error: field '") + name +
                         "' must be a number");
    return v.get<double>();
  };

  const auto& seed_v = require("seed");
  if (!seed_v.is_number_unsigned() &&
      !(seed_v.is_number_integer() && seed_v.get<std::int64_t>() >= 0))
    throw config_error("key parse error: field 'seed' must be a non-negative integer");

  SecretKey key;
  key.seed = seed_v.get<std::uint64_t>();
  key.p1 = static_cast<int>(get_int("p1"));
  key.p2 = static_cast<int>(get_int("p2"));
  key.p3 = static_cast<int>(get_int("p3"));
  key.p4 = static_cast<int>(get_int("p4"));
  key.alpha = get_real("alpha");
  key.beta = get_real("beta");
  key.gamma = get_real("gamma");
  key.c = static_cast<int>(get_int("c"));
  key.b = static_cast<int>(get_int("b"));
  key.l = static_cast<int>(get_int("l"));
  key.r = static_cast<int>(get_int("r"));
  key.m = static_cast<int>(get_int("m"));
  return key;
}

SecretKey load_key(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open key file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key(buf.str());
}

void save_key(const SecretKey& key, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot open key file for writing: " + path);
  out << format_key(key);
  if (!out) throw config_error("key write failure: " + path);
}

}  // namespace sabmis
