#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sabmis/experiment.hpp"
#include "sabmis/image_io.hpp"
#include "sabmis/metrics.hpp"
#include "sabmis/pipeline.hpp"
#include "sabmis/resize.hpp"

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// "path@slot" with slot in 1..4; a bare path means "next free slot".
std::pair<std::string, int> parse_secret_spec(const std::string& spec) {
  const auto at = spec.rfind('@');
  if (at != std::string::npos && at + 1 < spec.size()) {
    const std::string tail = spec.substr(at + 1);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      const int slot = std::stoi(tail);
      if (slot < 1 || slot > 4)
        throw CLI::ValidationError("--secret", "slot must be in 1..4: " + spec);
      return {spec.substr(0, at), slot};
    }
  }
  return {spec, 0};
}

std::string fmt(double v, int precision) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

int run_embed(const std::string& cover_path, const std::vector<std::string>& secret_specs,
              const std::string& key_path, const std::string& out_path, bool float_stego,
              bool passthrough_empty, unsigned threads) {
  const sabmis::SecretKey key = sabmis::load_key(key_path);
  const sabmis::SabmisConfig cfg = sabmis::to_config(key);

  const sabmis::GrayImage cover =
      sabmis::resize_to(sabmis::load_image(cover_path), cfg.r, cfg.r);

  std::map<int, sabmis::GrayImage> secrets;
  for (const auto& spec : secret_specs) {
    auto [path, slot] = parse_secret_spec(spec);
    if (slot == 0) {
      slot = 1;
      while (slot <= 4 && secrets.count(slot)) ++slot;
    }
    if (slot > 4)
      throw CLI::ValidationError("--secret", "no free slot left for " + spec);
    if (secrets.count(slot))
      throw CLI::ValidationError("--secret", "slot " + std::to_string(slot) +
                                                 " assigned more than once");
    secrets.emplace(slot, sabmis::resize_to(sabmis::load_image(path), cfg.m, cfg.m));
  }

  sabmis::EmbedOptions opts;
  opts.passthrough_empty = passthrough_empty;
  opts.threads = threads;

  double psnr_db;
  if (float_stego) {
    const sabmis::RealImage stego = sabmis::embed_real(cover, secrets, cfg, opts);
    sabmis::save_float_raster(stego, out_path);
    psnr_db = sabmis::psnr_real(sabmis::to_real(cover), stego);
  } else {
    const sabmis::GrayImage stego = sabmis::embed(cover, secrets, cfg, opts);
    sabmis::save_image(stego, out_path);
    psnr_db = sabmis::psnr(cover, stego);
  }
  const double bpp = sabmis::capacity(cfg, static_cast<int>(secrets.size()));
  std::printf("bpp,%s,psnr,%s\n", fmt(bpp, 3).c_str(), fmt(psnr_db, 6).c_str());
  return 0;
}

int run_extract(const std::string& stego_path, const std::string& key_path,
                std::vector<int> slots, const std::string& out_dir, unsigned threads) {
  const sabmis::SecretKey key = sabmis::load_key(key_path);
  const sabmis::SabmisConfig cfg = sabmis::to_config(key);

  std::vector<sabmis::GrayImage> extracted;
  if (has_suffix(stego_path, ".sabf")) {
    extracted = sabmis::extract_real(sabmis::load_float_raster(stego_path), slots, cfg,
                                     threads);
  } else {
    extracted = sabmis::extract(sabmis::load_image(stego_path), slots, cfg, threads);
  }
  std::filesystem::create_directories(out_dir);
  for (size_t i = 0; i < slots.size(); ++i) {
    const std::string out =
        (std::filesystem::path(out_dir) /
         ("secret_slot" + std::to_string(slots[i]) + ".pgm")).string();
    sabmis::save_pgm(extracted[i], out);
  }
  return 0;
}

int run_metrics(const std::string& a_path, const std::string& b_path) {
  const sabmis::GrayImage a = sabmis::load_image(a_path);
  const sabmis::GrayImage b = sabmis::load_image(b_path);
  std::printf("%s,%s,%s,%s,%s,%s\n", fmt(sabmis::psnr(a, b), 6).c_str(),
              fmt(sabmis::mssim(a, b), 6).c_str(), fmt(sabmis::ncc(a, b), 6).c_str(),
              fmt(sabmis::entropy(a), 6).c_str(), fmt(sabmis::entropy(b), 6).c_str(),
              fmt(sabmis::nae(a, b), 6).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SABMIS blind multi-image steganography"};
  app.require_subcommand(1);

  // embed
  std::string cover_path, key_path, out_path, stego_path, out_dir;
  std::vector<std::string> secret_specs;
  bool float_stego = false, passthrough_empty = false;
  unsigned threads = 0;
  auto* embed = app.add_subcommand("embed", "Hide 1-4 secret images in a cover image");
  embed->add_option("--cover", cover_path, "Cover image (PGM or PNG)")->required();
  embed->add_option("--secret", secret_specs, "Secret image path, optionally PATH@slot")
      ->required()
      ->expected(1, 4);
  embed->add_option("--key", key_path, "Secret key JSON file")->required();
  embed->add_option("--out", out_path, "Output stego image")->required();
  embed->add_flag("--float-stego", float_stego,
                  "Write a float raster (.sabf) instead of quantizing to 8-bit");
  embed->add_flag("--passthrough-empty", passthrough_empty,
                  "Copy carrier-less sub-images exactly instead of reconstructing them");
  embed->add_option("--threads", threads, "Worker threads (0 = auto)");

  // extract
  std::vector<int> slots;
  auto* extract = app.add_subcommand("extract",
                                     "Recover secret images from a stego image (blind: "
                                     "no cover input)");
  extract->add_option("--stego", stego_path, "Stego image (PGM, PNG, or .sabf raster)")
      ->required();
  extract->add_option("--key", key_path, "Secret key JSON file")->required();
  extract->add_option("--slots", slots, "Carrier slots to extract (1..4)")
      ->required()
      ->delimiter(',');
  extract->add_option("--out-dir", out_dir, "Directory for extracted images")->required();
  extract->add_option("--threads", threads, "Worker threads (0 = auto)");

  // metrics
  std::string a_path, b_path;
  auto* metrics = app.add_subcommand(
      "metrics", "Print psnr,mssim,ncc,entropy_a,entropy_b,nae for an image pair");
  metrics->add_option("--a", a_path, "Reference image")->required();
  metrics->add_option("--b", b_path, "Comparison image")->required();

  // experiment
  std::string manifest_path;
  bool no_artifacts = false;
  auto* experiment = app.add_subcommand(
      "experiment", "Run the embedding/extraction evaluation suite from a manifest");
  experiment->add_option("--manifest", manifest_path, "JSON manifest of rows")->required();
  experiment->add_option("--key", key_path, "Secret key JSON file")->required();
  experiment->add_option("--out-dir", out_dir, "Report/artifact output directory")
      ->required();
  experiment->add_flag("--no-artifacts", no_artifacts,
                       "Skip histogram and edge-map emission");
  experiment->add_option("--threads", threads, "Parallel rows (0 = auto)");

  // keygen
  std::string keyout;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int r_override = 0, m_override = 0;
  auto* keygen = app.add_subcommand("keygen", "Write a defaults key file");
  keygen->add_option("--out", keyout, "Key file to write")->required();
  auto* seed_opt = keygen->add_option("--seed", seed, "Matrix seed (default: random)");
  keygen->add_option("--r", r_override, "Cover side override");
  keygen->add_option("--m", m_override, "Secret side override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(embed))
      return run_embed(cover_path, secret_specs, key_path, out_path, float_stego,
                       passthrough_empty, threads);
    if (app.got_subcommand(extract))
      return run_extract(stego_path, key_path, slots, out_dir, threads);
    if (app.got_subcommand(metrics)) return run_metrics(a_path, b_path);
    if (app.got_subcommand(experiment)) {
      const sabmis::SecretKey key = sabmis::load_key(key_path);
      sabmis::ExperimentOptions opts;
      opts.threads = threads;
      opts.emit_artifacts = !no_artifacts;
      const std::string report = sabmis::run_experiment(
          sabmis::load_manifest(manifest_path), key, out_dir, opts);
      std::fputs(report.c_str(), stdout);
      return 0;
    }
    if (app.got_subcommand(keygen)) {
      seed_given = seed_opt->count() > 0;
      if (!seed_given) {
        std::random_device rd;
        seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
      }
      sabmis::SecretKey key = sabmis::default_key(seed);
      if (r_override > 0) key.r = r_override;
      if (m_override > 0) key.m = m_override;
      (void)sabmis::to_config(key);  // reject invalid overrides
      sabmis::save_key(key, keyout);
      std::printf("seed,%" PRIu64 "\n", seed);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
