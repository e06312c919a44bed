#include "sabmis/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sabmis/image_io.hpp"
#include "sabmis/metrics.hpp"
#include "sabmis/parallel.hpp"
#include "sabmis/pipeline.hpp"
#include "sabmis/resize.hpp"

namespace sabmis {
namespace {

constexpr const char* kCsvVersionComment = "# sabmis-experiment-csv v1";
constexpr const char* kCsvHeader =
    "cover,n_secrets,slots,bpp,psnr,mssim,ncc,entropy_cover,entropy_stego,"
    "nae_stego,nae_extract_avg,nae_wrongconst_avg,nae_wrongseed_avg";

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string fmt(double v, int precision) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string join_slots(const std::vector<int>& slots) {
  std::string out;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(slots[i]);
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open file for writing: " + path.string());
  out << text;
  if (!out) throw io_error("write failure: " + path.string());
}

std::string histogram_csv(const GrayImage& img) {
  std::ostringstream out;
  out << "value,count\r\n";
  const auto hist = histogram256(img);
  for (int v = 0; v < 256; ++v) out << v << "," << hist[v] << "\r\n";
  return out.str();
}

struct RowArtifacts {
  std::string csv_line;
  std::string cover_hist, stego_hist;
  GrayImage cover_edges, stego_edges;
};

RowArtifacts run_row(const ExperimentEntry& entry, const SecretKey& key,
                     bool emit_artifacts) {
  const SabmisConfig cfg = to_config(key);
  const GrayImage cover = resize_to(load_image(entry.cover), cfg.r, cfg.r);

  std::map<int, GrayImage> secrets;
  std::vector<GrayImage> originals;
  for (size_t i = 0; i < entry.secrets.size(); ++i) {
    GrayImage s = resize_to(load_image(entry.secrets[i]), cfg.m, cfg.m);
    originals.push_back(s);
    secrets.emplace(entry.slots[i], std::move(s));
  }

  EmbedOptions eopts;
  eopts.threads = 1;  // rows run in parallel; keep each row single-threaded
  const GrayImage stego = embed(cover, secrets, cfg, eopts);

  const double bpp = capacity(cfg, static_cast<int>(entry.secrets.size()));
  const double v_psnr = psnr(cover, stego);
  const double v_mssim = mssim(cover, stego);
  const double v_ncc = ncc(cover, stego);
  const double e_cover = entropy(cover);
  const double e_stego = entropy(stego);
  const double v_nae = nae(cover, stego);

  auto avg_extract_nae = [&](const SecretKey& k) {
    const SabmisConfig c = to_config(k);
    double total = 0.0;
    const auto extracted = extract(stego, entry.slots, c, 1);
    for (size_t i = 0; i < extracted.size(); ++i)
      total += nae(originals[i], extracted[i]);
    return total / static_cast<double>(extracted.size());
  };

  SecretKey wrong_const = key;
  wrong_const.alpha = wrong_const.beta = wrong_const.gamma = 1.0;
  wrong_const.c = 1;
  SecretKey wrong_seed = key;
  wrong_seed.seed = key.seed + 1;

  const double nae_ok = avg_extract_nae(key);
  const double nae_wc = avg_extract_nae(wrong_const);
  const double nae_ws = avg_extract_nae(wrong_seed);

  RowArtifacts row;
  std::ostringstream line;
  line << csv_escape(entry.cover) << "," << entry.secrets.size() << ","
       << join_slots(entry.slots) << "," << fmt(bpp, 3) << "," << fmt(v_psnr, 6)
       << "," << fmt(v_mssim, 6) << "," << fmt(v_ncc, 6) << "," << fmt(e_cover, 6)
       << "," << fmt(e_stego, 6) << "," << fmt(v_nae, 6) << "," << fmt(nae_ok, 6)
       << "," << fmt(nae_wc, 6) << "," << fmt(nae_ws, 6);
  row.csv_line = line.str();
  if (emit_artifacts) {
    row.cover_hist = histogram_csv(cover);
    row.stego_hist = histogram_csv(stego);
    row.cover_edges = sobel_edges_otsu(cover);
    row.stego_edges = sobel_edges_otsu(stego);
  }
  return row;
}

}  // namespace

std::vector<ExperimentEntry> parse_manifest(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("manifest parse error: ") + e.what());
  }
  if (!j.is_array()) throw config_error("manifest parse error: top level must be an array");

  std::vector<ExperimentEntry> entries;
  for (size_t idx = 0; idx < j.size(); ++idx) {
    const auto& item = j[idx];
    const std::string at = "manifest entry " + std::to_string(idx + 1);
    if (!item.is_object()) throw config_error(at + ": must be an object");
    for (const auto& kv : item.items())
      if (kv.key() != "cover" && kv.key() != "secrets" && kv.key() != "slots")
        throw config_error(at + ": unknown field '" + kv.key() + "'");
    if (!item.contains("cover") || !item["cover"].is_string())
      throw config_error(at + ": 'cover' must be a string");
    if (!item.contains("secrets") || !item["secrets"].is_array())
      throw config_error(at + ": 'secrets' must be an array");
    if (!item.contains("slots") || !item["slots"].is_array())
      throw config_error(at + ": 'slots' must be an array");

    ExperimentEntry entry;
    entry.cover = item["cover"].get<std::string>();
    for (const auto& s : item["secrets"]) {
      if (!s.is_string()) throw config_error(at + ": secrets must be strings");
      entry.secrets.push_back(s.get<std::string>());
    }
    for (const auto& s : item["slots"]) {
      if (!s.is_number_integer()) throw config_error(at + ": slots must be integers");
      entry.slots.push_back(s.get<int>());
    }
    if (entry.secrets.empty() || entry.secrets.size() > 4)
      throw config_error(at + ": need 1 to 4 secrets");
    if (entry.slots.size() != entry.secrets.size())
      throw config_error(at + ": slots and secrets must have the same length");
    for (size_t a = 0; a < entry.slots.size(); ++a) {
      if (entry.slots[a] < 1 || entry.slots[a] > 4)
        throw config_error(at + ": slot indices must be in 1..4");
      for (size_t b = a + 1; b < entry.slots.size(); ++b)
        if (entry.slots[a] == entry.slots[b])
          throw config_error(at + ": slot indices must be distinct");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ExperimentEntry> load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string run_experiment(const std::vector<ExperimentEntry>& entries,
                           const SecretKey& key, const std::string& out_dir,
                           const ExperimentOptions& opts) {
  // Fail fast with the complete list of unreadable inputs.
  std::vector<std::string> missing;
  for (const auto& entry : entries) {
    if (!std::filesystem::exists(entry.cover)) missing.push_back(entry.cover);
    for (const auto& s : entry.secrets)
      if (!std::filesystem::exists(s)) missing.push_back(s);
  }
  if (!missing.empty()) {
    std::string msg = "missing input images:";
    for (const auto& m : missing) msg += "\n  - " + m;
    throw config_error(msg);
  }
  // Surface key problems before spawning workers.
  (void)to_config(key);

  std::vector<RowArtifacts> rows(entries.size());
  parallel_for(
      entries.size(),
      [&](std::size_t i) { rows[i] = run_row(entries[i], key, opts.emit_artifacts); },
      opts.threads);

  std::ostringstream csv;
  csv << kCsvVersionComment << "\r\n" << kCsvHeader << "\r\n";
  for (const auto& row : rows) csv << row.csv_line << "\r\n";
  const std::string report = csv.str();

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text(dir / "report.csv", report);
  if (opts.emit_artifacts) {
    for (size_t i = 0; i < rows.size(); ++i) {
      char stem[32];
      std::snprintf(stem, sizeof(stem), "row%02zu", i + 1);
      write_text(dir / (std::string(stem) + "_cover_hist.csv"), rows[i].cover_hist);
      write_text(dir / (std::string(stem) + "_stego_hist.csv"), rows[i].stego_hist);
      save_pgm(rows[i].cover_edges, (dir / (std::string(stem) + "_cover_edges.pgm")).string());
      save_pgm(rows[i].stego_edges, (dir / (std::string(stem) + "_stego_edges.pgm")).string());
    }
  }
  return report;
}

}  // namespace sabmis
