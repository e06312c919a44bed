#pragma once

#include <string>
#include <vector>

#include "sabmis/config.hpp"

namespace sabmis {

// One experiment row: a cover carrying a payload set.
struct ExperimentEntry {
  std::string cover;
  std::vector<std::string> secrets;
  std::vector<int> slots;
};

// Manifest file: JSON array of {"cover": path, "secrets": [paths], "slots":
// [1..4]} objects. Strict schema; slot lists must be distinct and match the
// secrets list in length.
std::vector<ExperimentEntry> load_manifest(const std::string& path);
std::vector<ExperimentEntry> parse_manifest(const std::string& json_text);

struct ExperimentOptions {
  unsigned threads = 0;    // parallel rows; 0 = hardware concurrency
  bool emit_artifacts = true;  // histograms + edge maps next to the report
};

// Runs every row: embed with the key, measure stego quality (PSNR, MSSIM,
// NCC, entropy, NAE), extract with the correct key and with the two wrong
// keys (constants guess alpha=beta=gamma=c=1, and seed+1), and report the
// average extraction NAE for each. Inputs are resized on ingest to the
// key's geometry. Missing input files are enumerated up front before any
// computation. Returns the CSV report (also written to out_dir/report.csv
// along with per-row 256-bin histograms and Sobel/Otsu edge maps). Output is
// byte-deterministic for a fixed manifest and key.
std::string run_experiment(const std::vector<ExperimentEntry>& entries,
                           const SecretKey& key, const std::string& out_dir,
                           const ExperimentOptions& opts = {});

}  // namespace sabmis
