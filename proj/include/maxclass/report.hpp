#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxclass/checks.hpp"
#include "maxclass/table.hpp"

namespace maxclass {

enum class ReportFormat { json, text };

// A campaign runs the selected checks over a family/n grid with one derived
// seed per (check, family, n) cell, so reruns with the same seed are
// reproducible cell by cell.
struct CampaignOptions {
  std::vector<Family> families{Family::dihedral, Family::semidihedral,
                               Family::quaternion};
  int n_min = 3;
  int n_max = 5;
  std::vector<std::string> checks;  // exact ids; empty selects nothing
  uint64_t seed = 0;
  std::string out_path;  // empty keeps the report in memory
  ReportFormat format = ReportFormat::json;
};

struct ReportEntry {
  std::string check;
  Family family = Family::dihedral;
  int n = 0;
  std::string status;  // pass | fail | skipped
  std::string detail;
  ordered_json witness;
  double elapsed_ms = 0;  // text output only, never serialized to JSON
};

struct VerificationReport {
  CampaignOptions options;  // normalized: canonical family and check order
  std::vector<ReportEntry> entries;
  std::string generated_at;
  double total_elapsed_ms = 0;

  bool all_passed() const;
  int exit_code() const;  // 0 when nothing failed, 1 otherwise
};

VerificationReport run_campaign(const CampaignOptions& options);

// JSON serialization is byte-stable for a fixed seed: the only volatile
// fields (generated_at, total_elapsed_ms) live in the header.
ordered_json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

std::string explain(const std::string& check_id);

ordered_json table_to_json(const GroupTable& table);

void write_report(const std::string& path, const std::string& content);

std::vector<std::string> all_check_ids();

}  // namespace maxclass
