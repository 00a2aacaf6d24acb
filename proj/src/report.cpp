#include "maxclass/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "maxclass/errors.hpp"

namespace maxclass {

bool VerificationReport::all_passed() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const ReportEntry& e) { return e.status == "fail"; });
}

int VerificationReport::exit_code() const { return all_passed() ? 0 : 1; }

std::vector<std::string> all_check_ids() {
  std::vector<std::string> out;
  for (const CheckDef& c : check_registry()) out.push_back(c.id);
  return out;
}

namespace {

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

VerificationReport run_campaign(const CampaignOptions& options) {
  if (options.n_min < 3 || options.n_max > 8 || options.n_min > options.n_max)
    raise(Errc::unsupported_range,
          "campaign needs 3 <= n_min <= n_max <= 8, got n_min = " +
              std::to_string(options.n_min) +
              ", n_max = " + std::to_string(options.n_max));
  for (const std::string& id : options.checks) find_check(id);

  CampaignOptions norm = options;
  norm.families.clear();
  for (Family f :
       {Family::dihedral, Family::semidihedral, Family::quaternion})
    if (std::find(options.families.begin(), options.families.end(), f) !=
        options.families.end())
      norm.families.push_back(f);
  norm.checks.clear();
  std::vector<const CheckDef*> selected;
  for (const CheckDef& def : check_registry())
    if (std::find(options.checks.begin(), options.checks.end(), def.id) !=
        options.checks.end()) {
      selected.push_back(&def);
      norm.checks.push_back(def.id);
    }

  VerificationReport rep;
  rep.options = norm;
  rep.generated_at = now_utc();
  auto campaign_t0 = std::chrono::steady_clock::now();

  for (const CheckDef* def : selected)
    for (Family f : norm.families)
      for (int n = norm.n_min; n <= norm.n_max; ++n) {
        ReportEntry e;
        e.check = def->id;
        e.family = f;
        e.n = n;
        e.status = "skipped";
        if (f == Family::semidihedral && n == 3) {
          e.detail = "no semidihedral group of order 8";
        } else if (!def->applies(f, n)) {
          e.detail = "outside the range this check covers";
        } else {
          CheckContext ctx{make_group(f, n),
                           std::mt19937_64(derive_seed(norm.seed, def->id, f, n))};
          auto t0 = std::chrono::steady_clock::now();
          try {
            CheckOutcome out = def->fn(ctx);
            e.status = out.pass ? "pass" : "fail";
            e.detail = std::move(out.detail);
            e.witness = std::move(out.witness);
          } catch (const Error& err) {
            e.status = "fail";
            e.detail = std::string("raised: ") + err.what();
            e.witness = ordered_json{{"error", err.what()}};
          }
          e.elapsed_ms = ms_since(t0);
        }
        rep.entries.push_back(std::move(e));
      }

  rep.total_elapsed_ms = ms_since(campaign_t0);
  return rep;
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["tool"] = "maxclass";
  j["version"] = "1.0.0";
  j["generated_at"] = report.generated_at;
  j["seed"] = report.options.seed;
  std::vector<std::string> fams;
  for (Family f : report.options.families) fams.emplace_back(family_name(f));
  j["families"] = fams;
  j["n_min"] = report.options.n_min;
  j["n_max"] = report.options.n_max;
  j["checks"] = report.options.checks;
  j["total_elapsed_ms"] = report.total_elapsed_ms;
  uint32_t np = 0, nf = 0, ns = 0;
  for (const ReportEntry& e : report.entries) {
    if (e.status == "pass")
      ++np;
    else if (e.status == "fail")
      ++nf;
    else
      ++ns;
  }
  j["summary"] = ordered_json{{"pass", np}, {"fail", nf}, {"skipped", ns}};
  ordered_json arr = ordered_json::array();
  for (const ReportEntry& e : report.entries) {
    ordered_json row{{"check", e.check},
                     {"family", family_name(e.family)},
                     {"n", e.n},
                     {"status", e.status},
                     {"detail", e.detail}};
    if (!e.witness.is_null()) row["witness"] = e.witness;
    arr.push_back(std::move(row));
  }
  j["entries"] = std::move(arr);
  return j;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "verification campaign  seed=" << report.options.seed << "  n="
     << report.options.n_min << ".." << report.options.n_max << "  families=";
  for (size_t i = 0; i < report.options.families.size(); ++i)
    os << (i ? "," : "") << family_letter(report.options.families[i]);
  os << "\ngenerated " << report.generated_at << "\n\n";
  uint32_t np = 0, nf = 0, ns = 0;
  for (const ReportEntry& e : report.entries) {
    const char* tag = "SKIP";
    if (e.status == "pass") {
      tag = "PASS";
      ++np;
    } else if (e.status == "fail") {
      tag = "FAIL";
      ++nf;
    } else {
      ++ns;
    }
    os << '[' << tag << "] " << std::left << std::setw(22) << e.check
       << ' ' << family_letter(e.family) << " n=" << e.n;
    if (e.status != "skipped")
      os << "  " << std::fixed << std::setprecision(1) << e.elapsed_ms
         << " ms";
    if (!e.detail.empty()) os << "  " << e.detail;
    os << '\n';
  }
  os << "\nsummary: " << np << " pass, " << nf << " fail, " << ns
     << " skipped  (" << std::fixed << std::setprecision(1)
     << report.total_elapsed_ms << " ms)\n";
  return os.str();
}

std::string explain(const std::string& check_id) {
  const CheckDef& c = find_check(check_id);
  std::ostringstream os;
  os << c.id << "\n  claim: " << c.claim << "\n  method: " << c.strategy
     << "\n  families:";
  if (c.dihedral) os << " dihedral";
  if (c.semidihedral) os << " semidihedral";
  if (c.quaternion) os << " quaternion";
  os << "\n  n: " << c.n_min << ".." << c.n_max << "\n";
  return os.str();
}

ordered_json table_to_json(const GroupTable& table) {
  ordered_json j;
  j["order"] = table.order;
  j["generators"] = table.generators;
  j["labels"] = table.labels;
  ordered_json mul = ordered_json::array();
  for (uint32_t x = 0; x < table.order; ++x) {
    ordered_json row = ordered_json::array();
    for (uint32_t y = 0; y < table.order; ++y) row.push_back(table.at(x, y));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  j["inv"] = table.inv;
  return j;
}

void write_report(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) raise(Errc::io_error, "short write to '" + path + "'");
}

}  // namespace maxclass
