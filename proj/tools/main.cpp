#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxclass/report.hpp"
#include "maxclass/wreath.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : list) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<maxclass::Family> parse_families(const std::string& f) {
  using maxclass::Family;
  if (f == "all")
    return {Family::dihedral, Family::semidihedral, Family::quaternion};
  return {maxclass::family_from_string(f)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verified arithmetic in modular group algebras of 2-groups "
               "of maximal class"};
  app.require_subcommand(1);

  std::string family = "all";
  int n_min = 3, n_max = 5;
  std::string checks = "all";
  uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";

  CLI::App* verify = app.add_subcommand(
      "verify", "run verification checks over a family/n grid");
  verify->add_option("--family", family, "d, s, q, or all")
      ->check(CLI::IsMember({"d", "s", "q", "all"}));
  verify->add_option("--n-min", n_min, "smallest n (group order 2^n)");
  verify->add_option("--n-max", n_max, "largest n");
  verify->add_option("--checks", checks,
                     "comma-separated check ids, or all");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--out", out_path, "write the report to this path");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string explain_id;
  CLI::App* explain_cmd =
      app.add_subcommand("explain", "describe one check: claim and method");
  explain_cmd->add_option("check_id", explain_id, "check id")->required();

  std::string export_path;
  int wreath_m = -1;
  std::string table_family;
  int table_n = 0;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "export a multiplication table as JSON");
  table_cmd->add_option("--export", export_path, "output path")->required();
  table_cmd->add_option("--wreath", wreath_m,
                        "base-2 wreath product with cyclic top of order 2^m");
  table_cmd->add_option("--family", table_family,
                        "section quotient for this family (d, s, or q)");
  table_cmd->add_option("--n", table_n, "n for the section quotient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*verify) {
      maxclass::CampaignOptions opt;
      opt.families = parse_families(family);
      opt.n_min = n_min;
      opt.n_max = n_max;
      opt.checks = checks == "all" ? maxclass::all_check_ids()
                                   : split_ids(checks);
      opt.seed = seed;
      opt.out_path = out_path;
      opt.format = format == "text" ? maxclass::ReportFormat::text
                                    : maxclass::ReportFormat::json;
      maxclass::VerificationReport rep = maxclass::run_campaign(opt);
      std::string rendered = opt.format == maxclass::ReportFormat::text
                                 ? maxclass::report_to_text(rep)
                                 : maxclass::report_to_json(rep).dump(2) + "\n";
      if (!out_path.empty()) {
        maxclass::write_report(out_path, rendered);
        uint32_t np = 0, nf = 0, ns = 0;
        for (const auto& e : rep.entries) {
          if (e.status == "pass")
            ++np;
          else if (e.status == "fail")
            ++nf;
          else
            ++ns;
        }
        std::cout << "wrote " << out_path << ": " << np << " pass, " << nf
                  << " fail, " << ns << " skipped\n";
      } else {
        std::cout << rendered;
      }
      return rep.exit_code();
    }
    if (*explain_cmd) {
      std::cout << maxclass::explain(explain_id);
      return 0;
    }
    if (*table_cmd) {
      maxclass::GroupTable table;
      if (wreath_m >= 0) {
        table = maxclass::build_wreath(static_cast<uint32_t>(wreath_m));
      } else if (!table_family.empty()) {
        maxclass::GroupSpec spec =
            maxclass::make_group(maxclass::family_from_string(table_family),
                                 table_n);
        maxclass::SectionResult sec =
            spec.family == maxclass::Family::quaternion
                ? maxclass::construct_section_q(spec)
                : maxclass::construct_section_ds(spec);
        table = std::move(sec.section.quotient);
      } else {
        std::cerr << "table: pass --wreath <m> or --family <f> --n <n>\n";
        return 2;
      }
      maxclass::write_report(export_path,
                             maxclass::table_to_json(table).dump(2) + "\n");
      std::cout << "wrote " << export_path << " (order " << table.order
                << ")\n";
      return 0;
    }
  } catch (const maxclass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
