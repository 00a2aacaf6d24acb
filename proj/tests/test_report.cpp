#include <algorithm>

#include "doctest.h"
#include "maxclass/report.hpp"
#include "maxclass/wreath.hpp"

using namespace maxclass;

namespace {

CampaignOptions small_campaign() {
  CampaignOptions opt;
  opt.families = {Family::dihedral, Family::quaternion};
  opt.n_min = 3;
  opt.n_max = 4;
  opt.checks = {"mul_formula", "unit_criterion", "h_subgroup"};
  opt.seed = 99;
  return opt;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("campaigns are reproducible for a fixed seed") {
  VerificationReport a = run_campaign(small_campaign());
  VerificationReport b = run_campaign(small_campaign());
  ordered_json ja = report_to_json(a), jb = report_to_json(b);
  ja.erase("generated_at");
  ja.erase("total_elapsed_ms");
  jb.erase("generated_at");
  jb.erase("total_elapsed_ms");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("entries cover the requested grid exactly once") {
  VerificationReport r = run_campaign(small_campaign());
  // 3 checks x 2 families x 2 values of n
  CHECK(r.entries.size() == 12);
  // registry order: mul_formula before unit_criterion before h_subgroup;
  // families d before q; n ascending
  CHECK(r.entries.front().check == "mul_formula");
  CHECK(r.entries.front().family == Family::dihedral);
  CHECK(r.entries.front().n == 3);
  CHECK(r.entries.back().check == "h_subgroup");
  // h_subgroup does not apply to the quaternion family
  for (const ReportEntry& e : r.entries)
    if (e.check == "h_subgroup" && e.family == Family::quaternion)
      CHECK(e.status == "skipped");
  CHECK(r.all_passed());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("the semidihedral gap at n = 3 is reported as skipped") {
  CampaignOptions opt;
  opt.families = {Family::semidihedral};
  opt.n_min = 3;
  opt.n_max = 4;
  opt.checks = {"mul_formula"};
  VerificationReport r = run_campaign(opt);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].status == "skipped");
  CHECK(r.entries[0].detail == "no semidihedral group of order 8");
  CHECK(r.entries[1].status == "pass");
}

TEST_CASE("empty selection gives an empty passing report") {
  CampaignOptions opt;
  opt.checks = {};
  VerificationReport r = run_campaign(opt);
  CHECK(r.entries.empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("campaigns validate their inputs") {
  CampaignOptions opt = small_campaign();
  opt.n_min = 2;
  CHECK_THROWS_AS(run_campaign(opt), Error);
  opt = small_campaign();
  opt.n_max = 9;
  CHECK_THROWS_AS(run_campaign(opt), Error);
  opt = small_campaign();
  opt.n_min = 5;
  opt.n_max = 4;
  CHECK_THROWS_AS(run_campaign(opt), Error);
  opt = small_campaign();
  opt.checks = {"no_such_check"};
  CHECK_THROWS_AS(run_campaign(opt), Error);
}

TEST_CASE("json layout is stable and witness-bearing") {
  VerificationReport r = run_campaign(small_campaign());
  ordered_json j = report_to_json(r);
  CHECK(j["tool"] == "maxclass");
  CHECK(j["seed"] == 99);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["entries"].size() == r.entries.size());
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("check"));
    CHECK(e.contains("status"));
    CHECK_FALSE(e.contains("elapsed_ms"));
  }
}

TEST_CASE("text rendering carries per-entry timing and a summary") {
  VerificationReport r = run_campaign(small_campaign());
  std::string text = report_to_text(r);
  CHECK(text.find("summary:") != std::string::npos);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("ms") != std::string::npos);
}

TEST_CASE("explain covers every registered check") {
  for (const std::string& id : all_check_ids()) {
    std::string text = explain(id);
    CHECK(text.find(id) == 0);
    CHECK(text.find("claim:") != std::string::npos);
    CHECK(text.find("method:") != std::string::npos);
  }
  CHECK(all_check_ids().size() == 27);
  CHECK_THROWS_AS(explain("bogus"), Error);
}

TEST_CASE("tables export to json") {
  GroupTable w = build_wreath(2);
  ordered_json j = table_to_json(w);
  CHECK(j["order"] == w.order);
  CHECK(j["mul"].size() == w.order);
  CHECK(j["labels"].size() == w.order);
}

TEST_CASE("report files require a writable path") {
  CHECK_THROWS_AS(write_report("/nonexistent-dir/report.json", "{}"), Error);
}

}  // TEST_SUITE
