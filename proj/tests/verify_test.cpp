#include <gtest/gtest.h>

#include <string>

#include "aslkit/verify/report.hpp"
#include "aslkit/verify/suites.hpp"
#include "test_util.hpp"

using namespace aslkit;
using namespace aslkit::verify;

namespace {

nlohmann::ordered_json without_workers(const verification_report& r) {
  auto j = to_json(r);
  j["config"].erase("workers");
  return j;
}

}  // namespace

TEST(Report, CountsAndExitCodes) {
  verification_report r;
  EXPECT_EQ(r.exit_code(), 0);
  r.pass("a");
  r.check("a", "x", true, "", "");
  EXPECT_EQ(r.exit_code(), 0);
  r.undecided("b", "y", "budget");
  EXPECT_EQ(r.exit_code(), 2);
  r.check("a", "z", false, "want", "got");
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.instances, 4);
  EXPECT_EQ(r.passed, 2);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.section_instances("a"), 3);
  EXPECT_EQ(r.section_failures("a"), 1);
  EXPECT_EQ(r.section_instances("b"), 1);
  EXPECT_EQ(r.section_instances("missing"), 0);
  ASSERT_EQ(r.failures.size(), 1U);
  EXPECT_EQ(r.failures.front(), (failure_record{"z", "want", "got"}));
}

TEST(Report, MergeKeepsOrder) {
  verification_report a;
  verification_report b;
  a.fail("s", "first", "", "");
  b.fail("s", "second", "", "");
  b.pass("t");
  a.merge(b);
  ASSERT_EQ(a.failures.size(), 2U);
  EXPECT_EQ(a.failures[0].instance, "first");
  EXPECT_EQ(a.failures[1].instance, "second");
  EXPECT_EQ(a.section_instances("s"), 2);
  EXPECT_EQ(a.section_instances("t"), 1);
  EXPECT_TRUE(a.consistent());
}

TEST(Report, LadderViolationsBecomeFailures) {
  verification_report r;
  r.ladder.record("ok", {verdict::yes, verdict::yes, true, true});
  r.ladder.record("bad", {verdict::yes, verdict::yes, false, true});
  EXPECT_EQ(r.ladder.complexes, 2);
  r.close();
  EXPECT_EQ(r.section_failures("ladder"), 1);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_TRUE(r.ladder.violations.empty());

  verification_report clean;
  clean.ladder.record("ok", {verdict::no, verdict::no, false, false});
  clean.close();
  EXPECT_EQ(clean.section_instances("ladder"), 0);
  EXPECT_EQ(clean.exit_code(), 0);
}

TEST(Report, JsonAndText) {
  verification_report r;
  r.suite = "demo";
  r.fail("s", "inst", "e", "g");
  r.undecided("s", "u", "why");
  auto j = to_json(r);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["instances"], 2);
  EXPECT_EQ(j["failures"][0]["expected"], "e");
  EXPECT_EQ(j["inconclusive"][0]["reason"], "why");
  EXPECT_EQ(j["sections"][0]["name"], "s");
  auto text = to_text(r);
  EXPECT_NE(text.find("FAIL inst"), std::string::npos);
  EXPECT_NE(text.find("INCONCLUSIVE u"), std::string::npos);
}

TEST(Suites, Names) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 7U);
  expect_errc(errc::bad_arguments, [] { run_suite("nonexistent", suite_config{}); });
  expect_errc(errc::bad_arguments, [] { run_suite("conjecture", suite_config{}); });
}

TEST(Suites, KnownPosetCounts) {
  EXPECT_EQ(posets_up_to(3).size(), 8U);
  std::size_t dist = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_posets(n)) dist += is_distributive_type(p) ? 1 : 0;
  }
  EXPECT_EQ(distributive_type_posets(4).size(), dist);
}

TEST(Suites, LaClassificationSmall) {
  suite_config cfg;
  cfg.max_p = 3;
  auto r = run_suite("la-classification", cfg);
  EXPECT_EQ(r.section_instances("equivalence"), 8);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_TRUE(r.consistent());
}

TEST(Suites, DeterministicAcrossWorkers) {
  suite_config one;
  one.max_p = 4;
  one.max_rank = 3;
  one.max_n = 3;
  suite_config two = one;
  two.workers = 2;
  for (const char* s : {"divposet", "gorenstein-level", "oracles"}) {
    auto a = run_suite(s, one);
    auto b = run_suite(s, two);
    EXPECT_EQ(without_workers(a).dump(), without_workers(b).dump()) << s;
    EXPECT_EQ(a.exit_code(), 0) << s;
  }
}

TEST(Suites, SeedChangesSamples) {
  suite_config a;
  a.max_p = 5;
  a.oracle_complexes = 5;
  a.samples = 10;
  suite_config b = a;
  b.seed = a.seed + 1;
  auto ra = run_suite("oracles", a);
  auto rb = run_suite("oracles", b);
  EXPECT_EQ(ra.exit_code(), 0);
  EXPECT_EQ(rb.exit_code(), 0);
  EXPECT_EQ(ra.section_instances("retract inequality"), 10);
  EXPECT_EQ(to_json(run_suite("oracles", a)).dump(), to_json(ra).dump());
}

TEST(Suites, Conjecture) {
  suite_config cfg;
  cfg.facets_file = fixture_path(cfg, "triangle_boundary.facets");
  auto r = run_suite("conjecture", cfg);
  EXPECT_EQ(r.section_instances("level"), 4);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_GT(r.ladder.complexes, 0);
  EXPECT_EQ(r.config["observations"].size(), 4U);
}
