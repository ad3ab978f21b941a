#include <gtest/gtest.h>

#include <set>

#include "locprime/harness.hpp"

using namespace locprime;

namespace {

std::vector<std::string> recipes(const std::vector<Instance>& v) {
  std::vector<std::string> out;
  for (const auto& in : v) out.push_back(in.recipe);
  return out;
}

const CheckReport& report_for(const SuiteResult& s, const std::string& id) {
  for (const auto& r : s.reports)
    if (r.theorem_id == id) return r;
  throw std::runtime_error("no report " + id);
}

}  // namespace

TEST(Corpus, DefaultHasAtLeastSixtyFiniteRings) {
  const auto c = build_corpus({});
  long long finite = 0;
  for (const auto& in : c) finite += in.ring != nullptr;
  EXPECT_GE(finite, 60);
  const auto r = recipes(c);
  EXPECT_EQ(std::set<std::string>(r.begin(), r.end()).size(), r.size());
  for (const char* must : {"zmod(16)", "gf(4)", "mat(2, gf(2))", "tri(2, gf(2))", "an(n=3)"})
    EXPECT_NE(std::find(r.begin(), r.end(), must), r.end()) << must;
  EXPECT_EQ(std::find(r.begin(), r.end(), "tri(2, gf(3))"), r.end());  // order 27
}

TEST(Corpus, CapSixIsExactlyTheSmallRings) {
  CorpusConfig cfg;
  cfg.order_cap = 6;
  cfg.allow = {"zmod", "gf", "mat", "tri", "prod", "quot"};
  const auto r = recipes(build_corpus(cfg));
  std::vector<std::string> bases;
  for (int n = 2; n <= 6; ++n) bases.push_back("zmod(" + std::to_string(n) + ")");
  for (int q = 2; q <= 4; ++q) bases.push_back("gf(" + std::to_string(q) + ")");
  const std::vector<int> ord{2, 3, 4, 5, 6, 2, 3, 4};
  std::set<std::string> expected(bases.begin(), bases.end());
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i; j < bases.size(); ++j)
      if (ord[i] * ord[j] <= 6) expected.insert("prod(" + bases[i] + ", " + bases[j] + ")");
  std::set<std::string> got_plain;
  for (const auto& s : r) {
    if (s.rfind("quot(", 0) == 0) {
      const auto in = instance_from_recipe(s, 1);
      EXPECT_LT(in.ring->order(), 6) << s;
      const std::string base = s.substr(5, s.find(", gens=") - 5);
      EXPECT_TRUE(expected.count(base)) << s;
    } else {
      got_plain.insert(s);
    }
  }
  EXPECT_EQ(got_plain, expected);
  // zmod(4), zmod(6), F2xF2, F2xF3 and its relabelings each have proper nonzero ideals
  EXPECT_GT(r.size(), expected.size());
}

TEST(Corpus, EmptyAllowListAndBadCap) {
  CorpusConfig cfg;
  cfg.allow.clear();
  EXPECT_TRUE(build_corpus(cfg).empty());
  cfg = {};
  cfg.order_cap = 1;
  EXPECT_THROW(build_corpus(cfg), Error);
}

TEST(Corpus, RecipesRebuildIdenticalInstances) {
  for (const auto& in : build_corpus({})) {
    const auto again = instance_from_recipe(in.recipe, in.seed);
    if (in.ring) { EXPECT_TRUE(again.ring->same_tables(*in.ring)) << in.recipe; }
    if (in.comm) { EXPECT_EQ(again.comm->gens, in.comm->gens) << in.recipe; }
    if (in.an) { EXPECT_EQ(again.an->m, in.an->m) << in.recipe; }
  }
}

TEST(RunSuite, SingleCheckOnZmod6) {
  const auto s = run_suite({instance_from_recipe("zmod(6)", 1)}, {"A10Sep23"});
  ASSERT_EQ(s.reports.size(), 2u);
  EXPECT_EQ(s.reports[0].theorem_id, kAxiomsId);
  const auto& r = report_for(s, "A10Sep23");
  EXPECT_EQ(r.considered, 1);
  EXPECT_EQ(r.passed, r.applicable);
  EXPECT_TRUE(s.clean());
}

TEST(RunSuite, UnknownIdIsRejected) {
  try {
    run_suite({}, {"Z99Xyz00"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_theorem);
  }
}

TEST(RunSuite, ReportsAreConsistent) {
  CorpusConfig cfg;
  cfg.order_cap = 8;
  const auto s = run_suite(build_corpus(cfg));
  for (const auto& r : s.reports) {
    EXPECT_TRUE(r.consistent()) << r.theorem_id;
    EXPECT_LE(r.applicable, r.considered) << r.theorem_id;
  }
  EXPECT_TRUE(s.errors.empty());
}

TEST(RunSuite, NotApplicableIsNeverPassed) {
  // zmod(4) is not semiprime, so the semiprime-only checks do not apply.
  const auto s = run_suite({instance_from_recipe("zmod(4)", 1)}, {"A10Sep23", "28Sep23", "B25Sep23"});
  for (const auto& r : s.reports) {
    if (r.theorem_id == kAxiomsId) continue;
    EXPECT_EQ(r.considered, 1) << r.theorem_id;
    EXPECT_EQ(r.applicable, 0) << r.theorem_id;
    EXPECT_EQ(r.passed, 0) << r.theorem_id;
  }
}

TEST(RunSuite, TrackFilter) {
  SuiteOptions opt;
  opt.monomial_track = false;
  const auto s = run_suite({instance_from_recipe("zmod(6)", 1), instance_from_recipe("an(n=1)", 1)}, opt);
  EXPECT_EQ(s.instances, 1);
  for (const auto& r : s.reports) EXPECT_EQ(r.applicable_by_track.count("an"), 0u);
}

TEST(Determinism, MachineOutputIgnoresJobCount) {
  CorpusConfig cfg;
  cfg.order_cap = 8;
  const auto corpus = build_corpus(cfg);
  SuiteOptions one, three;
  three.jobs = 3;
  EXPECT_EQ(to_json(run_suite(corpus, one)).dump(), to_json(run_suite(corpus, three)).dump());
}

TEST(Format, MachineFieldNames) {
  const auto st = fault_selftest();
  const auto j = to_json(st.result);
  for (const char* k : {"instances", "counterexamples", "budget_exceeded", "coverage_missing", "engine_errors", "reports"})
    EXPECT_TRUE(j.contains(k)) << k;
  const auto& rep = j["reports"][0];
  for (const char* k : {"theorem_id", "applicable", "passed", "counterexamples"}) EXPECT_TRUE(rep.contains(k)) << k;
  EXPECT_FALSE(rep.contains("wall_ms"));
  ASSERT_EQ(rep["counterexamples"].size(), 1u);
  EXPECT_TRUE(rep["counterexamples"][0].contains("provenance"));
}

TEST(SelfTest, FaultYieldsExactlyOneCounterexample) {
  const auto st = fault_selftest();
  EXPECT_TRUE(st.ok());
  const auto& ax = st.result.reports.front();
  EXPECT_EQ(ax.counterexamples.size(), 1u);
  for (std::size_t k = 1; k < st.result.reports.size(); ++k) EXPECT_EQ(st.result.reports[k].considered, 0);
  const std::string text = explain(ax, 0);
  EXPECT_NE(text.find("zmod(5) with mul(2,3)=2"), std::string::npos);
  EXPECT_NE(text.find("failed clause: ring axioms hold"), std::string::npos);
  try {
    explain(ax, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::index_out_of_range);
  }
}

TEST(SelfTest, WitnessReparsesToIdenticalInstance) {
  const auto st = fault_selftest();
  const auto& cx = st.result.reports.front().counterexamples.front();
  ASSERT_TRUE(cx.fault.has_value());
  const auto rebuilt = inject_fault(instance_from_recipe(cx.recipe, cx.seed), *cx.fault);
  EXPECT_TRUE(rebuilt.ring->same_tables(*st.faulty.ring));
  EXPECT_EQ(rebuilt.provenance(), cx.provenance);
}

TEST(Render, EmptyReportSaysNoCounterexamples) {
  const auto s = run_suite({instance_from_recipe("gf(2)", 1)}, {"A11Sep23"});
  EXPECT_NE(render_text(s.reports[1]).find("no counterexamples"), std::string::npos);
}

TEST(Registry, CoversEveryInScopeLabel) {
  const auto reg = build_registry();
  EXPECT_TRUE(coverage_gaps(reg).empty());
  std::set<std::string> ids;
  for (const auto& c : reg) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
}
