#include <gtest/gtest.h>

#include <set>

#include "gyromean/campaign.hpp"

using namespace gyromean;
using namespace gyromean::campaign;

namespace {

CampaignConfig small() {
  CampaignConfig c;
  c.trials = 60;
  c.dims = {2, 3};
  c.closed_form_fixtures = 40;
  return c;
}

}  // namespace

TEST(Config, Validation) {
  CampaignConfig c;
  EXPECT_NO_THROW(c.validate());
  c.trials = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.dims = {};
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.dims = {1};
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.cond_cap = 1.0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.only = {"no.such.property"};
  EXPECT_THROW(run_campaign(c), Error);
}

TEST(Registry, UniqueIdsAndAnchorsCovered) {
  const auto props = all_properties();
  std::set<std::string> ids;
  std::set<std::string> anchors;
  for (const auto& p : props) {
    EXPECT_TRUE(ids.insert(p.id).second) << p.id;
    EXPECT_TRUE(anchors.insert(p.anchor).second) << p.anchor;
  }
  for (const auto& a : required_anchors()) EXPECT_TRUE(anchors.count(a)) << a;
  EXPECT_EQ(anchors.size(), required_anchors().size());
}

TEST(Campaign, SmallRunPassesAndIsComplete) {
  auto cfg = small();
  cfg.findings = false;
  const auto r = run_campaign(cfg);
  EXPECT_TRUE(r.coverage_checked);
  EXPECT_TRUE(r.missing_anchors.empty());
  for (const auto& p : r.properties) {
    // Conditional samplers are sized for the default trial count; only check violations here.
    EXPECT_EQ(p.violations, 0u) << p.id << " " << p.witness;
    EXPECT_EQ(p.errors, 0u) << p.id << " " << p.witness;
    EXPECT_GT(p.samples, 0u) << p.id;
  }
}

TEST(Campaign, DeterministicAcrossThreadCounts) {
  auto a = small();
  a.threads = 1;
  auto b = small();
  b.threads = 3;
  EXPECT_EQ(run_campaign(a).to_json(false).dump(), run_campaign(b).to_json(false).dump());
}

TEST(Campaign, SeedChangesResults) {
  auto a = small();
  a.only = {"means.riccati"};
  auto b = a;
  b.seed = 43;
  EXPECT_NE(run_campaign(a).to_json(false).dump(), run_campaign(b).to_json(false).dump());
}

TEST(Campaign, SubsetSkipsCoverageAndFindings) {
  auto cfg = small();
  cfg.only = {"ball.rapidity_symmetry"};
  cfg.findings = false;
  const auto r = run_campaign(cfg);
  ASSERT_EQ(r.properties.size(), 1u);
  EXPECT_FALSE(r.coverage_checked);
  EXPECT_TRUE(r.findings.empty());
  EXPECT_TRUE(r.pass);
}

TEST(Campaign, ConditionalNeedsPremiseSamples) {
  auto cfg = small();
  cfg.trials = 5;
  cfg.dims = {2};
  cfg.only = {"order.furuta"};
  const auto r = run_campaign(cfg);
  EXPECT_EQ(r.properties[0].violations, 0u);
  EXPECT_LT(r.properties[0].premise_held, kMinPremiseHeld);
  EXPECT_FALSE(r.properties[0].pass);
}

TEST(Report, SerializationShapes) {
  auto cfg = small();
  cfg.only = {"means.riccati", "closed.det_shift"};
  const auto r = run_campaign(cfg);
  const auto j = r.to_json();
  EXPECT_TRUE(j.contains("timestamp"));
  EXPECT_FALSE(r.to_json(false).contains("timestamp"));
  EXPECT_EQ(j["environment"]["seed"], 42);
  EXPECT_EQ(j["properties"].size(), 2u);
  const auto csv = r.to_csv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.rfind("id,anchor,kind", 0), 0u);
  ASSERT_NE(r.find("closed.det_shift"), nullptr);
  EXPECT_EQ(r.find("nope"), nullptr);
}

TEST(Counterexamples, TriangleFailureAndContractionConverse) {
  const auto r = reproduce_counterexamples();
  EXPECT_TRUE(r.find("counterexample.triangle_failure")->pass);
  EXPECT_TRUE(r.find("counterexample.contraction_converse")->pass);
  EXPECT_EQ(r.find("counterexample.contraction_converse")->max_violation, -1.0);
}

TEST(Counterexamples, ReferenceValuesAreHalfTheOperatorNormSemimetric) {
  const auto r = reproduce_counterexamples();
  EXPECT_FALSE(r.find("counterexample.reference_values")->pass);
  for (const auto& f : r.findings) {
    if (f.id != "counterexample.half_operator_norm") continue;
    EXPECT_LT(f.values["max_deviation"].get<double>(), 1e-5);
    return;
  }
  FAIL() << "half operator-norm finding missing";
}
