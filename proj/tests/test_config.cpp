#include <gtest/gtest.h>

#include <cmath>

#include "hybridom/config.hpp"
#include "hybridom/errors.hpp"
#include "hybridom/presets.hpp"

using namespace hybridom;

namespace {

ConfigError parse_error(const std::string& text) {
  try {
    parse_config(text, "test.yaml");
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ConfigError for:\n" << text;
  return ConfigError("none", "none");
}

}  // namespace

TEST(ParseConfig, Fig2aPreset) {
  const SweepConfig cfg = load_preset("fig2a");
  ASSERT_TRUE(cfg.axis.has_value());
  EXPECT_EQ(cfg.axis->name, "xi_m_ratio");
  EXPECT_EQ(cfg.axis->from, 0.0);
  EXPECT_EQ(cfg.axis->to, 0.999);
  EXPECT_EQ(cfg.axis->points, 200);
  EXPECT_EQ(cfg.base.C0, 100.0);
  EXPECT_EQ(cfg.series.size(), 4u);
  ASSERT_EQ(cfg.observables.size(), 1u);
  EXPECT_EQ(cfg.observables[0].kind, ObservableKind::Gain);
  EXPECT_EQ(cfg.observables[0].mode, Subsystem::Optical);
}

TEST(ParseConfig, AllPresetsLoad) {
  const auto ids = preset_ids();
  EXPECT_EQ(ids.size(), 10u);
  for (const auto& id : ids) EXPECT_NO_THROW(load_preset(id)) << id;
  EXPECT_THROW(load_preset("fig9"), ConfigError);
}

TEST(ParseConfig, PresetBathOccupancies) {
  for (const char* id : {"fig3a", "fig3b", "fig3c", "fig3d", "fig5a", "fig5b"}) {
    const SweepConfig cfg = load_preset(id);
    EXPECT_EQ(cfg.base.n_m, 100.0) << id;
    EXPECT_EQ(cfg.base.n_a, 0.0) << id;
    EXPECT_EQ(cfg.base.n_d, 0.0) << id;
  }
}

TEST(ParseConfig, NegativeRateRejected) {
  const ConfigError e = parse_error("params:\n  C0: 1\n  gamma_m: -1\nobservables: [gain:optical]\n");
  EXPECT_EQ(e.line(), 3);
  EXPECT_NE(std::string(e.what()).find("gamma_m"), std::string::npos);
}

TEST(ParseConfig, EmptyObservablesRejected) {
  const ConfigError e = parse_error("params: {C0: 1}\nobservables: []\n");
  EXPECT_NE(std::string(e.what()).find("observables"), std::string::npos);
  parse_error("params: {C0: 1}\n");
}

TEST(ParseConfig, UnknownKeyHasLocation) {
  const ConfigError e = parse_error("params:\n  C0: 1\n  Cx: 2\nobservables: [gain:optical]\n");
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 3);
  EXPECT_NE(std::string(e.what()).find("Cx"), std::string::npos);
  EXPECT_NE(std::string(e.what()).find("test.yaml:3:3"), std::string::npos);
  const ConfigError top = parse_error("params: {C0: 1}\nobservables: [gain:optical]\nextra: 1\n");
  EXPECT_EQ(top.line(), 3);
}

TEST(ParseConfig, SyntaxErrorHasLocation) {
  const ConfigError e = parse_error("params: {C0: 1\nobservables: [gain:optical]\n");
  EXPECT_GT(e.line(), 0);
}

TEST(ParseConfig, SchemaViolations) {
  parse_error("params: {C0: 1}\nobservables: [gain:nowhere]\n");
  parse_error("params: {C0: 1}\nobservables: [noise:optical]\n");
  parse_error("params: {C0: .nan}\nobservables: [gain:optical]\n");
  parse_error("params: {C0: -1}\nobservables: [gain:optical]\n");
  parse_error("params: {n_m: -0.5}\nobservables: [gain:optical]\n");
  parse_error("params: {C0: abc}\nobservables: [gain:optical]\n");
  parse_error("params: {C0: 1}\nsweep: {axis: C1, from: 0, to: 1, points: 1}\nobservables: [gain:optical]\n");
  parse_error("params: {C0: 1}\nsweep: {axis: C1, from: 0, to: 1, points: 5, scale: log}\nobservables: [gain:optical]\n");
  parse_error("params: {C0: 1}\nsweep: {axis: bogus, from: 0, to: 1, points: 5}\nobservables: [gain:optical]\n");
  parse_error("params: {C0: 1}\nseries: [{label: a}, {label: a}]\nobservables: [gain:optical]\n");
  parse_error("params: {C0: 1}\nseries: [{label: 'a:b'}]\nobservables: [gain:optical]\n");
  parse_error("params: {C0: 1}\nphysical: {kappa: 1, gamma_m: 1, gamma_d: 1}\nobservables: [gain:optical]\n");
  parse_error("params: {xi_m_rule: nonsense}\nobservables: [gain:optical]\n");
}

TEST(ParseConfig, PhysicalBlock) {
  const SweepConfig cfg = parse_config(
      "physical:\n  kappa: 100\n  gamma_m: 2\n  gamma_d: 4\n  g: 5\n  G: 2\n  lambda_m: 0.5\n  lambda_d: 1\n"
      "observables: [gain:optical]\n");
  const DimensionlessParams d = resolve(cfg.base);
  EXPECT_NEAR(d.C0, 4 * 25 / (100.0 * 2), 1e-15);
  EXPECT_NEAR(d.C1, 4 * 4 / (100.0 * 4), 1e-15);
  EXPECT_NEAR(d.xi_m, 0.5, 1e-15);
  EXPECT_NEAR(d.xi_d, 0.5, 1e-15);
  EXPECT_NEAR(d.kappa, 50, 1e-12);
  EXPECT_NEAR(d.gamma_d, 2, 1e-15);
}

TEST(ParseConfig, SingleSeriesDefault) {
  const SweepConfig cfg = parse_config("params: {C0: 1}\nobservables: [stability]\n");
  ASSERT_EQ(cfg.series.size(), 1u);
  EXPECT_EQ(cfg.series[0].label, "");
  EXPECT_FALSE(cfg.axis.has_value());
  EXPECT_EQ(cfg.observables[0].kind, ObservableKind::Stability);
}

TEST(SweepAxis, EndpointsPinned) {
  SweepAxis a{"C0", 1, 1e5, 200, AxisScale::Log};
  const auto v = a.values();
  ASSERT_EQ(v.size(), 200u);
  EXPECT_EQ(v.front(), 1.0);
  EXPECT_EQ(v.back(), 1e5);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GT(v[i], v[i - 1]);
  EXPECT_NEAR(v[1] / v[0], v[2] / v[1], 1e-12);
  SweepAxis b{"xi_m_ratio", 0, 0.999, 4, AxisScale::Linear};
  const auto w = b.values();
  EXPECT_EQ(w.front(), 0.0);
  EXPECT_EQ(w.back(), 0.999);
  EXPECT_NEAR(w[1], 0.333, 1e-15);
}

TEST(ParamLayer, MergeReplacesXiForms) {
  ParamLayer base;
  base.xi_m = 0.3;
  base.C0 = 4;
  ParamLayer over;
  over.xi_m_ratio = 0.5;
  base.merge(over);
  EXPECT_FALSE(base.xi_m.has_value());
  EXPECT_EQ(base.xi_m_ratio, 0.5);
  EXPECT_EQ(base.C0, 4.0);
  ParamLayer rule;
  rule.xi_m_rule = XiRule::MechSqueezeCaseI;
  base.merge(rule);
  EXPECT_FALSE(base.xi_m_ratio.has_value());
  EXPECT_TRUE(base.xi_m_rule.has_value());
  EXPECT_FALSE(base.set("nonsense", 1));
  EXPECT_TRUE(base.set("n_d", 2));
  EXPECT_EQ(base.n_d, 2.0);
}

TEST(Resolve, RatiosUseCollectiveBounds) {
  ParamLayer l;
  l.C0 = 100;
  l.C1 = 1;
  l.xi_m_ratio = 0.5;
  DimensionlessParams d = resolve(l);
  EXPECT_NEAR(d.xi_m, 0.5 * (1 + 100 / 2.0), 1e-12);
  l.xi_d_ratio = 0.5;
  d = resolve(l);
  DimensionlessParams probe = d;
  probe.xi_m = 0;
  probe.xi_d = 0;
  EXPECT_NEAR(d.xi_d, 0.5 * collective_cooperativities(probe).xi_d_max, 1e-12);
  probe.xi_d = d.xi_d;
  EXPECT_NEAR(d.xi_m, 0.5 * collective_cooperativities(probe).xi_m_max, 1e-12);
}

TEST(Resolve, Rules) {
  ParamLayer l;
  l.C0 = 1;
  l.C1 = 100;
  l.xi_d = 0;
  l.xi_m_rule = XiRule::MechSqueezeCaseI;
  EXPECT_NEAR(resolve(l).xi_m, 2 - (1 + 1 / 101.0), 1e-15);
  l.xi_m_rule = XiRule::OpticalSqueezeMax;
  l.C0 = 31623;
  l.C1 = 0.01;
  EXPECT_NEAR(resolve(l).xi_m, 31623 / 0.99 - 1, 1e-9);
  l.C1 = 2;  // needs C1 < 1
  EXPECT_THROW(resolve(l), Error);
  ParamLayer m;
  m.C0 = 10;
  m.C1 = 50;
  m.xi_m = 0;
  m.xi_d_rule = XiRule::MechSqueezeCaseII;
  EXPECT_NEAR(resolve(m).xi_d, 41 / 9.0, 1e-14);
  m.C0 = 1;
  EXPECT_THROW(resolve(m), Error);
}

TEST(Resolve, MissingCooperativityRejected) {
  ParamLayer l;
  l.C0 = -1;
  EXPECT_THROW(resolve(l), InvalidParameter);
}

TEST(ParseObservable, RoundTrip) {
  for (const char* s : {"gain:optical", "added_noise:mech", "amplified_spectrum:bog", "squeezing:optical",
                        "purity:mech", "cross_correlation:bog", "bandwidth:optical", "stability"}) {
    const auto o = parse_observable(s);
    ASSERT_TRUE(o.has_value()) << s;
    EXPECT_EQ(o->to_string(), s);
  }
  EXPECT_FALSE(parse_observable("gain").has_value());
  EXPECT_FALSE(parse_observable("gain:cavity").has_value());
}
