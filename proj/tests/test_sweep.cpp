// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "wgqed/config.hpp"
#include "wgqed/export.hpp"
#include "wgqed/presets.hpp"
#include "wgqed/sweep.hpp"

using namespace wgqed;

namespace {

constexpr double pi = std::numbers::pi;

std::string csv_of(const SweepResult& r)
{
  std::ostringstream os;
  write_csv(r, os);
  return os.str();
}

SweepGrid two_axis_grid()
{
  SweepGrid g;
  g.model = Model::two_level;
  g.base.big_gamma = 0.7;
  g.base.gamma1 = 0.3;
  g.base.gamma2 = 0.05;
  g.axes = {{ParamId::lambda, 0.0, 1.0, 3}, {ParamId::theta, 0.0, pi, 4}};
  return g;
}

std::filesystem::path temp_file(const std::string& name)
{
  return std::filesystem::temp_directory_path() / ("wgqed_test_" + name);
}

}  // namespace

TEST(Sweep, DecoupledThetaScan)
{
  SweepGrid g;
  g.model = Model::three_level;
  g.base.gamma1 = 0.2;
  g.base.delta1 = 0.5;
  g.base.delta3 = 0.3;
  g.base.gamma2 = 0.1;
  g.axes = {{ParamId::theta, 0.0, 2 * pi, 5}};
  const SweepResult r = run_sweep(g);
  ASSERT_EQ(r.rows.size(), 5u);
  for (const SweepRow& row : r.rows)
  {
    ASSERT_FALSE(row.singular);
    EXPECT_LT(std::abs(row.amps.t - 1.0), 1e-15);
    EXPECT_EQ(row.amps.r_f, cplx(0.0));
    EXPECT_EQ(row.amps.r_b, cplx(0.0));
  }
  EXPECT_EQ(r.rows.back().params.theta, 2 * pi);
}

TEST(Sweep, RowsAreLexicographic)
{
  const SweepGrid g = two_axis_grid();
  const SweepResult r = run_sweep(g, 3);
  ASSERT_EQ(r.rows.size(), 12u);
  for (std::size_t i = 0; i < 3; ++i)
  {
    for (std::size_t j = 0; j < 4; ++j)
    {
      const SweepRow& row = r.rows[i * 4 + j];
      EXPECT_EQ(row.params.lambda, g.axes[0].value(i));
      EXPECT_EQ(row.params.theta, g.axes[1].value(j));
      const AmplitudeSet direct = eval_two_level(row.params);
      EXPECT_EQ(row.amps.t, direct.t);
      EXPECT_EQ(row.amps.r_f, direct.r_f);
    }
  }
}

TEST(Sweep, ThreadCountDoesNotChangeOutput)
{
  const SweepGrid g = preset_variant("fig4", "cdef").grid;
  const std::string one = csv_of(run_sweep(g, 1));
  EXPECT_EQ(csv_of(run_sweep(g, 8)), one);
  EXPECT_EQ(csv_of(run_sweep(g, 3)), one);
}

TEST(Sweep, LinksResolveAfterAxes)
{
  SweepGrid g = two_axis_grid();
  g.axes = {{ParamId::delta1, -1.0, 1.0, 5}};
  g.links = {{ParamId::delta2, ParamId::delta1, 0.25}};
  const SweepResult r = run_sweep(g);
  for (const SweepRow& row : r.rows)
  {
    EXPECT_EQ(row.params.delta2, row.params.delta1 + 0.25);
  }
}

TEST(Sweep, SingularPointsAreFlagged)
{
  SweepGrid g;
  g.model = Model::two_level;
  g.base.theta = 0.5;
  g.axes = {{ParamId::big_gamma, 0.0, 1.0, 2}};
  const SweepResult r = run_sweep(g);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.rows[0].singular);
  EXPECT_FALSE(r.rows[1].singular);

  std::istringstream in(csv_of(r));
  const CsvTable t = read_csv(in);
  ASSERT_EQ(t.rows.size(), 2u);
  const auto& bad = t.rows[0];
  ASSERT_EQ(bad.size(), t.header.size());
  EXPECT_EQ(bad.back(), "singular");
  for (std::size_t c = kAllParams.size(); c + 1 < bad.size(); ++c)
  {
    EXPECT_TRUE(bad[c].empty()) << t.header[c];
  }
  EXPECT_EQ(t.rows[1].back(), "ok");
}

TEST(Sweep, InvalidGridsRejected)
{
  SweepGrid g = two_axis_grid();
  g.axes.push_back({ParamId::delta1, 0.0, 1.0, 2});
  EXPECT_THROW(run_sweep(g), ConfigError);

  g = two_axis_grid();
  g.axes[0].count = 1;
  EXPECT_THROW(run_sweep(g), ConfigError);

  g = two_axis_grid();
  g.axes[0].stop = g.axes[0].start;
  EXPECT_THROW(run_sweep(g), ConfigError);

  g = two_axis_grid();
  g.links = {{ParamId::theta, ParamId::delta1, 0.0}};
  EXPECT_THROW(run_sweep(g), ConfigError);

  g = two_axis_grid();
  g.axes = {{ParamId::gamma1, -1.0, 1.0, 3}};
  EXPECT_THROW(run_sweep(g), InvalidParameter);
}

TEST(Export, HeaderAndRowCount)
{
  SweepGrid g = two_axis_grid();
  g.axes = {{ParamId::theta, 0.0, 1.0, 2}};
  const std::string csv = csv_of(run_sweep(g));
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "delta1,delta2,delta3,gamma1,gamma2,gamma3,big_gamma,lambda,omega,theta,"
            "t_re,t_im,rf_re,rf_im,rb_re,rb_im,T,R_f,R_b,A_f,A_b,"
            "s_plus_re,s_plus_im,s_minus_re,s_minus_im,gap,flag");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Export, CsvRoundTripIsBitExact)
{
  const SweepResult r = run_sweep(preset_variant("fig6", "theta0.1pi").grid, 4);
  std::istringstream in(csv_of(r));
  const CsvTable t = read_csv(in);
  ASSERT_EQ(t.rows.size(), r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); i += 97)
  {
    const auto values = result_values(r.rows[i]);
    for (std::size_t k = 0; k < values.size(); ++k)
    {
      EXPECT_EQ(std::strtod(t.rows[i][kAllParams.size() + k].c_str(), nullptr), values[k]);
    }
    for (std::size_t k = 0; k < kAllParams.size(); ++k)
    {
      EXPECT_EQ(std::strtod(t.rows[i][k].c_str(), nullptr),
                param_value(r.rows[i].params, kAllParams[k]));
    }
  }
}

TEST(Export, JsonCarriesMetadata)
{
  const PresetVariant& pv = preset_variant("fig2", "ef");
  SweepGrid g = pv.grid;
  g.axes[0].count = 4;
  const SweepResult r = run_sweep(g);
  const auto doc = to_json(r);
  EXPECT_EQ(doc["metadata"]["preset"], "fig2:ef");
  EXPECT_EQ(doc["metadata"]["tool_version"], std::string(kToolVersion));
  EXPECT_EQ(doc["metadata"]["inferred"].size(), pv.grid.inferred.size());
  ASSERT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["rows"][1]["R_f"].get<double>(), r.rows[1].amps.R_f);
  EXPECT_EQ(doc["rows"][1]["flag"], "ok");
}

TEST(Export, WritesFilesAndReportsIoErrors)
{
  SweepGrid g = two_axis_grid();
  const SweepResult r = run_sweep(g);
  const auto path = temp_file("export.json");
  export_result(r, ExportFormat::json, path.string());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["rows"].size(), r.rows.size());
  std::filesystem::remove(path);

  EXPECT_THROW(export_result(r, ExportFormat::csv, "/nonexistent-dir/x.csv"), IoError);
  EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(Presets, CaptionValues)
{
  const SweepGrid& f4 = preset_variant("fig4").grid;
  EXPECT_EQ(f4.model, Model::two_level);
  EXPECT_EQ(f4.base.big_gamma, 0.5);
  EXPECT_EQ(f4.base.gamma1, 1.0);
  EXPECT_EQ(f4.base.gamma2, 0.01);

  const SweepGrid& f2 = preset_variant("fig2").grid;
  EXPECT_EQ(f2.model, Model::three_level);
  EXPECT_DOUBLE_EQ(f2.base.theta, 0.1 * pi);
  EXPECT_EQ(f2.base.omega, 0.1);
  EXPECT_EQ(f2.base.big_gamma, 1.2);
  EXPECT_EQ(f2.base.gamma1, 0.27);
  EXPECT_EQ(f2.base.gamma2, 0.001);
  EXPECT_EQ(f2.base.gamma3, 0.001);
  ASSERT_EQ(f2.axes.size(), 2u);
  EXPECT_EQ(f2.axes[0].param, ParamId::lambda);
  EXPECT_EQ(f2.axes[1].param, ParamId::delta1);
  EXPECT_EQ(f2.links, (std::vector<Link>{{ParamId::delta2, ParamId::delta1, 0.0},
                                         {ParamId::delta3, ParamId::delta1, 1.0}}));
  EXPECT_FALSE(f2.inferred.empty());

  const Preset& f6 = preset("fig6");
  ASSERT_EQ(f6.variants.size(), 2u);
  for (const PresetVariant& v : f6.variants)
  {
    EXPECT_EQ(v.grid.base.big_gamma, 1.7);
    EXPECT_EQ(v.grid.base.gamma1, 0.32);
    EXPECT_EQ(v.grid.base.gamma2, 0.01);
    EXPECT_EQ(v.grid.base.delta1, 0.0);
    EXPECT_EQ(v.grid.axes[0].param, ParamId::lambda);
    EXPECT_EQ(v.grid.axes[1].param, ParamId::delta2);
    EXPECT_EQ(v.ep_slices.size(), 1u);
  }
  EXPECT_DOUBLE_EQ(f6.variants[0].grid.base.theta, 0.1 * pi);
  EXPECT_DOUBLE_EQ(f6.variants[1].grid.base.theta, 0.9 * pi);
}

TEST(Presets, AllValidAndInferredListed)
{
  for (const Preset& p : presets())
  {
    for (const PresetVariant& v : p.variants)
    {
      EXPECT_NO_THROW(validate_grid(v.grid)) << v.grid.label;
      EXPECT_FALSE(v.grid.inferred.empty()) << v.grid.label;
      EXPECT_LE(row_count(v.grid), 400000u) << v.grid.label;
    }
  }
  EXPECT_THROW(preset("fig9"), ConfigError);
  EXPECT_THROW(preset_variant("fig4", "zz"), ConfigError);
  try
  {
    preset("fig9");
  }
  catch (const ConfigError& e)
  {
    EXPECT_NE(std::string(e.what()).find("fig2, fig3, fig4, fig5, fig6, fig7"), std::string::npos);
  }
}

TEST(Presets, Fig4ThetaScanMinima)
{
  // lambda = 0: R_f dips at theta = pi/2 and 3 pi/2; lambda = 1: R_b dips at 3 pi/2.
  const SweepResult r = run_sweep(preset_variant("fig4", "cdef").grid);
  const std::size_t n = 721;
  ASSERT_EQ(r.rows.size(), 2 * n);
  auto local_minima = [&](std::size_t offset, bool forward) {
    std::vector<double> at;
    for (std::size_t j = 1; j + 1 < n; ++j)
    {
      auto R = [&](std::size_t k) {
        const SweepRow& row = r.rows[offset + k];
        return forward ? row.amps.R_f : row.amps.R_b;
      };
      if (R(j) < R(j - 1) && R(j) < R(j + 1) && R(j) < 1e-3)
      {
        at.push_back(r.rows[offset + j].params.theta);
      }
    }
    return at;
  };
  const auto rf0 = local_minima(0, true);
  ASSERT_EQ(rf0.size(), 2u);
  EXPECT_NEAR(rf0[0], pi / 2, 1e-9);
  EXPECT_NEAR(rf0[1], 3 * pi / 2, 1e-9);
  const auto rb1 = local_minima(n, false);
  ASSERT_EQ(rb1.size(), 1u);
  EXPECT_NEAR(rb1[0], 3 * pi / 2, 1e-9);
}

TEST(Config, CustomGrid)
{
  const auto doc = nlohmann::json::parse(R"({
    "model": "two-level",
    "base": {"big_gamma": 0.5, "gamma1": 1, "gamma2": 0.01},
    "axes": [{"param": "theta", "start": 0, "stop": 6, "count": 7}],
    "links": [{"target": "delta2", "source": "delta1"}],
    "slice": {"param": "delta1", "start": -2, "stop": 2},
    "tolerances": {"tol_zero": 1e-7}
  })");
  const RunConfig cfg = parse_config(doc);
  EXPECT_EQ(cfg.grid.model, Model::two_level);
  EXPECT_EQ(cfg.grid.base.gamma1, 1.0);
  ASSERT_EQ(cfg.grid.axes.size(), 1u);
  EXPECT_EQ(cfg.grid.axes[0].count, 7u);
  ASSERT_EQ(cfg.slices.size(), 1u);
  EXPECT_EQ(cfg.slices[0].count, 400u);
  EXPECT_EQ(cfg.slices[0].base.big_gamma, 0.5);
  EXPECT_EQ(cfg.slices[0].links.size(), 1u);
  EXPECT_EQ(cfg.tolerances.tol_zero, 1e-7);
  EXPECT_EQ(cfg.tolerances.tol_nonzero, 1e-3);
  EXPECT_EQ(run_sweep(cfg.grid).rows.size(), 7u);
}

TEST(Config, PresetOverride)
{
  const auto doc = nlohmann::json::parse(R"({"preset": "fig6", "variant": "theta0.9pi",
                                             "base": {"lambda": 0.25}})");
  const RunConfig cfg = parse_config(doc);
  EXPECT_EQ(cfg.grid.label, "fig6:theta0.9pi");
  ASSERT_EQ(cfg.slices.size(), 1u);
  EXPECT_EQ(cfg.slices[0].base.lambda, 0.25);
}

TEST(Config, RejectsUnknownKeys)
{
  for (const char* text : {R"({"modle": "two-level"})", R"({"base": {"kappa": 1}})",
                           R"({"axes": [{"param": "theta", "start": 0, "stop": 1, "n": 3}]})",
                           R"({"tolerances": {"tol": 1}})", R"({"variant": "ab"})",
                           R"({"model": 3})", R"({"axes": [{"param": "theta", "stop": 1}]})"})
  {
    EXPECT_THROW(parse_config(nlohmann::json::parse(text)), ConfigError) << text;
  }
  EXPECT_THROW(load_config("/nonexistent/config.json"), IoError);
}
