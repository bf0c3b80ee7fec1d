// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "wgqed/errors.hpp"
#include "wgqed/params.hpp"
#include "wgqed/spectral.hpp"
#include "wgqed/sweep.hpp"

namespace wgqed {

struct PresetVariant
{
  std::string name;
  std::string description;
  SweepGrid grid;
  std::vector<SweepSlice> ep_slices;
};

struct Preset
{
  std::string name;
  std::string description;
  std::vector<PresetVariant> variants;  ///< the first one is the default
};

namespace detail {

inline constexpr double pi = std::numbers::pi;

inline SweepSlice make_slice(const SystemParams& base, ParamId param, double start, double stop,
                             std::vector<Link> links = {}, std::size_t count = 2001)
{
  SweepSlice s;
  s.base = base;
  s.param = param;
  s.start = start;
  s.stop = stop;
  s.count = count;
  s.links = std::move(links);
  return s;
}

inline PresetVariant variant(std::string preset, std::string name, std::string description,
                             Model model, SystemParams base, std::vector<Axis> axes,
                             std::vector<Link> links, std::vector<std::string> inferred,
                             std::vector<SweepSlice> slices = {})
{
  PresetVariant v;
  v.name = name;
  v.description = std::move(description);
  v.grid.axes = std::move(axes);
  v.grid.base = base;
  v.grid.model = model;
  v.grid.links = std::move(links);
  v.grid.label = preset + ":" + name;
  v.grid.inferred = std::move(inferred);
  v.ep_slices = std::move(slices);
  return v;
}

// Driven dot, degenerate cavity and dot; Delta23 = 1 puts Delta3 = 0 at Delta1 = -1.
inline SystemParams fig2_base()
{
  SystemParams p;
  p.theta = 0.1 * pi;
  p.omega = 0.1;
  p.big_gamma = 1.2;
  p.gamma1 = 0.27;
  p.gamma2 = 0.001;
  p.gamma3 = 0.001;
  p.lambda = 0.2;
  return p;
}

inline std::vector<Link> fig2_links()
{
  return {{ParamId::delta2, ParamId::delta1, 0.0}, {ParamId::delta3, ParamId::delta1, 1.0}};
}

inline std::vector<std::string> fig2_inferred()
{
  return {"gamma3=0.001", "delta2=delta1 (omega1=omega2)", "delta3=delta1+1 (Delta23=1)",
          "axis ranges"};
}

inline SystemParams fig4_base()
{
  SystemParams p;
  p.big_gamma = 0.5;
  p.gamma1 = 1.0;
  p.gamma2 = 0.01;
  return p;
}

inline SystemParams fig6_base(double theta)
{
  SystemParams p;
  p.big_gamma = 1.7;
  p.gamma1 = 0.32;
  p.gamma2 = 0.01;
  p.lambda = 0.5;
  p.theta = theta;
  return p;
}

inline std::vector<Preset> build_presets()
{
  const Link equal_detuning{ParamId::delta2, ParamId::delta1, 0.0};
  std::vector<Preset> out;

  {
    Preset p{"fig2", "driven dot: reflection vs coupling and cavity detuning", {}};
    SystemParams base = fig2_base();
    auto slice = make_slice(base, ParamId::delta1, -1.5, -0.5, fig2_links());
    p.variants.push_back(variant("fig2", "ab", "R_f, R_b over (lambda, delta1)",
                                 Model::three_level, base,
                                 {{ParamId::lambda, 0.0, 1.0, 101}, {ParamId::delta1, -3.0, 2.0, 501}},
                                 fig2_links(), fig2_inferred(), {slice}));
    p.variants.push_back(variant("fig2", "ef", "eigenvalues s+- vs delta1 at lambda = 0.2",
                                 Model::three_level, base, {{ParamId::delta1, -3.0, 2.0, 5001}},
                                 fig2_links(), fig2_inferred(), {slice}));
    out.push_back(std::move(p));
  }
  {
    Preset p{"fig3", "driven dot: Rabi frequency and phase-shift maps", {}};
    SystemParams base = fig2_base();
    std::vector<std::string> inferred = fig2_inferred();
    inferred.push_back("lambda=0.2");
    p.variants.push_back(variant("fig3", "abcd", "omega x delta1 at theta = 0.1 pi",
                                 Model::three_level, base,
                                 {{ParamId::omega, 0.0, 1.0, 101}, {ParamId::delta1, -3.0, 2.0, 501}},
                                 fig2_links(), inferred));
    base.omega = 0.3;
    p.variants.push_back(variant("fig3", "efgh", "theta x delta1 at omega = 0.3",
                                 Model::three_level, base,
                                 {{ParamId::theta, 0.0, 2.0 * pi, 361}, {ParamId::delta1, -3.0, 2.0, 501}},
                                 fig2_links(), inferred));
    out.push_back(std::move(p));
  }
  {
    Preset p{"fig4", "two-level dot, cavity and dot on resonance (delta1 = delta2)", {}};
    SystemParams base = fig4_base();
    base.theta = 1.5 * pi;
    p.variants.push_back(variant("fig4", "ab", "lambda x delta at theta = 1.5 pi", Model::two_level,
                                 base,
                                 {{ParamId::lambda, 0.0, 1.5, 151}, {ParamId::delta1, -2.0, 2.0, 401}},
                                 {equal_detuning}, {"axis ranges"}));
    base.theta = 0.0;
    std::vector<SweepSlice> slices;
    for (double lam : {0.0, 1.0})
    {
      SystemParams b = base;
      b.lambda = lam;
      slices.push_back(make_slice(b, ParamId::theta, 0.0, 2.0 * pi));
    }
    p.variants.push_back(variant("fig4", "cdef", "lambda in {0, 1} x theta at delta = 0",
                                 Model::two_level, base,
                                 {{ParamId::lambda, 0.0, 1.0, 2}, {ParamId::theta, 0.0, 2.0 * pi, 721}},
                                 {equal_detuning}, {"delta=0 for theta slices"}, slices));
    out.push_back(std::move(p));
  }
  {
    Preset p{"fig5", "two-level dot on resonance: theta x delta maps", {}};
    for (double lam : {0.0, 1.0})
    {
      SystemParams base = fig4_base();
      base.lambda = lam;
      p.variants.push_back(variant(
          "fig5", lam == 0.0 ? "lambda0" : "lambda1", "theta x delta", Model::two_level, base,
          {{ParamId::theta, 0.0, 4.0 * pi, 721}, {ParamId::delta1, -2.0, 2.0, 201}},
          {equal_detuning}, {"gamma1=1, gamma2=0.01, big_gamma=0.5", "axis ranges"}));
    }
    out.push_back(std::move(p));
  }
  {
    Preset p{"fig6", "two-level dot, cavity on resonance (delta1 = 0)", {}};
    for (double th : {0.1, 0.9})
    {
      SystemParams base = fig6_base(th * pi);
      const double hi = 3.0;
      const double lo = th < 0.5 ? -3.0 : -1.0;
      p.variants.push_back(variant(
          "fig6", th < 0.5 ? "theta0.1pi" : "theta0.9pi", "lambda x delta2", Model::two_level, base,
          {{ParamId::lambda, 0.0, 1.5, 151}, {ParamId::delta2, -3.0, 3.0, 601}}, {},
          {"axis ranges"}, {make_slice(base, ParamId::delta2, lo, hi)}));
    }
    out.push_back(std::move(p));
  }
  {
    Preset p{"fig7", "two-level dot, cavity on resonance: phase shift and decay-rate maps", {}};
    SystemParams base = fig4_base();
    base.lambda = 0.5;
    base.big_gamma = 1.8;
    const std::vector<std::string> inferred = {"lambda=0.5", "delta1=0", "axis ranges"};
    p.variants.push_back(variant("fig7", "abcd", "theta x delta2 at big_gamma = 1.8",
                                 Model::two_level, base,
                                 {{ParamId::theta, 0.0, 2.0 * pi, 361}, {ParamId::delta2, -3.0, 3.0, 301}},
                                 {}, inferred));
    base.theta = 0.1 * pi;
    p.variants.push_back(variant("fig7", "efgh", "big_gamma x delta2 at theta = 0.1 pi",
                                 Model::two_level, base,
                                 {{ParamId::big_gamma, 0.0, 3.0, 151}, {ParamId::delta2, -3.0, 3.0, 301}},
                                 {}, inferred));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

inline const std::vector<Preset>& presets()
{
  static const std::vector<Preset> all = detail::build_presets();
  return all;
}

inline const Preset& preset(std::string_view name)
{
  for (const Preset& p : presets())
  {
    if (p.name == name)
    {
      return p;
    }
  }
  std::string known;
  for (const Preset& p : presets())
  {
    known += (known.empty() ? "" : ", ") + p.name;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "' (available: " + known + ")");
}

/// Empty `variant` selects the default (first) variant.
inline const PresetVariant& preset_variant(std::string_view name, std::string_view variant = {})
{
  const Preset& p = preset(name);
  if (variant.empty())
  {
    return p.variants.front();
  }
  std::string known;
  for (const PresetVariant& v : p.variants)
  {
    if (v.name == variant)
    {
      return v;
    }
    known += (known.empty() ? "" : ", ") + v.name;
  }
  throw ConfigError("preset " + p.name + " has no variant '" + std::string(variant) +
                    "' (available: " + known + ")");
}

}  // namespace wgqed
