// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "wgqed/amplitudes.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/params.hpp"
#include "wgqed/presets.hpp"
#include "wgqed/spectral.hpp"
#include "wgqed/sweep.hpp"

// Run configuration file (JSON). Every object rejects unknown keys.
//
//   {
//     "preset":  "fig4",            optional; starts from a built-in grid
//     "variant": "cdef",            optional; default variant otherwise
//     "model":   "two-level",       "three-level" | "two-level"
//     "base":    {"gamma1": 1, ...} parameter overrides
//     "axes":    [{"param": "theta", "start": 0, "stop": 6.28, "count": 200}],
//     "links":   [{"target": "delta2", "source": "delta1", "offset": 0}],
//     "slice":   {"param": "delta2", "start": -3, "stop": 3, "count": 400},
//     "tolerances": {"tol_zero": 1e-6, "tol_nonzero": 1e-3, "bracket": 0.1}
//   }

namespace wgqed {

struct RunConfig
{
  SweepGrid grid;
  std::vector<SweepSlice> slices;
  EpTolerances tolerances;
};

namespace detail {

using json = nlohmann::json;

inline void check_keys(const json& obj, std::string_view where,
                       std::initializer_list<std::string_view> allowed)
{
  if (!obj.is_object())
  {
    throw ConfigError(std::string(where) + " must be a JSON object");
  }
  for (const auto& item : obj.items())
  {
    bool ok = false;
    for (std::string_view a : allowed)
    {
      ok = ok || item.key() == a;
    }
    if (!ok)
    {
      throw ConfigError("unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

inline double get_number(const json& obj, const char* key, std::string_view where)
{
  if (!obj.contains(key))
  {
    throw ConfigError(std::string(where) + ": missing '" + key + "'");
  }
  const json& v = obj.at(key);
  if (!v.is_number())
  {
    throw ConfigError(std::string(where) + ": '" + key + "' must be a number");
  }
  return v.get<double>();
}

inline ParamId get_param(const json& obj, const char* key, std::string_view where)
{
  if (!obj.contains(key) || !obj.at(key).is_string())
  {
    throw ConfigError(std::string(where) + ": '" + key + "' must be a parameter name");
  }
  const std::string name = obj.at(key).get<std::string>();
  if (auto id = parse_param(name))
  {
    return *id;
  }
  throw ConfigError(std::string(where) + ": unknown parameter '" + name + "'");
}

inline std::size_t get_count(const json& obj, std::string_view where, std::size_t fallback)
{
  if (!obj.contains("count"))
  {
    return fallback;
  }
  const json& v = obj.at("count");
  if (!v.is_number_integer() || v.get<long long>() < 0)
  {
    throw ConfigError(std::string(where) + ": 'count' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace detail

namespace detail {

inline RunConfig parse_config_impl(const nlohmann::json& doc)
{
  check_keys(doc, "config",
             {"preset", "variant", "model", "base", "axes", "links", "slice", "tolerances"});

  RunConfig cfg;
  if (doc.contains("preset"))
  {
    const std::string variant = doc.value("variant", std::string());
    const PresetVariant& pv = preset_variant(doc.at("preset").get<std::string>(), variant);
    cfg.grid = pv.grid;
    cfg.slices = pv.ep_slices;
  }
  else if (doc.contains("variant"))
  {
    throw ConfigError("'variant' requires 'preset'");
  }
  else
  {
    cfg.grid.label = "config";
  }

  if (doc.contains("model"))
  {
    cfg.grid.model = parse_model(doc.at("model").get<std::string>());
  }
  if (doc.contains("base"))
  {
    const auto& base = doc.at("base");
    if (!base.is_object())
    {
      throw ConfigError("base must be a JSON object");
    }
    for (const auto& item : base.items())
    {
      const auto id = parse_param(item.key());
      if (!id)
      {
        throw ConfigError("unknown key '" + item.key() + "' in base");
      }
      if (!item.value().is_number())
      {
        throw ConfigError("base: '" + item.key() + "' must be a number");
      }
      param_ref(cfg.grid.base, *id) = item.value().get<double>();
      for (SweepSlice& s : cfg.slices)
      {
        param_ref(s.base, *id) = item.value().get<double>();
      }
    }
  }
  if (doc.contains("axes"))
  {
    cfg.grid.axes.clear();
    for (const auto& a : doc.at("axes"))
    {
      check_keys(a, "axis", {"param", "start", "stop", "count"});
      cfg.grid.axes.push_back({get_param(a, "param", "axis"),
                               get_number(a, "start", "axis"),
                               get_number(a, "stop", "axis"),
                               get_count(a, "axis", 2)});
    }
  }
  if (doc.contains("links"))
  {
    cfg.grid.links.clear();
    for (const auto& l : doc.at("links"))
    {
      check_keys(l, "link", {"target", "source", "offset"});
      cfg.grid.links.push_back({get_param(l, "target", "link"),
                                get_param(l, "source", "link"),
                                l.contains("offset") ? get_number(l, "offset", "link") : 0.0});
    }
    for (SweepSlice& s : cfg.slices)
    {
      s.links = cfg.grid.links;
    }
  }
  if (doc.contains("slice"))
  {
    const auto& s = doc.at("slice");
    check_keys(s, "slice", {"param", "start", "stop", "count"});
    SweepSlice slice;
    slice.base = cfg.grid.base;
    slice.links = cfg.grid.links;
    slice.param = get_param(s, "param", "slice");
    slice.start = get_number(s, "start", "slice");
    slice.stop = get_number(s, "stop", "slice");
    slice.count = get_count(s, "slice", 400);
    cfg.slices = {slice};
  }
  if (doc.contains("tolerances"))
  {
    const auto& t = doc.at("tolerances");
    check_keys(t, "tolerances", {"tol_zero", "tol_nonzero", "bracket"});
    if (t.contains("tol_zero"))
    {
      cfg.tolerances.tol_zero = get_number(t, "tol_zero", "tolerances");
    }
    if (t.contains("tol_nonzero"))
    {
      cfg.tolerances.tol_nonzero = get_number(t, "tol_nonzero", "tolerances");
    }
    if (t.contains("bracket"))
    {
      cfg.tolerances.bracket = get_number(t, "bracket", "tolerances");
    }
  }
  return cfg;
}

}  // namespace detail

inline RunConfig parse_config(const nlohmann::json& doc)
{
  try
  {
    return detail::parse_config_impl(doc);
  }
  catch (const nlohmann::json::exception& e)
  {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

inline RunConfig load_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw IoError("cannot open config '" + path + "'");
  }
  nlohmann::json doc;
  try
  {
    in >> doc;
  }
  catch (const nlohmann::json::exception& e)
  {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

}  // namespace wgqed
