// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wgqed/amplitudes.hpp"
#include "wgqed/config.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/export.hpp"
#include "wgqed/oracle_check.hpp"
#include "wgqed/params.hpp"
#include "wgqed/presets.hpp"
#include "wgqed/spectral.hpp"
#include "wgqed/sweep.hpp"

namespace wgqed::cli {

namespace detail {

inline std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string num(cplx z)
{
  return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

/// Optional per-parameter overrides shared by `point` and `ep-find`.
struct ParamFlags
{
  std::map<ParamId, std::optional<double>> values;

  void attach(CLI::App* cmd)
  {
    for (ParamId id : kAllParams)
    {
      std::string flag(param_name(id));
      if (id == ParamId::big_gamma)
      {
        flag = "big-gamma";
      }
      cmd->add_option("--" + flag, values[id], std::string(param_name(id)));
    }
  }

  void apply(SystemParams& p) const
  {
    for (const auto& [id, v] : values)
    {
      if (v)
      {
        param_ref(p, id) = *v;
      }
    }
  }
};

inline void print_params(std::ostream& out, const SystemParams& p)
{
  for (ParamId id : kAllParams)
  {
    out << "  " << param_name(id) << " = " << num(param_value(p, id)) << '\n';
  }
}

inline nlohmann::ordered_json params_json(const SystemParams& p)
{
  nlohmann::ordered_json j;
  for (ParamId id : kAllParams)
  {
    j[std::string(param_name(id))] = param_value(p, id);
  }
  return j;
}

inline nlohmann::ordered_json ep_json(const EPRecord& r)
{
  nlohmann::ordered_json j;
  j["slice_param"] = r.slice_param;
  j["location"] = r.location;
  j["vanishing_side"] = std::string(side_name(r.vanishing_side));
  j["r_zero_mod"] = r.r_zero_mod;
  j["r_other_mod"] = r.r_other_mod;
  j["gap"] = r.gap;
  return j;
}

}  // namespace detail

/// Entry point of the `wgqed` executable. Returns the process exit code:
/// 0 success, 1 runtime failure (including oracle-check above threshold),
/// 2 usage error.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr)
{
  CLI::App app{"Single-photon scattering off a cavity and a Lambda-type quantum dot "
               "side-coupled to a waveguide"};
  app.name("wgqed");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, format_name;
  unsigned threads = 1;
  std::uint64_t seed = 42;
  std::optional<double> tol_zero, tol_nonzero;
  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "output file (sweep)");
  app.add_option("--format", format_name, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for oracle-check draws");
  app.add_option("--tol-zero", tol_zero, "EP: max |r| on the vanishing side");
  app.add_option("--tol-nonzero", tol_nonzero, "EP: min |r| on the other side");

  std::string model_name_flag;
  std::string preset_name, variant_name;

  auto* point = app.add_subcommand("point", "evaluate amplitudes and S-matrix eigenvalues at one point");
  detail::ParamFlags point_flags;
  point_flags.attach(point);
  point->add_option("--model", model_name_flag, "three-level | two-level")
      ->check(CLI::IsMember({"three-level", "two-level"}));

  auto* sweep = app.add_subcommand("sweep", "run a preset or configured grid and export it");
  sweep->add_option("--preset", preset_name, "built-in preset");
  sweep->add_option("--variant", variant_name, "preset variant");

  auto* ep = app.add_subcommand("ep-find", "locate exceptional points along a 1D slice");
  detail::ParamFlags ep_flags;
  ep_flags.attach(ep);
  ep->add_option("--model", model_name_flag, "three-level | two-level")
      ->check(CLI::IsMember({"three-level", "two-level"}));
  ep->add_option("--preset", preset_name, "built-in preset providing the slices");
  ep->add_option("--variant", variant_name, "preset variant");
  std::string slice_param;
  std::optional<double> slice_start, slice_stop;
  std::size_t slice_count = 400;
  ep->add_option("--param", slice_param, "swept parameter");
  ep->add_option("--start", slice_start, "slice start");
  ep->add_option("--stop", slice_stop, "slice stop");
  ep->add_option("--count", slice_count, "grid points (≥ 200)");

  auto* check = app.add_subcommand("oracle-check", "compare closed forms against the direct solve");
  std::size_t draws = 10000;
  double threshold = 1e-10;
  check->add_option("--n", draws, "number of random draws");
  check->add_option("--threshold", threshold, "maximum tolerated deviation");

  auto* list = app.add_subcommand("preset-list", "list built-in presets");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp&)
  {
    out << app.help();
    return 0;
  }
  catch (const CLI::CallForAllHelp&)
  {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  }
  catch (const CLI::ParseError& e)
  {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try
  {
    RunConfig cfg;
    const bool have_config = !config_path.empty();
    if (have_config)
    {
      cfg = load_config(config_path);
    }
    if (tol_zero)
    {
      cfg.tolerances.tol_zero = *tol_zero;
    }
    if (tol_nonzero)
    {
      cfg.tolerances.tol_nonzero = *tol_nonzero;
    }
    const bool as_json = format_name == "json";

    if (point->parsed())
    {
      SystemParams p = cfg.grid.base;
      point_flags.apply(p);
      const Model model = model_name_flag.empty() ? cfg.grid.model : parse_model(model_name_flag);
      const AmplitudeSet a = evaluate(p, model);
      const SMatrixSpectrum s = s_eigenvalues(a);
      if (as_json)
      {
        nlohmann::ordered_json j;
        j["model"] = std::string(model_name(model));
        j["params"] = detail::params_json(p);
        j["t"] = {a.t.real(), a.t.imag()};
        j["r_f"] = {a.r_f.real(), a.r_f.imag()};
        j["r_b"] = {a.r_b.real(), a.r_b.imag()};
        j["T"] = a.T;
        j["R_f"] = a.R_f;
        j["R_b"] = a.R_b;
        j["A_f"] = a.A_f;
        j["A_b"] = a.A_b;
        j["s_plus"] = {s.s_plus.real(), s.s_plus.imag()};
        j["s_minus"] = {s.s_minus.real(), s.s_minus.imag()};
        j["gap"] = s.gap;
        out << j.dump(2) << '\n';
        return 0;
      }
      out << "model " << model_name(model) << '\n';
      detail::print_params(out, p);
      out << "t   = " << detail::num(a.t) << '\n'
          << "r_f = " << detail::num(a.r_f) << '\n'
          << "r_b = " << detail::num(a.r_b) << '\n'
          << "T   = " << detail::num(a.T) << '\n'
          << "R_f = " << detail::num(a.R_f) << '\n'
          << "R_b = " << detail::num(a.R_b) << '\n'
          << "A_f = " << detail::num(a.A_f) << '\n'
          << "A_b = " << detail::num(a.A_b) << '\n'
          << "s_+ = " << detail::num(s.s_plus) << '\n'
          << "s_- = " << detail::num(s.s_minus) << '\n'
          << "gap = " << detail::num(s.gap) << '\n';
      return 0;
    }

    if (sweep->parsed())
    {
      SweepGrid grid = cfg.grid;
      if (!preset_name.empty())
      {
        grid = preset_variant(preset_name, variant_name).grid;
      }
      else if (!have_config)
      {
        throw ConfigError("sweep needs --preset or --config");
      }
      const SweepResult result = run_sweep(grid, threads);
      const ExportFormat fmt = format_name.empty() ? ExportFormat::csv : parse_format(format_name);
      if (out_path.empty())
      {
        if (fmt == ExportFormat::csv)
        {
          write_csv(result, out);
        }
        else
        {
          out << to_json(result).dump(2) << '\n';
        }
      }
      else
      {
        export_result(result, fmt, out_path);
        err << "wrote " << result.rows.size() << " rows to " << out_path << '\n';
      }
      return 0;
    }

    if (ep->parsed())
    {
      std::vector<SweepSlice> slices = cfg.slices;
      Model model = cfg.grid.model;
      if (!preset_name.empty())
      {
        const PresetVariant& pv = preset_variant(preset_name, variant_name);
        slices = pv.ep_slices;
        model = pv.grid.model;
        if (slices.empty())
        {
          throw ConfigError("preset " + pv.grid.label + " defines no EP slices");
        }
      }
      if (!slice_param.empty())
      {
        SweepSlice s;
        s.base = cfg.grid.base;
        s.links = cfg.grid.links;
        const auto id = parse_param(slice_param);
        if (!id)
        {
          throw ConfigError("unknown parameter '" + slice_param + "'");
        }
        if (!slice_start || !slice_stop)
        {
          throw ConfigError("--param needs --start and --stop");
        }
        s.param = *id;
        s.start = *slice_start;
        s.stop = *slice_stop;
        s.count = slice_count;
        slices = {s};
      }
      if (slices.empty())
      {
        throw ConfigError("ep-find needs --preset, --param or a config with a slice");
      }
      if (!model_name_flag.empty())
      {
        model = parse_model(model_name_flag);
      }

      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (SweepSlice s : slices)
      {
        ep_flags.apply(s.base);
        const std::vector<EPRecord> eps = find_eps(s, model, cfg.tolerances);
        if (as_json)
        {
          for (const EPRecord& r : eps)
          {
            all.push_back(detail::ep_json(r));
          }
          continue;
        }
        out << "slice " << param_name(s.param) << " in [" << detail::num(s.start) << ", "
            << detail::num(s.stop) << "], " << s.count << " points, model "
            << model_name(model) << ": " << eps.size() << " EP(s)\n";
        for (const EPRecord& r : eps)
        {
          out << "  " << r.slice_param << " = " << detail::num(r.location) << "  vanishing "
              << side_name(r.vanishing_side) << "  |r_zero| = " << detail::num(r.r_zero_mod)
              << "  |r_other| = " << detail::num(r.r_other_mod)
              << "  gap = " << detail::num(r.gap) << '\n';
        }
      }
      if (as_json)
      {
        out << all.dump(2) << '\n';
      }
      return 0;
    }

    if (check->parsed())
    {
      const OracleCheckReport rep = oracle_check(draws, seed);
      out << "draws " << rep.draws << " (singular skipped " << rep.singular << "), seed " << seed
          << '\n'
          << "max deviation    " << detail::num(rep.max_deviation) << '\n'
          << "max reciprocity  " << detail::num(rep.max_reciprocity) << '\n'
          << "max residual     " << detail::num(rep.max_residual) << '\n';
      if (!(rep.max_deviation < threshold))
      {
        err << "oracle-check: deviation " << detail::num(rep.max_deviation)
            << " exceeds threshold " << detail::num(threshold) << " at\n";
        detail::print_params(err, rep.worst);
        return 1;
      }
      return 0;
    }

    if (list->parsed())
    {
      for (const Preset& p : presets())
      {
        out << p.name << "  " << p.description << '\n';
        for (const PresetVariant& v : p.variants)
        {
          out << "  " << v.name << "  " << v.description << "  (" << row_count(v.grid)
              << " rows, " << v.ep_slices.size() << " EP slice(s))\n";
          for (const std::string& s : v.grid.inferred)
          {
            out << "    preset-inferred: " << s << '\n';
          }
        }
      }
      return 0;
    }
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace wgqed::cli
