// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "wgqed/errors.hpp"
#include "wgqed/params.hpp"
#include "wgqed/sweep.hpp"

namespace wgqed {

inline constexpr std::string_view kToolVersion = "1.0.0";

inline constexpr std::array<std::string_view, 17> kResultColumns = {
    "t_re", "t_im", "rf_re",     "rf_im",     "rb_re",      "rb_im",      "T",   "R_f", "R_b",
    "A_f",  "A_b",  "s_plus_re", "s_plus_im", "s_minus_re", "s_minus_im", "gap", "flag"};

/// Column names in export order: every parameter, then the results, then flag.
inline std::vector<std::string> csv_columns()
{
  std::vector<std::string> cols;
  for (ParamId id : kAllParams)
  {
    cols.emplace_back(param_name(id));
  }
  for (std::string_view c : kResultColumns)
  {
    cols.emplace_back(c);
  }
  return cols;
}

/// 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::array<double, 16> result_values(const SweepRow& row)
{
  const AmplitudeSet& a = row.amps;
  const SMatrixSpectrum& s = row.spectrum;
  return {a.t.real(),  a.t.imag(),  a.r_f.real(),      a.r_f.imag(),      a.r_b.real(),
          a.r_b.imag(), a.T,        a.R_f,             a.R_b,             a.A_f,
          a.A_b,       s.s_plus.real(), s.s_plus.imag(), s.s_minus.real(), s.s_minus.imag(),
          s.gap};
}

inline void write_csv(const SweepResult& result, std::ostream& os)
{
  const std::vector<std::string> cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i)
  {
    os << (i ? "," : "") << cols[i];
  }
  os << '\n';
  for (const SweepRow& row : result.rows)
  {
    for (ParamId id : kAllParams)
    {
      os << format_double(param_value(row.params, id)) << ',';
    }
    if (row.singular)
    {
      os << std::string(16, ',') << "singular\n";
      continue;
    }
    for (double v : result_values(row))
    {
      os << format_double(v) << ',';
    }
    os << "ok\n";
  }
}

inline nlohmann::ordered_json to_json(const SweepResult& result)
{
  nlohmann::ordered_json meta;
  meta["preset"] = result.label;
  meta["model"] = std::string(model_name(result.model));
  meta["inferred"] = result.inferred;
  meta["tool_version"] = std::string(kToolVersion);

  const std::vector<std::string> cols = csv_columns();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : result.rows)
  {
    nlohmann::ordered_json obj;
    std::size_t c = 0;
    for (ParamId id : kAllParams)
    {
      obj[cols[c++]] = param_value(row.params, id);
    }
    const auto values = result_values(row);
    for (double v : values)
    {
      obj[cols[c++]] = row.singular ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v);
    }
    obj["flag"] = row.singular ? "singular" : "ok";
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(rows);
  return doc;
}

enum class ExportFormat
{
  csv,
  json,
};

inline ExportFormat parse_format(std::string_view s)
{
  if (s == "csv")
  {
    return ExportFormat::csv;
  }
  if (s == "json")
  {
    return ExportFormat::json;
  }
  throw ConfigError("unknown format '" + std::string(s) + "' (expected csv or json)");
}

inline void export_result(const SweepResult& result, ExportFormat format, const std::string& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw IoError("cannot open '" + path + "' for writing");
  }
  if (format == ExportFormat::csv)
  {
    write_csv(result, out);
  }
  else
  {
    out << to_json(result).dump(2) << '\n';
  }
  out.flush();
  if (!out)
  {
    throw IoError("write to '" + path + "' failed");
  }
}

/// Minimal reader for the files written by write_csv (no quoting).
struct CsvTable
{
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::vector<std::string> split_csv_line(std::string_view line)
{
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true)
  {
    const std::size_t comma = line.find(',', pos);
    out.emplace_back(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos)
    {
      break;
    }
    pos = comma + 1;
  }
  return out;
}

inline CsvTable read_csv(std::istream& is)
{
  CsvTable t;
  std::string line;
  if (std::getline(is, line))
  {
    t.header = split_csv_line(line);
  }
  while (std::getline(is, line))
  {
    t.rows.push_back(split_csv_line(line));
  }
  return t;
}

}  // namespace wgqed
