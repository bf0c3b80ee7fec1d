// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "wgqed/amplitudes.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/params.hpp"
#include "wgqed/spectral.hpp"

namespace wgqed {

struct Axis
{
  ParamId param = ParamId::delta1;
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;

  double value(std::size_t i) const
  {
    if (i + 1 == count)
    {
      return stop;
    }
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

struct SweepGrid
{
  std::vector<Axis> axes;  ///< first axis varies slowest
  SystemParams base;
  Model model = Model::three_level;
  std::vector<Link> links;
  std::string label;                  ///< preset name (and variant), if any
  std::vector<std::string> inferred;  ///< parameters not fixed by a stated source
};

struct SweepRow
{
  SystemParams params;
  bool singular = false;
  AmplitudeSet amps;
  SMatrixSpectrum spectrum;
};

struct SweepResult
{
  std::vector<SweepRow> rows;
  std::string label;
  std::vector<std::string> inferred;
  Model model = Model::three_level;
};

inline void validate_grid(const SweepGrid& grid)
{
  if (grid.axes.empty() || grid.axes.size() > 2)
  {
    throw ConfigError("a sweep needs one or two axes");
  }
  for (std::size_t i = 0; i < grid.axes.size(); ++i)
  {
    const Axis& ax = grid.axes[i];
    const std::string name(param_name(ax.param));
    if (ax.count < 2)
    {
      throw ConfigError("axis " + name + ": count must be ≥ 2");
    }
    if (!std::isfinite(ax.start) || !std::isfinite(ax.stop) || !(ax.start < ax.stop))
    {
      throw ConfigError("axis " + name + ": need finite start < stop");
    }
    for (std::size_t j = 0; j < i; ++j)
    {
      if (grid.axes[j].param == ax.param)
      {
        throw ConfigError("axis " + name + " appears twice");
      }
    }
    for (const Link& l : grid.links)
    {
      if (l.target == ax.param)
      {
        throw ConfigError("linked parameter " + name + " cannot also be an axis");
      }
    }
  }
}

inline std::size_t row_count(const SweepGrid& grid)
{
  std::size_t n = 1;
  for (const Axis& ax : grid.axes)
  {
    n *= ax.count;
  }
  return n;
}

/// Resolved parameters of row `index` (lexicographic in axis indices).
inline SystemParams grid_point(const SweepGrid& grid, std::size_t index)
{
  SystemParams p = grid.base;
  for (std::size_t k = grid.axes.size(); k-- > 0;)
  {
    const Axis& ax = grid.axes[k];
    param_ref(p, ax.param) = ax.value(index % ax.count);
    index /= ax.count;
  }
  apply_links(p, grid.links);
  return p;
}

/// Evaluates the model at every grid point with `threads` workers. Rows are
/// addressed by index, so the result does not depend on the worker count.
inline SweepResult run_sweep(const SweepGrid& grid, unsigned threads = 1,
                             const EvalOptions& opts = {})
{
  validate_grid(grid);
  const std::size_t n = row_count(grid);

  SweepResult result;
  result.label = grid.label;
  result.inferred = grid.inferred;
  result.model = grid.model;
  result.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    result.rows[i].params = validate(grid_point(grid, i));
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++)
    {
      SweepRow& row = result.rows[i];
      try
      {
        row.amps = evaluate(row.params, grid.model, opts);
        row.spectrum = s_eigenvalues(row.amps);
      }
      catch (const SingularPoint&)
      {
        row.singular = true;
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1)
  {
    work();
    return result;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned k = 0; k < threads; ++k)
  {
    pool.emplace_back(work);
  }
  pool.clear();
  return result;
}

}  // namespace wgqed
