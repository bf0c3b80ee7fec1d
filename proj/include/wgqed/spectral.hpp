// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "wgqed/amplitudes.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/params.hpp"

namespace wgqed {

/// Eigenvalues of S = [[t, r_b], [r_f, t]].
struct SMatrixSpectrum
{
  cplx s_plus;
  cplx s_minus;
  double gap = 0.0;  ///< |s_plus - s_minus|
};

inline SMatrixSpectrum s_eigenvalues(cplx t, cplx r_f, cplx r_b)
{
  const cplx root = std::sqrt(r_f * r_b);
  return {t + root, t - root, 2.0 * std::abs(root)};
}

inline SMatrixSpectrum s_eigenvalues(const AmplitudeSet& amps)
{
  return s_eigenvalues(amps.t, amps.r_f, amps.r_b);
}

/// Normalised reflection asymmetry |R_f - R_b| / (R_f + R_b), in [0, 1].
inline double contrast_ratio(double R_f, double R_b)
{
  if (!(R_f >= 0.0) || !(R_b >= 0.0))
  {
    throw InvalidParameter("reflectances must be non-negative");
  }
  if (R_f == 0.0 && R_b == 0.0)
  {
    throw UndefinedContrast("contrast ratio undefined for R_f = R_b = 0");
  }
  return std::abs(R_f - R_b) / (R_f + R_b);
}

// ---------------------------------------------------------------------------
// Fabry-Perot phase diagnostics

struct PhaseDiagnostics
{
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta_f = 0.0;
  double theta_b = 0.0;
  double eta = 0.0;
};

/// theta_{1,2} = (w - w_{1,2}) / (eta + gamma_{1,2} / 2); eta defaults to Gamma.
inline PhaseDiagnostics phase_diagnostics(const FrequencySpec& spec, const SystemParams& params,
                                          std::optional<double> eta = std::nullopt)
{
  const Detunings d = derive_detunings(spec);
  PhaseDiagnostics out;
  out.eta = eta.value_or(params.big_gamma);
  const double w1 = out.eta + params.gamma1 / 2.0;
  const double w2 = out.eta + params.gamma2 / 2.0;
  if (w1 == 0.0 || w2 == 0.0 || !std::isfinite(w1) || !std::isfinite(w2))
  {
    throw InvalidParameter("phase diagnostics: eta + gamma/2 must be finite and nonzero");
  }
  out.theta1 = d.delta1 / w1;
  out.theta2 = d.delta2 / w2;
  out.theta_f = out.theta1 - out.theta2 + 2.0 * params.theta;
  out.theta_b = out.theta2 - out.theta1 + 2.0 * params.theta;
  return out;
}

// ---------------------------------------------------------------------------
// Exceptional points along one-dimensional slices

enum class Side
{
  forward,
  backward,
};

constexpr std::string_view side_name(Side s)
{
  return s == Side::forward ? "forward" : "backward";
}

/// One varying coordinate over [start, stop]; every other parameter is taken
/// from `base`, then `links` are applied.
struct SweepSlice
{
  SystemParams base;
  ParamId param = ParamId::delta1;
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 400;
  std::vector<Link> links;

  SystemParams at(double x) const
  {
    SystemParams p = base;
    param_ref(p, param) = x;
    apply_links(p, links);
    return p;
  }
};

struct EpTolerances
{
  double tol_zero = 1e-6;     ///< |r| on the vanishing side must fall below this
  double tol_nonzero = 1e-3;  ///< |r| on the other side must exceed this
  double bracket = 0.1;       ///< grid minima of |r| above this are not refined
};

struct EPRecord
{
  std::string slice_param;
  double location = 0.0;
  Side vanishing_side = Side::forward;
  double r_zero_mod = 0.0;
  double r_other_mod = 0.0;
  double gap = 0.0;
};

/// Applies the EP criterion to a located minimum of |r| on `side`.
inline std::optional<EPRecord> classify_ep(std::string_view param, double location, Side side,
                                           const AmplitudeSet& amps, const EpTolerances& tol)
{
  const double rf = std::abs(amps.r_f);
  const double rb = std::abs(amps.r_b);
  const double r_zero = side == Side::forward ? rf : rb;
  const double r_other = side == Side::forward ? rb : rf;
  const double gap = s_eigenvalues(amps).gap;
  if (!(r_zero < tol.tol_zero) || !(r_other > tol.tol_nonzero))
  {
    return std::nullopt;
  }
  if (!(gap < 2.0 * std::sqrt(tol.tol_zero * (r_other + tol.tol_zero))))
  {
    return std::nullopt;
  }
  return EPRecord{std::string(param), location, side, r_zero, r_other, gap};
}

/// Coarse scan of |r_f| and |r_b| along the slice, Brent refinement of each
/// sufficiently deep grid minimum of |r|^2, secant polish, then classification.
inline std::vector<EPRecord> find_eps(const SweepSlice& slice, Model model,
                                      const EpTolerances& tol = {}, const EvalOptions& opts = {})
{
  if (!std::isfinite(slice.start) || !std::isfinite(slice.stop) || !(slice.start < slice.stop))
  {
    throw InvalidSlice("slice interval must be finite and non-empty");
  }
  if (slice.count < 200)
  {
    throw InvalidSlice("slice needs at least 200 grid points");
  }
  for (const Link& l : slice.links)
  {
    if (l.target == slice.param)
    {
      throw InvalidSlice("swept parameter cannot be a link target");
    }
  }
  validate(slice.at(slice.start));

  const std::size_t n = slice.count;
  const double step = (slice.stop - slice.start) / static_cast<double>(n - 1);
  auto grid = [&](std::size_t i) { return i + 1 == n ? slice.stop : slice.start + step * i; };

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  auto amplitude = [&](double x, Side side) {
    try
    {
      const AmplitudeSet a = evaluate(slice.at(x), model, opts);
      return side == Side::forward ? a.r_f : a.r_b;
    }
    catch (const SingularPoint&)
    {
      return cplx(nan, nan);
    }
  };
  auto reflection = [&](double x, Side side) { return std::abs(amplitude(x, side)); };

  std::vector<double> rf(n), rb(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    try
    {
      const AmplitudeSet a = evaluate(slice.at(grid(i)), model, opts);
      rf[i] = std::abs(a.r_f);
      rb[i] = std::abs(a.r_b);
    }
    catch (const SingularPoint&)
    {
      rf[i] = rb[i] = nan;
    }
  }

  const std::string name(param_name(slice.param));
  std::vector<EPRecord> found;
  for (Side side : {Side::forward, Side::backward})
  {
    const std::vector<double>& r = side == Side::forward ? rf : rb;
    for (std::size_t i = 0; i < n; ++i)
    {
      // NaN neighbours compare false, so singular points never form minima.
      const bool left_ok = i == 0 || r[i] <= r[i - 1];
      const bool right_ok = i + 1 == n || r[i] <= r[i + 1];
      if (!(r[i] <= tol.bracket) || !left_ok || !right_ok)
      {
        continue;
      }
      const double lo = grid(i == 0 ? 0 : i - 1);
      const double hi = grid(i + 1 == n ? i : i + 1);
      auto objective = [&](double x) {
        const double v = reflection(x, side);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v * v;
      };
      std::uintmax_t max_iter = 500;
      const auto best = boost::math::tools::brent_find_minima(
          objective, lo, hi, std::numeric_limits<double>::digits - 3, max_iter);

      // The minimum of |r|^2 is only located to ~sqrt(eps); r is analytic in the
      // swept parameter, so a secant step on r itself tightens a genuine zero.
      double x = best.first;
      double x_prev = x + 1e-6 * (hi - lo);
      cplx r_prev = amplitude(x_prev, side);
      cplx r_x = amplitude(x, side);
      for (int k = 0; k < 20 && std::abs(r_x) > 0.0; ++k)
      {
        const cplx slope = (r_x - r_prev) / (x - x_prev);
        if (!(std::abs(slope) > 0.0))
        {
          break;
        }
        const double next = x - (r_x / slope).real();
        const cplx r_next = amplitude(next, side);
        if (!(next >= lo && next <= hi) || !(std::abs(r_next) < std::abs(r_x)))
        {
          break;
        }
        x_prev = x;
        r_prev = r_x;
        x = next;
        r_x = r_next;
      }

      AmplitudeSet amps;
      try
      {
        amps = evaluate(slice.at(x), model, opts);
      }
      catch (const SingularPoint&)
      {
        continue;
      }
      if (auto rec = classify_ep(name, x, side, amps, tol))
      {
        found.push_back(*rec);
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const EPRecord& a, const EPRecord& b) {
    if (a.location != b.location)
    {
      return a.location < b.location;
    }
    return a.vanishing_side < b.vanishing_side;
  });
  // adjacent grid minima can refine onto the same point
  const double merge = 1e-6 * step;
  std::vector<EPRecord> out;
  for (const EPRecord& r : found)
  {
    if (!out.empty() && out.back().vanishing_side == r.vanishing_side &&
        std::abs(out.back().location - r.location) <= merge)
    {
      if (r.r_zero_mod < out.back().r_zero_mod)
      {
        out.back() = r;
      }
      continue;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace wgqed
