// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "wgqed/errors.hpp"

namespace wgqed {

// All frequencies and rates share one dimensionless unit.

/// Physical parameters of one scattering evaluation: a cavity at x = 0 and a
/// driven Lambda-type quantum dot at x = d, both side-coupled to the waveguide.
struct SystemParams
{
  double delta1 = 0.0;     ///< probe - cavity resonance
  double delta2 = 0.0;     ///< probe - |1>-|2> transition
  double delta3 = 0.0;     ///< probe - |3> level, Delta2 + Delta23
  double gamma1 = 0.0;     ///< cavity dissipation
  double gamma2 = 0.0;     ///< dissipation of |2>
  double gamma3 = 0.0;     ///< dissipation of |3>
  double big_gamma = 0.0;  ///< decay rate into the waveguide, 2 V^2 / v_g
  double lambda = 0.0;     ///< cavity-dot coupling
  double omega = 0.0;      ///< Rabi frequency of the classical drive
  double theta = 0.0;      ///< propagation phase k d between the scatterers

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Absolute frequencies, from which the detunings follow.
struct FrequencySpec
{
  double omega_probe = 0.0;
  double omega_cavity = 0.0;
  double omega_qd = 0.0;
  double delta23 = 0.0;
};

struct Detunings
{
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;

  friend bool operator==(const Detunings&, const Detunings&) = default;
};

/// Addressable fields of SystemParams, used by sweeps, slices and configs.
enum class ParamId
{
  delta1,
  delta2,
  delta3,
  gamma1,
  gamma2,
  gamma3,
  big_gamma,
  lambda,
  omega,
  theta,
};

inline constexpr std::array<ParamId, 10> kAllParams = {
    ParamId::delta1, ParamId::delta2,    ParamId::delta3, ParamId::gamma1, ParamId::gamma2,
    ParamId::gamma3, ParamId::big_gamma, ParamId::lambda, ParamId::omega,  ParamId::theta};

constexpr std::string_view param_name(ParamId id)
{
  switch (id)
  {
    case ParamId::delta1: return "delta1";
    case ParamId::delta2: return "delta2";
    case ParamId::delta3: return "delta3";
    case ParamId::gamma1: return "gamma1";
    case ParamId::gamma2: return "gamma2";
    case ParamId::gamma3: return "gamma3";
    case ParamId::big_gamma: return "big_gamma";
    case ParamId::lambda: return "lambda";
    case ParamId::omega: return "omega";
    case ParamId::theta: return "theta";
  }
  return "?";
}

inline std::optional<ParamId> parse_param(std::string_view name)
{
  for (ParamId id : kAllParams)
  {
    if (param_name(id) == name)
    {
      return id;
    }
  }
  // CLI spelling
  if (name == "big-gamma" || name == "bigGamma")
  {
    return ParamId::big_gamma;
  }
  return std::nullopt;
}

constexpr double& param_ref(SystemParams& p, ParamId id)
{
  switch (id)
  {
    case ParamId::delta1: return p.delta1;
    case ParamId::delta2: return p.delta2;
    case ParamId::delta3: return p.delta3;
    case ParamId::gamma1: return p.gamma1;
    case ParamId::gamma2: return p.gamma2;
    case ParamId::gamma3: return p.gamma3;
    case ParamId::big_gamma: return p.big_gamma;
    case ParamId::lambda: return p.lambda;
    case ParamId::omega: return p.omega;
    case ParamId::theta: return p.theta;
  }
  return p.theta;
}

constexpr double param_value(const SystemParams& p, ParamId id)
{
  return param_ref(const_cast<SystemParams&>(p), id);
}

/// Delta1 = w - w1, Delta2 = w - w2, Delta3 = w - (w2 - Delta23) = Delta2 + Delta23.
inline Detunings derive_detunings(const FrequencySpec& spec)
{
  if (!std::isfinite(spec.omega_probe) || !std::isfinite(spec.omega_cavity) ||
      !std::isfinite(spec.omega_qd) || !std::isfinite(spec.delta23))
  {
    throw InvalidParameter("frequency specification must be finite");
  }
  const double d2 = spec.omega_probe - spec.omega_qd;
  return {spec.omega_probe - spec.omega_cavity, d2, d2 + spec.delta23};
}

inline bool is_nonnegative_param(ParamId id)
{
  switch (id)
  {
    case ParamId::gamma1:
    case ParamId::gamma2:
    case ParamId::gamma3:
    case ParamId::big_gamma:
    case ParamId::omega: return true;
    default: return false;
  }
}

/// Returns the parameters unchanged, or throws InvalidParameter naming the
/// first offending field.
inline const SystemParams& validate(const SystemParams& params)
{
  for (ParamId id : kAllParams)
  {
    const double v = param_value(params, id);
    if (!std::isfinite(v))
    {
      throw InvalidParameter(std::string(param_name(id)) + " must be finite");
    }
    if (is_nonnegative_param(id) && v < 0.0)
    {
      throw InvalidParameter(std::string(param_name(id)) + " must be ≥ 0");
    }
  }
  return params;
}

/// Linear dependency  target = source + offset,  resolved after axis values
/// are assigned.
struct Link
{
  ParamId target = ParamId::delta2;
  ParamId source = ParamId::delta1;
  double offset = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

template <typename Links>
void apply_links(SystemParams& p, const Links& links)
{
  for (const Link& l : links)
  {
    param_ref(p, l.target) = param_value(p, l.source) + l.offset;
  }
}

}  // namespace wgqed
