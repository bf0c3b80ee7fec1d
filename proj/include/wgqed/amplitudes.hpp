// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "wgqed/errors.hpp"
#include "wgqed/params.hpp"

namespace wgqed {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

enum class Model
{
  three_level,
  two_level,
};

constexpr std::string_view model_name(Model m)
{
  return m == Model::three_level ? "three-level" : "two-level";
}

inline Model parse_model(std::string_view name)
{
  if (name == "three-level" || name == "three_level")
  {
    return Model::three_level;
  }
  if (name == "two-level" || name == "two_level")
  {
    return Model::two_level;
  }
  throw InvalidParameter("unknown model '" + std::string(name) +
                         "' (expected three-level or two-level)");
}

struct EvalOptions
{
  /// |denominator| below this raises SingularPoint.
  double singular_floor = 1e-300;
};

/// Scattering amplitudes at one parameter point and their derived observables.
struct AmplitudeSet
{
  cplx t;
  cplx r_f;
  cplx r_b;
  double T = 0.0;
  double R_f = 0.0;
  double R_b = 0.0;
  double A_f = 0.0;
  double A_b = 0.0;
};

struct Observables
{
  double T = 0.0;
  double R_f = 0.0;
  double R_b = 0.0;
  double A_f = 0.0;
  double A_b = 0.0;
};

inline Observables observables(cplx t, cplx r_f, cplx r_b)
{
  Observables o;
  o.T = std::norm(t);
  o.R_f = std::norm(r_f);
  o.R_b = std::norm(r_b);
  o.A_f = 1.0 - o.T - o.R_f;
  o.A_b = 1.0 - o.T - o.R_b;
  return o;
}

inline AmplitudeSet make_amplitude_set(cplx t, cplx r_f, cplx r_b)
{
  const Observables o = observables(t, r_f, r_b);
  return {t, r_f, r_b, o.T, o.R_f, o.R_b, o.A_f, o.A_b};
}

/// Intermediate quantities of the driven three-level closed form.
struct Auxiliaries
{
  cplx A;
  cplx B1;
  cplx B2;
  cplx B3;
  cplx C;
  cplx P;
  /// Gamma-independent part of P; equals the bracketed transmission term up to sign.
  cplx P0;
};

inline Auxiliaries three_level_auxiliaries(const SystemParams& p)
{
  const double d1 = p.delta1, d2 = p.delta2, d3 = p.delta3;
  const double g1 = p.gamma1, g2 = p.gamma2, g3 = p.gamma3;
  const double G = p.big_gamma, lam = p.lambda;
  const double W2 = p.omega * p.omega;
  const cplx e = std::polar(1.0, p.theta);
  const cplx e2 = std::polar(1.0, 2.0 * p.theta);

  Auxiliaries x;
  x.A = g1 * (W2 - 4.0 * kI * g3 * d2 + 4.0 * g2 * cplx(g3, -d3) - 4.0 * d2 * d3);
  x.B1 = cplx(d1, g1);
  x.B2 = cplx(d2, g2);
  x.B3 = cplx(d3, g3);
  x.C = 4.0 * G * G * (e2 - 1.0) * cplx(g3, -d3);

  const cplx loop = 2.0 * e * lam;
  x.P0 = kI * W2 * d1 + g3 * (-4.0 * lam * lam + 4.0 * kI * g2 * d1 + 4.0 * d1 * d2) +
         4.0 * kI * lam * lam * d3 + 4.0 * g2 * d1 * d3 - 4.0 * kI * d1 * d2 * d3 - x.A;
  x.P = x.C -
        G * (W2 + 4.0 * g3 * (g1 + g2 - kI * (loop + d1 + d2)) -
             4.0 * d3 * (loop + kI * g1 + kI * g2 + d1 + d2)) +
        x.P0;
  return x;
}

namespace detail {

inline void check_denominator(cplx denom, const EvalOptions& opts, const char* what)
{
  if (!(std::abs(denom) >= opts.singular_floor))
  {
    throw SingularPoint(std::string("singular scattering denominator ") + what);
  }
}

}  // namespace detail

/// Closed-form amplitudes for the cavity plus driven Lambda-type dot.
///
/// The r_f and r_b numerators carry -4 Delta3 (...) so that Omega -> 0
/// reproduces the undriven two-level forms and agrees with the direct
/// solution of the stationary equations.
inline AmplitudeSet eval_three_level(const SystemParams& params, const EvalOptions& opts = {})
{
  const SystemParams& p = validate(params);
  const Auxiliaries x = three_level_auxiliaries(p);
  detail::check_denominator(x.P, opts, "P");

  const double G = p.big_gamma, lam = p.lambda;
  const double g1 = p.gamma1, g2 = p.gamma2, g3 = p.gamma3;
  const double d1 = p.delta1, d2 = p.delta2, d3 = p.delta3;
  const double W2 = p.omega * p.omega;
  const cplx e = std::polar(1.0, p.theta);
  const cplx e2 = std::polar(1.0, 2.0 * p.theta);
  const cplx loop = 2.0 * e * lam;

  // e^{-i theta} 4 Gamma lambda (e^{2 i theta} - 1) B3 = 8 i Gamma lambda sin(theta) B3
  const cplx t_num = 8.0 * kI * G * lam * std::sin(p.theta) * x.B3 + x.P0;
  const cplx rf_num =
      x.C - G * (W2 + 4.0 * g3 * (e2 * g1 + g2 - kI * (loop + e2 * d1 + d2)) -
                 4.0 * d3 * (loop + e2 * x.B1 + x.B2));
  const cplx rb_num =
      x.C - G * (e2 * W2 + 4.0 * g3 * (g1 + e2 * g2 - kI * (loop + d1 + e2 * d2)) -
                 4.0 * d3 * (loop + x.B1 + e2 * x.B2));

  return make_amplitude_set(t_num / x.P, -rf_num / x.P, -rb_num / x.P);
}

/// Closed-form amplitudes with the drive switched off (two-level dot).
/// Omega, Delta3 and gamma3 are ignored.
inline AmplitudeSet eval_two_level(const SystemParams& params, const EvalOptions& opts = {})
{
  const SystemParams& p = validate(params);
  const double G = p.big_gamma, lam = p.lambda;
  const cplx e = std::polar(1.0, p.theta);
  const cplx e2 = std::polar(1.0, 2.0 * p.theta);
  const cplx B1(p.delta1, p.gamma1);
  const cplx B2(p.delta2, p.gamma2);

  const cplx bare = B1 * B2 - lam * lam;
  const cplx round_trip = (e2 - 1.0) * G * G;
  const cplx loop = 2.0 * e * lam * G;
  const cplx denom = round_trip + kI * (loop + G * (B1 + B2)) + bare;
  detail::check_denominator(denom, opts, "D");

  // e^{-i theta} i (e^{2 i theta} - 1) lambda Gamma = -2 lambda Gamma sin(theta)
  const cplx t_num = bare - 2.0 * lam * G * std::sin(p.theta);
  const cplx rf_num = round_trip + kI * (loop + (e2 * G * B1 + G * B2));
  const cplx rb_num = round_trip + kI * (loop + (G * B1 + e2 * G * B2));

  return make_amplitude_set(t_num / denom, -rf_num / denom, -rb_num / denom);
}

inline AmplitudeSet evaluate(const SystemParams& params, Model model, const EvalOptions& opts = {})
{
  return model == Model::three_level ? eval_three_level(params, opts)
                                     : eval_two_level(params, opts);
}

}  // namespace wgqed
