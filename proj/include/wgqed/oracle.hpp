// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string_view>

#include "wgqed/amplitudes.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/linalg.hpp"
#include "wgqed/params.hpp"

// Direct solution of the stationary scattering equations. The waveguide is
// taken with v_g = 1 and V = sqrt(Gamma / 2), which reproduces every V^2 / v_g
// combination; the closed forms are never consulted here.

namespace wgqed::oracle {

enum class Direction
{
  forward,   ///< incident from the left, cavity met first
  backward,  ///< incident from the right, dot met first
};

constexpr std::string_view direction_name(Direction d)
{
  return d == Direction::forward ? "forward" : "backward";
}

struct OracleSolution
{
  cplx xi1;  ///< cavity
  cplx xi2;  ///< dot, state |2>
  cplx xi3;  ///< dot, state |3>
  cplx a;    ///< right-moving amplitude between the scatterers
  cplx b;    ///< left-moving amplitude between the scatterers
  cplx t;
  cplx r;
  Direction direction = Direction::forward;
};

struct OracleOptions
{
  /// |det| of the reduced 2x2 system below this raises SingularPoint.
  double singular_floor = 1e-300;
};

namespace detail {

struct Couplings
{
  double V;   // waveguide coupling
  cplx c;     // V / (i v_g)
  cplx e;     // e^{i theta}
  cplx B1;    // Delta1 + i gamma1
  cplx B2;    // Delta2 + i gamma2
  cplx B3;    // Delta3 + i gamma3
  double half_rabi;
};

inline Couplings couplings(const SystemParams& p)
{
  const double V = std::sqrt(p.big_gamma / 2.0);
  return {V,
          cplx(0.0, -V),
          std::polar(1.0, p.theta),
          cplx(p.delta1, p.gamma1),
          cplx(p.delta2, p.gamma2),
          cplx(p.delta3, p.gamma3),
          p.omega / 2.0};
}

}  // namespace detail

/// Solves one incidence direction. The scatterer met first sits at x = 0 and
/// obeys  B_near xi_near = lambda xi_far + V (1 + a + r + b);  the other sits
/// at x = d and obeys  B_far xi_far = lambda xi_near + V [(a + t) e^{i theta} + b e^{-i theta}].
/// The backward problem is the same geometry with the scatterers exchanged.
inline OracleSolution solve(const SystemParams& params, Direction dir, const OracleOptions& opts = {})
{
  const SystemParams& p = validate(params);
  const detail::Couplings k = detail::couplings(p);

  // Eliminate xi3 through (Omega/2) xi2 = B3 xi3.
  cplx dot_self = k.B2;
  if (p.omega != 0.0)
  {
    if (!(std::abs(k.B3) >= opts.singular_floor))
    {
      throw DegenerateDrive("drive is on while Delta3 + i gamma3 = 0");
    }
    dot_self -= k.half_rabi * k.half_rabi / k.B3;
  }

  const bool fwd = dir == Direction::forward;
  const cplx near_self = fwd ? k.B1 : dot_self;
  const cplx far_self = fwd ? dot_self : k.B1;

  // Substituting a = 1 + c xi_near, b = c e xi_far, r = b + c xi_near and
  // t = a + c e^{-1} xi_far:
  //   1 + a + r + b                      = 2 + 2 c xi_near + 2 c e xi_far
  //   (a + t) e + b / e                  = 2 e + 2 c e xi_near + 2 c xi_far
  const cplx Vc2 = 2.0 * k.V * k.c;
  linalg::Matrix<cplx, 2> m{{{near_self - Vc2, -p.lambda - Vc2 * k.e},
                             {-p.lambda - Vc2 * k.e, far_self - Vc2}}};
  const linalg::Vector<cplx, 2> rhs{2.0 * k.V, 2.0 * k.V * k.e};

  const cplx det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (!(std::abs(det) >= opts.singular_floor))
  {
    throw SingularPoint("singular stationary system (|det| below floor)");
  }
  const auto x = linalg::solve(m, rhs, 0.0);
  const cplx xi_near = x[0];
  const cplx xi_far = x[1];

  OracleSolution s;
  s.direction = dir;
  s.xi1 = fwd ? xi_near : xi_far;
  s.xi2 = fwd ? xi_far : xi_near;
  s.xi3 = p.omega != 0.0 ? k.half_rabi * s.xi2 / k.B3 : cplx(0.0);
  s.a = 1.0 + k.c * xi_near;
  s.b = k.c * k.e * xi_far;
  s.t = s.a + k.c * xi_far / k.e;
  s.r = s.b + k.c * xi_near;
  return s;
}

inline OracleSolution solve_forward(const SystemParams& params, const OracleOptions& opts = {})
{
  return solve(params, Direction::forward, opts);
}

inline OracleSolution solve_backward(const SystemParams& params, const OracleOptions& opts = {})
{
  return solve(params, Direction::backward, opts);
}

/// Largest modulus among the coefficients of the stationary relations.
inline double coefficient_scale(const SystemParams& p)
{
  const detail::Couplings k = detail::couplings(p);
  return std::max({std::abs(k.B1), std::abs(k.B2), std::abs(k.B3), std::abs(p.lambda),
                   k.half_rabi, k.V, 1.0});
}

/// Substitutes the solution into every stationary relation and returns the
/// largest violation modulus.
inline double residuals(const OracleSolution& s, const SystemParams& p)
{
  const detail::Couplings k = detail::couplings(p);
  const bool fwd = s.direction == Direction::forward;
  const cplx xi_near = fwd ? s.xi1 : s.xi2;
  const cplx xi_far = fwd ? s.xi2 : s.xi1;

  const cplx near_drive = k.V * (1.0 + s.a + s.r + s.b);
  const cplx far_drive = k.V * ((s.a + s.t) * k.e + s.b / k.e);

  const cplx res[] = {
      k.B2 * s.xi2 - p.lambda * s.xi1 - k.half_rabi * s.xi3 - (fwd ? far_drive : near_drive),
      k.B1 * s.xi1 - p.lambda * s.xi2 - (fwd ? near_drive : far_drive),
      k.half_rabi * s.xi2 - k.B3 * s.xi3,
      s.a - 1.0 - k.c * xi_near,
      s.t - s.a - k.c * xi_far / k.e,
      s.r - s.b - k.c * xi_near,
      s.b - k.c * xi_far * k.e,
  };
  double worst = 0.0;
  for (const cplx& r : res)
  {
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace wgqed::oracle
