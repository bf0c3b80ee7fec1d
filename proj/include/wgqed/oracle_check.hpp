// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "wgqed/amplitudes.hpp"
#include "wgqed/oracle.hpp"
#include "wgqed/random.hpp"

namespace wgqed {

/// Largest deviations between the closed forms and the direct solve at one point.
struct PointDeviation
{
  double three_level = 0.0;  ///< max over t, r_f, r_b
  double two_level = 0.0;    ///< same, with the drive switched off
  double reciprocity = 0.0;  ///< |t_forward - t_backward| from the direct solve
  double residual = 0.0;     ///< worst scaled residual of the direct solutions

  double worst() const { return std::max({three_level, two_level, reciprocity}); }
};

inline PointDeviation compare_with_oracle(const SystemParams& p)
{
  PointDeviation d;
  auto track = [&](const SystemParams& q, const oracle::OracleSolution& s) {
    d.residual = std::max(d.residual, oracle::residuals(s, q) / (1.0 + oracle::coefficient_scale(q)));
  };

  const AmplitudeSet c3 = eval_three_level(p);
  const auto f3 = oracle::solve_forward(p);
  const auto b3 = oracle::solve_backward(p);
  track(p, f3);
  track(p, b3);
  d.three_level = std::max({std::abs(f3.t - c3.t), std::abs(f3.r - c3.r_f),
                            std::abs(b3.t - c3.t), std::abs(b3.r - c3.r_b)});
  d.reciprocity = std::abs(f3.t - b3.t);

  SystemParams q = p;
  q.omega = 0.0;
  const AmplitudeSet c2 = eval_two_level(q);
  const auto f2 = oracle::solve_forward(q);
  const auto b2 = oracle::solve_backward(q);
  track(q, f2);
  track(q, b2);
  d.two_level = std::max({std::abs(f2.t - c2.t), std::abs(f2.r - c2.r_f),
                          std::abs(b2.t - c2.t), std::abs(b2.r - c2.r_b)});
  d.reciprocity = std::max(d.reciprocity, std::abs(f2.t - b2.t));
  return d;
}

struct OracleCheckReport
{
  std::size_t draws = 0;
  std::size_t singular = 0;  ///< draws skipped because a denominator vanished
  double max_deviation = 0.0;
  double max_reciprocity = 0.0;
  double max_residual = 0.0;
  SystemParams worst;
};

/// Compares closed forms and direct solves over `n` seeded random passive draws.
inline OracleCheckReport oracle_check(std::size_t n, std::uint64_t seed)
{
  OracleCheckReport rep;
  PortableRng rng(seed);
  for (std::size_t i = 0; i < n; ++i)
  {
    const SystemParams p = random_passive_params(rng);
    ++rep.draws;
    PointDeviation d;
    try
    {
      d = compare_with_oracle(p);
    }
    catch (const SingularPoint&)
    {
      ++rep.singular;
      continue;
    }
    catch (const DegenerateDrive&)
    {
      ++rep.singular;
      continue;
    }
    if (d.worst() > rep.max_deviation)
    {
      rep.max_deviation = d.worst();
      rep.worst = p;
    }
    rep.max_reciprocity = std::max(rep.max_reciprocity, d.reciprocity);
    rep.max_residual = std::max(rep.max_residual, d.residual);
  }
  return rep;
}

}  // namespace wgqed
