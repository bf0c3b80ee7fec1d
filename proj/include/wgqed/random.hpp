// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "wgqed/params.hpp"

namespace wgqed {

/// Seeded generator whose draws are identical on every platform:
/// std::mt19937_64 has a standardised output sequence, and the mapping to
/// [0, 1) is done here instead of through std::uniform_real_distribution.
class PortableRng
{
public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi)
  {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

private:
  std::mt19937_64 engine_;
};

/// Draw ranges: gamma in [0, 2], Gamma in [0, 3], lambda in [-2, 2],
/// Omega in [0, 2], theta in [0, 2 pi), Delta in [-5, 5].
inline SystemParams random_passive_params(PortableRng& rng)
{
  SystemParams p;
  p.delta1 = rng.uniform(-5.0, 5.0);
  p.delta2 = rng.uniform(-5.0, 5.0);
  p.delta3 = rng.uniform(-5.0, 5.0);
  p.gamma1 = rng.uniform(0.0, 2.0);
  p.gamma2 = rng.uniform(0.0, 2.0);
  p.gamma3 = rng.uniform(0.0, 2.0);
  p.big_gamma = rng.uniform(0.0, 3.0);
  p.lambda = rng.uniform(-2.0, 2.0);
  p.omega = rng.uniform(0.0, 2.0);
  p.theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return p;
}

}  // namespace wgqed
