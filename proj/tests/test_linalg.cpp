// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#include <complex>

#include <gtest/gtest.h>

#include "wgqed/linalg.hpp"
#include "wgqed/random.hpp"

using namespace wgqed;
using cd = std::complex<double>;

TEST(Linalg, SolvesRandomSystemsWithSmallResidual)
{
  PortableRng rng(3);
  for (int trial = 0; trial < 500; ++trial)
  {
    linalg::Matrix<cd, 4> a;
    linalg::Vector<cd, 4> b;
    for (auto& row : a)
    {
      for (auto& v : row)
      {
        v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      }
    }
    for (auto& v : b)
    {
      v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    }
    const auto x = linalg::solve(a, b);
    const auto ax = linalg::multiply(a, x);
    double scale = 1.0;
    for (const auto& v : x)
    {
      scale = std::max(scale, std::abs(v));
    }
    for (int i = 0; i < 4; ++i)
    {
      EXPECT_LT(std::abs(ax[i] - b[i]), 1e-12 * scale);
    }
  }
}

TEST(Linalg, PivotsPastZeroLeadingEntry)
{
  linalg::Matrix<cd, 2> a{{{0.0, 1.0}, {1.0, 0.0}}};
  const auto x = linalg::solve(a, linalg::Vector<cd, 2>{cd(2, 1), cd(3, 0)});
  EXPECT_EQ(x[0], cd(3, 0));
  EXPECT_EQ(x[1], cd(2, 1));
}

TEST(Linalg, SingularThrows)
{
  linalg::Matrix<cd, 2> a{{{1.0, 2.0}, {2.0, 4.0}}};
  EXPECT_THROW(linalg::solve(a, linalg::Vector<cd, 2>{1.0, 1.0}), SingularPoint);
}
