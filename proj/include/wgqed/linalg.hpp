// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

#include "wgqed/errors.hpp"

namespace wgqed::linalg {

template <typename T, std::size_t N>
using Matrix = std::array<std::array<T, N>, N>;

template <typename T, std::size_t N>
using Vector = std::array<T, N>;

/// Solves A x = b by Gaussian elimination with partial pivoting on the
/// largest modulus. Throws SingularPoint if a pivot modulus drops below
/// `floor`.
template <typename T, std::size_t N>
Vector<T, N> solve(Matrix<T, N> a, Vector<T, N> b, double floor = 1e-300)
{
  for (std::size_t k = 0; k < N; ++k)
  {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < N; ++i)
    {
      if (std::abs(a[i][k]) > std::abs(a[piv][k]))
      {
        piv = i;
      }
    }
    if (!(std::abs(a[piv][k]) >= floor))
    {
      throw SingularPoint("singular linear system");
    }
    if (piv != k)
    {
      std::swap(a[piv], a[k]);
      std::swap(b[piv], b[k]);
    }
    for (std::size_t i = k + 1; i < N; ++i)
    {
      const T f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < N; ++j)
      {
        a[i][j] -= f * a[k][j];
      }
      b[i] -= f * b[k];
    }
  }

  Vector<T, N> x{};
  for (std::size_t k = N; k-- > 0;)
  {
    T s = b[k];
    for (std::size_t j = k + 1; j < N; ++j)
    {
      s -= a[k][j] * x[j];
    }
    x[k] = s / a[k][k];
  }
  return x;
}

template <typename T, std::size_t N>
Vector<T, N> multiply(const Matrix<T, N>& a, const Vector<T, N>& x)
{
  Vector<T, N> y{};
  for (std::size_t i = 0; i < N; ++i)
  {
    for (std::size_t j = 0; j < N; ++j)
    {
      y[i] += a[i][j] * x[j];
    }
  }
  return y;
}

}  // namespace wgqed::linalg
