// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace wgqed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates its domain (negative rate, non-finite value, ...).
class InvalidParameter : public Error
{
public:
  using Error::Error;
};

/// A denominator of the scattering solution fell below the singularity floor.
class SingularPoint : public Error
{
public:
  using Error::Error;
};

/// The drive couples |2> to |3> while Delta3 + i gamma3 vanishes.
class DegenerateDrive : public Error
{
public:
  using Error::Error;
};

class InvalidSlice : public Error
{
public:
  using Error::Error;
};

class UndefinedContrast : public Error
{
public:
  using Error::Error;
};

class ConfigError : public Error
{
public:
  using Error::Error;
};

class IoError : public Error
{
public:
  using Error::Error;
};

}  // namespace wgqed
