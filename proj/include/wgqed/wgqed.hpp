// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wgqed/amplitudes.hpp"
#include "wgqed/config.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/export.hpp"
#include "wgqed/linalg.hpp"
#include "wgqed/oracle.hpp"
#include "wgqed/oracle_check.hpp"
#include "wgqed/params.hpp"
#include "wgqed/presets.hpp"
#include "wgqed/random.hpp"
#include "wgqed/spectral.hpp"
#include "wgqed/sweep.hpp"
