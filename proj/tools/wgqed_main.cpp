// Copyright The wgqed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wgqed/cli.hpp"

int main(int argc, char** argv)
{
  return wgqed::cli::cli_main(argc, argv);
}
