// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfcurv/geometry.hpp"

namespace pfcurv::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidMesh = 2,
  kDegenerate = 3,
  kUnsupported = 4,
  kCheckFailed = 5,
};

/// Runs one pfcurv command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints one PASS/FAIL/SKIP line per check; kCheckFailed if any failed.
int run_checks_command(const MetricComplex& m, const std::string& suite, std::ostream& out);

}  // namespace pfcurv::cli
