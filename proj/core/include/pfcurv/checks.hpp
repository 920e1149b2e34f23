// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "pfcurv/geometry.hpp"

namespace pfcurv {

enum class CheckSuite { volumes, dec, curvature, all };

/// Parses volumes | dec | curvature | all.
CheckSuite parse_check_suite(const std::string& name);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  bool skipped = false;
  std::string note;
};

/// Invariant checks on one mesh:
///   volumes    hybrid volumes partition the mesh for every k; hybrid volume
///              equals the signed sum over its flags; circumcenters are
///              equidistant; edge volumes split over hinges (d >= 3)
///   dec        d d = 0 on integer cochains; <d a, b> = <a, delta b>;
///              hodge round trip
///   curvature  Gauss-Bonnet (closed 2-meshes); eigenvalue-weighted hinge
///              volumes give the action; edge, dual-edge and scalar Ricci
///              integrals give twice the action; the two edge Ricci paths agree
std::vector<CheckResult> run_checks(const MetricComplex& m, CheckSuite suite);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace pfcurv
