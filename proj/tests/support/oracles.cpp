// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include "pfcurv/meshgen.hpp"

namespace pfcurv::testing {

MeshData jittered_grid(int dimension, int n, double jitter, unsigned seed) {
  MeshData mesh = flat_grid_mesh(dimension, n);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  for (auto& p : *mesh.coordinates) {
    for (double& x : p) x += u(gen);
  }
  return mesh;
}

}  // namespace pfcurv::testing
