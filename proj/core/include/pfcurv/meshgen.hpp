// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "pfcurv/geometry.hpp"

namespace pfcurv {

/// SplitMix64 used in counter mode: draw n of a stream is the SplitMix64
/// output for state seed + (n + 1) * 0x9E3779B97F4A7C15. Any draw can be
/// recomputed independently, which keeps perturbations reproducible across
/// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const;
  /// Uniform on [0, 1) from the top 53 bits.
  double uniform_at(std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

/// Flat unit-cube grid with n cells per axis: two triangles per square in
/// 2D, six tetrahedra per cube (one per axis permutation) in 3D.
MeshData flat_grid_mesh(int dimension, int n);
MetricComplex gen_flat_grid(int dimension, int n);

/// Boundary of the regular unit-edge simplex of dimension `ambient`: a
/// closed (ambient - 1)-manifold with all lengths 1.
MeshData boundary_of_simplex_mesh(int ambient);
MetricComplex gen_boundary_of_simplex(int ambient);

/// Icosahedron split `level` times (each triangle into four at the edge
/// midpoints), vertices projected to the sphere of `radius`.
MeshData icosphere_mesh(int level, double radius);
MetricComplex gen_icosphere(int level, double radius);

/// Maximum number of resampling rounds in perturb_lengths.
inline constexpr int kMaxResampleRounds = 32;

/// Multiplies every squared length by 1 + U(-amplitude, amplitude). Edges of
/// top cells that come out degenerate are redrawn (from the original length,
/// with fresh counters) up to kMaxResampleRounds times.
MetricComplex perturb_lengths(const MetricComplex& m, double amplitude, std::uint64_t seed);

/// Generator request, as accepted by the `gen` command.
struct MeshSpec {
  std::string generator;  // flat-grid | simplex-boundary | icosphere
  int dimension = 2;      // flat-grid: 2 or 3; simplex-boundary: ambient dimension
  int size = 1;           // flat-grid cells per axis
  int level = 0;          // icosphere
  double radius = 1.0;    // icosphere
  double amplitude = 0.0;
  std::uint64_t seed = 0;
};

/// Runs the generator and, for a nonzero amplitude, the perturbation.
/// Perturbed meshes carry squared lengths only.
MeshData generate(const MeshSpec& spec);

}  // namespace pfcurv
