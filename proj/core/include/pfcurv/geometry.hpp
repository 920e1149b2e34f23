// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "pfcurv/complex.hpp"

namespace pfcurv {

/// Relative pivot threshold below which a Gram factorization is treated as
/// singular (scaled by the largest squared edge length of the simplex).
inline constexpr double kDegeneracyTolerance = 1e-12;

struct EdgeLengthSq {
  int a = 0;
  int b = 0;
  double value = 0.0;
};

/// Mesh as read from or written to disk. Either `coordinates` or
/// `edge_lengths_sq` (or both, if they agree) fixes the metric.
struct MeshData {
  int dimension = 0;
  std::vector<std::vector<int>> cells;
  std::optional<std::vector<std::vector<double>>> coordinates;
  std::vector<EdgeLengthSq> edge_lengths_sq;
};

/// A simplicial complex with a flat Euclidean metric on every simplex,
/// fixed by the squared edge lengths alone. All per-simplex quantities
/// (volumes, circumcenters, elevations, circumcentric dual volumes) are
/// computed once at construction and then only read.
///
/// Conventions: |s| = 1 for vertices and |*s| = 1 for top cells. Elevations
/// and dual volumes are signed; negative values appear on meshes that are
/// not well-centered and are never clamped.
class MetricComplex {
 public:
  /// `lengths_sq[i]` is the squared length of edge {1, i}.
  MetricComplex(std::shared_ptr<const SimplicialComplex> complex, std::vector<double> lengths_sq);

  const SimplicialComplex& complex() const { return *complex_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
  int dimension() const { return complex_->dimension(); }

  std::span<const double> lengths_sq() const { return lengths_sq_; }
  /// Squared distance between two vertex labels joined by an edge.
  double length_sq(int a, int b) const;

  /// Gram matrix of the edge vectors from the first vertex of `s`.
  Eigen::MatrixXd gram(SimplexId s) const;

  double volume(SimplexId s) const { return volume_[s.dim][s.index]; }
  double dual_volume(SimplexId s) const { return dual_[s.dim][s.index]; }

  /// Barycentric coordinates of the circumcenter, ordered like
  /// complex().vertices(s).
  std::span<const double> circumcenter(SimplexId s) const;
  double circumradius_sq(SimplexId s) const { return r2_[s.dim][s.index]; }

  /// Signed distance from the circumcenter of the facet opposite vertex
  /// slot `position` of `cell` to the circumcenter of `cell`. Positive when
  /// the cell circumcenter is on the same side of the facet as the opposite
  /// vertex.
  double elevation_at(SimplexId cell, int position) const;
  /// Same, addressed by the facet. Throws NotIncident unless `face` is a
  /// facet of `cell`.
  double elevation(SimplexId face, SimplexId cell) const;

  /// Signed (dim c - dim s)-volume of the part of the dual of `s` lying
  /// inside the simplex `c` (1 when s == c). The global dual_volume is the
  /// same accumulation carried up to every top cell.
  double local_dual_volume(SimplexId s, SimplexId c) const;

  /// Total d-volume of the mesh.
  double total_volume() const;
  /// Longest edge length.
  double length_scale() const { return length_scale_; }

  /// Fraction of top cells whose circumcenter lies in the closed cell.
  double well_centered_fraction() const;

 private:
  friend struct MetricComplexTestAccess;

  std::shared_ptr<const SimplicialComplex> complex_;
  std::vector<double> lengths_sq_;
  std::vector<std::vector<double>> volume_;
  std::vector<std::vector<double>> r2_;
  std::vector<std::vector<double>> bary_;  // per k: flattened (k+1)
  std::vector<std::vector<double>> elev_;  // per k >= 1: flattened (k+1)
  std::vector<std::vector<double>> dual_;
  double length_scale_ = 0.0;
};

/// Builds the complex and the metric from a mesh description. Throws
/// InvalidMesh for malformed input and DegenerateSimplex for lengths that
/// do not describe a Euclidean simplex.
MetricComplex make_metric_complex(const MeshData& mesh, const BuildOptions& options = {});

/// Cells plus squared lengths of every edge (no coordinates).
MeshData to_mesh_data(const MetricComplex& m);

/// Vertex coordinates of `s` in R^k (rows), first vertex at the origin,
/// obtained from a Cholesky factor of the Gram matrix.
Eigen::MatrixXd embed_simplex(const MetricComplex& m, SimplexId s);

double simplex_volume(const MetricComplex& m, SimplexId s);

struct Circumcenter {
  std::vector<double> barycentric;
  double radius_sq = 0.0;
};
Circumcenter circumcenter(const MetricComplex& m, SimplexId s);

double elevation(const MetricComplex& m, SimplexId s, SimplexId t);
double dual_volume(const MetricComplex& m, SimplexId s);

/// A full flag s_0 < s_1 < ... < s_d of incident simplexes.
using Flag = std::vector<SimplexId>;

/// Signed volume of the simplex spanned by the circumcenters of a full flag.
/// Its legs are mutually orthogonal, so the volume is the product of the
/// elevations divided by d!.
double irreducible_cell_volume(const MetricComplex& m, const Flag& flag);

/// Visits every full flag of the complex.
void for_each_flag(const MetricComplex& m, const std::function<void(const Flag&)>& fn);

/// V = |s| |*s| / C(d, k).
double hybrid_volume(const MetricComplex& m, SimplexId s);

/// Signed volume of the irreducible cells whose flags pass through every
/// simplex of `chain`, which must be nested (each a face of the next).
double shared_hybrid_volume(const MetricComplex& m, std::span<const SimplexId> chain);
/// Two-element form; the arguments may come in either order. Throws
/// NotIncident when neither is a face of the other.
double shared_hybrid_volume(const MetricComplex& m, SimplexId s, SimplexId t);

/// Hybrid measure of `inner` computed inside `container` alone:
/// |inner| |*inner within container| / C(dim container, dim inner).
double restricted_hybrid_measure(const MetricComplex& m, SimplexId inner, SimplexId container);

/// A_{h,l}: restricted hybrid measure of edge `edge` inside hinge `h`. Needs
/// d >= 3.
double restricted_hinge_area(const MetricComplex& m, const Hinge& h, SimplexId edge);

/// Magnitude of the moment arm between simplicial `s` (dim k) and the dual
/// element *partner (dim p = d - dim partner); requires s to be a face of
/// partner.
double moment_arm(const MetricComplex& m, SimplexId s, SimplexId partner);

/// Interior angle of top cell `top` at hinge `h`, in (0, pi).
double dihedral_angle(const MetricComplex& m, const Hinge& h, int top);
double dihedral_angle(const MetricComplex& m, SimplexId hinge, SimplexId top);

}  // namespace pfcurv
