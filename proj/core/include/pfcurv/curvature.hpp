// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "pfcurv/dec.hpp"
#include "pfcurv/geometry.hpp"

namespace pfcurv {

/// Deficits with |eps| at or below this are treated as flat when a hinge or
/// element has zero dual measure (0/0 resolves to 0).
inline constexpr double kFlatDeficit = 1e-12;

struct CurvatureOptions {
  /// Give boundary hinges the deficit pi - sum(theta) and include them in
  /// the action and in curvature averages.
  bool include_boundary = false;
};

/// 2 pi minus the interior angles around an interior hinge. Throws
/// BoundaryHinge on boundary hinges.
double deficit(const MetricComplex& m, const Hinge& h);
/// pi minus the interior angles; the half-space analogue for boundary hinges.
double boundary_deficit(const MetricComplex& m, const Hinge& h);

/// eps_h / |*h|.
double sectional(const MetricComplex& m, const Hinge& h);

/// Single eigenpair of the rank-1 Riemann operator on a hinge. The
/// eigenplane is the dual polygon *hinge.
struct RiemannEigen {
  double value = 0.0;
  SimplexId hinge;
};
/// Unnormalized value C(d,2) eps/|*h|; normalized value eps/|*h|.
RiemannEigen riemann_hinge(const MetricComplex& m, const Hinge& h, bool normalized);

/// Ricci curvature on the dual edge *face, face a (d-1)-simplex:
///   unnormalized  d(d-1) <eps_h / |*h|>_face   (weights V_{h,face} / V_face)
///   normalized    unnormalized / d.
/// Needs d >= 3. Throws BoundaryElement for boundary faces.
double ricci_dual_edge(const MetricComplex& m, SimplexId face, bool normalized,
                       const CurvatureOptions& options = {});

/// Ricci curvature on a simplicial edge from area-weighted averages over the
/// hinges containing it (weights A_{h,l}):
///   unnormalized  d(d-1) <eps>_l / <|*h|>_l,  normalized  unnormalized / d.
double ricci_simplicial_edge(const MetricComplex& m, SimplexId edge, bool normalized,
                             const CurvatureOptions& options = {});

/// The same edge value obtained from the dual-edge Ricci terms restricted to
/// the domains shared with the edge (the double-dual path):
///   sum_{f > l} sum_{l < h < f} d(d-1) K_h V_{l,h,f} / V_l.
double ricci_edge_via_dual(const MetricComplex& m, SimplexId edge, bool normalized,
                           const CurvatureOptions& options = {});

/// Scalar curvature. Simplicial lattice: `element` is a vertex and the value
/// is d(d-1) <eps>_v / <|*h|>_v with weights A_{h,v}. Dual lattice:
/// `element` is a top cell and the value is sum_h d(d-1) K_h V_{h,T} / |T|.
double scalar_vertex(const MetricComplex& m, SimplexId element, Lattice lattice,
                     const CurvatureOptions& options = {});

/// sum over interior hinges of eps_h |h|, times `prefactor` (1 by default;
/// pass c^4 / 8 pi G for physical units).
double regge_action(const MetricComplex& m, std::optional<double> prefactor = std::nullopt,
                    const CurvatureOptions& options = {});

struct HingeRecord {
  SimplexId id;
  bool boundary = false;
  double volume = 0.0;
  double dual_volume = 0.0;
  double hybrid_volume = 0.0;
  std::optional<double> deficit;
  std::optional<double> sectional;
  std::optional<double> riemann;             // unnormalized
  std::optional<double> riemann_normalized;  // == sectional
};

struct ElementRecord {
  SimplexId id;  // simplicial partner (the face for dual edges, the cell for dual vertices)
  bool boundary = false;
  double volume = 0.0;       // |sigma| of the element itself
  double dual_volume = 0.0;  // |*sigma|
  double hybrid_volume = 0.0;
  std::optional<double> value;             // unnormalized
  std::optional<double> value_normalized;  // normalized
};

/// Everything the curvature stack produces for one mesh. Values that are
/// undefined for an element (boundary elements, d < 3 for Ricci) are empty.
///
/// Reported Riemann/Ricci values are the unoriented ones; the oriented
/// curvature forms carry an extra factor `orientation_factor`.
struct CurvatureReport {
  int dimension = 0;
  std::vector<HingeRecord> hinges;
  std::vector<ElementRecord> dual_edges;
  std::vector<ElementRecord> edges;
  std::vector<ElementRecord> vertices;
  std::vector<ElementRecord> dual_vertices;
  double action = 0.0;
  double orientation_factor = 2.0;
};

CurvatureReport compute_curvature_report(const MetricComplex& m, const CurvatureOptions& options = {});

}  // namespace pfcurv
