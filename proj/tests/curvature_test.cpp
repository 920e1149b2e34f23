// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pfcurv/curvature.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/meshgen.hpp"

namespace pfcurv {
namespace {

constexpr double kPi = std::numbers::pi;
const double kFiveCellDeficit = 2.0 * kPi - 3.0 * std::acos(1.0 / 3.0);

MetricComplex icosahedron() { return gen_icosphere(0, std::sin(2.0 * kPi / 5.0)); }

MetricComplex scaled(const MetricComplex& m, double s2) {
  std::vector<double> l(m.lengths_sq().begin(), m.lengths_sq().end());
  for (double& x : l) x *= s2;
  return MetricComplex(m.complex_ptr(), l);
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

TEST(Curvature, IcosahedronVertexDeficit) {
  const MetricComplex m = icosahedron();
  for (const Hinge& h : m.complex().hinges()) EXPECT_NEAR(deficit(m, h), kPi / 3.0, 1e-12);
}

TEST(Curvature, IcosahedronSectionalAndScalar) {
  const MetricComplex m = icosahedron();
  // Voronoi area of a vertex is a twelfth of the surface.
  const double area = 20.0 * std::sqrt(3.0) / 4.0 / 12.0;
  EXPECT_NEAR(area, 0.7216878, 1e-7);
  for (const Hinge& h : m.complex().hinges()) {
    EXPECT_NEAR(sectional(m, h), (kPi / 3.0) / area, 1e-12);
    EXPECT_NEAR(scalar_vertex(m, h.id, Lattice::simplicial), 2.0 * (kPi / 3.0) / area, 1e-12);
  }
  EXPECT_NEAR(2.0 * (kPi / 3.0) / area, 2.9021, 1e-4);
}

TEST(Curvature, IcosahedronActionIsFourPi) {
  EXPECT_NEAR(regge_action(icosahedron()), 4.0 * kPi, 1e-12);
}

TEST(Curvature, TetrahedronBoundaryDeficits) {
  const MetricComplex m = gen_boundary_of_simplex(3);
  for (const Hinge& h : m.complex().hinges()) EXPECT_NEAR(deficit(m, h), kPi, 1e-12);
}

TEST(Curvature, FiveCellEdgeDeficits) {
  const MetricComplex m = gen_boundary_of_simplex(4);
  EXPECT_NEAR(kFiveCellDeficit, 2.5903071, 1e-7);
  for (const Hinge& h : m.complex().hinges()) EXPECT_NEAR(deficit(m, h), kFiveCellDeficit, 1e-12);
  EXPECT_NEAR(regge_action(m), 10.0 * kFiveCellDeficit, 1e-11);
  EXPECT_NEAR(regge_action(m), 25.90307055, 1e-8);
}

TEST(Curvature, PrefactorScalesAction) {
  const MetricComplex m = gen_boundary_of_simplex(4);
  EXPECT_NEAR(regge_action(m, 2.5), 2.5 * regge_action(m), 1e-12);
}

TEST(Curvature, RiemannNormalizationRatio) {
  for (const MetricComplex& m : {gen_boundary_of_simplex(4), gen_boundary_of_simplex(5), icosahedron()}) {
    const int d = m.dimension();
    for (const Hinge& h : m.complex().hinges()) {
      const RiemannEigen full = riemann_hinge(m, h, false);
      const RiemannEigen norm = riemann_hinge(m, h, true);
      EXPECT_EQ(full.hinge, h.id);
      EXPECT_NEAR(full.value / norm.value, binomial(d, 2), 1e-12);
      EXPECT_NEAR(norm.value, deficit(m, h) / m.dual_volume(h.id), 1e-12);
    }
  }
}

TEST(Curvature, FiveCellRiemannUsesDualArea) {
  const MetricComplex m = gen_boundary_of_simplex(4);
  for (const Hinge& h : m.complex().hinges()) {
    EXPECT_NEAR(riemann_hinge(m, h, false).value, 3.0 * kFiveCellDeficit / m.dual_volume(h.id), 1e-12);
  }
}

TEST(Curvature, FiveCellDualEdgeRicci) {
  const MetricComplex m = gen_boundary_of_simplex(4);
  const double k = kFiveCellDeficit / m.dual_volume(m.complex().hinges()[0].id);
  for (std::size_t f = 0; f < m.complex().size(2); ++f) {
    EXPECT_NEAR(ricci_dual_edge(m, {2, static_cast<int>(f)}, false), 6.0 * k, 1e-12);
    EXPECT_NEAR(ricci_dual_edge(m, {2, static_cast<int>(f)}, true), 2.0 * k, 1e-12);
  }
}

TEST(Curvature, ThreeDimensionalEdgeRicciClosedForm) {
  for (const MetricComplex& m :
       {gen_boundary_of_simplex(4), perturb_lengths(gen_boundary_of_simplex(4), 0.1, 3)}) {
    for (const Hinge& h : m.complex().hinges()) {
      const double closed = 2.0 * deficit(m, h) / m.dual_volume(h.id);
      EXPECT_NEAR(ricci_simplicial_edge(m, h.id, true), closed, 1e-12 * std::abs(closed));
      EXPECT_NEAR(ricci_simplicial_edge(m, h.id, false), 3.0 * closed, 1e-12 * std::abs(closed));
    }
  }
}

TEST(Curvature, EdgeRicciPathsAgreeOnPerturbedFourManifold) {
  const MetricComplex m = perturb_lengths(gen_boundary_of_simplex(5), 0.1, 17);
  for (std::size_t e = 0; e < m.complex().size(1); ++e) {
    const SimplexId s{1, static_cast<int>(e)};
    EXPECT_LT(rel(ricci_simplicial_edge(m, s, false), ricci_edge_via_dual(m, s, false)), 1e-12);
  }
}

TEST(Curvature, TransferredDualRicciMatchesOnSymmetricMeshes) {
  for (const MetricComplex& m : {gen_boundary_of_simplex(4), gen_boundary_of_simplex(5)}) {
    const int d = m.dimension();
    Cochain dual = zero_cochain(m, Lattice::dual, 1);
    std::vector<double> dens(dual.values.size());
    for (std::size_t i = 0; i < dens.size(); ++i) {
      dens[i] = ricci_dual_edge(m, {d - 1, static_cast<int>(i)}, false);
    }
    const std::vector<double> edge =
        density(m, transfer_density(m, from_density(m, Lattice::dual, 1, dens), Lattice::simplicial));
    for (std::size_t e = 0; e < edge.size(); ++e) {
      EXPECT_LT(rel(edge[e], ricci_simplicial_edge(m, {1, static_cast<int>(e)}, false)), 1e-12);
    }
  }
}

TEST(Curvature, SingleCurvedHingeDualEdge) {
  // Shrink one interior edge of a flat grid so only nearby hinges curve,
  // then look at faces with exactly one curved hinge.
  const MetricComplex base = gen_flat_grid(3, 2);
  const SimplicialComplex& c = base.complex();
  std::vector<double> l(base.lengths_sq().begin(), base.lengths_sq().end());
  const int center[] = {13};
  const SimplexId v = c.find(center);
  const auto edges = c.cofaces(v, 1);
  l[edges[0].index] *= 0.97;
  const MetricComplex m(base.complex_ptr(), l);
  int checked = 0;
  for (std::size_t f = 0; f < c.size(2); ++f) {
    const SimplexId face{2, static_cast<int>(f)};
    if (c.on_boundary(face) || std::abs(base.dual_volume(face)) < 1e-9) continue;
    int curved = 0;
    SimplexId which{};
    for (const SimplexId& h : c.faces(face, 1)) {
      if (c.on_boundary(h)) continue;
      if (std::abs(deficit(m, c.hinge(h.index))) > 1e-10) {
        ++curved;
        which = h;
      }
    }
    if (curved != 1 || m.dual_volume(which) < 1e-6) continue;
    const double k = sectional(m, c.hinge(which.index));
    const double expected = 6.0 * k * shared_hybrid_volume(m, which, face) / hybrid_volume(m, face);
    // Other hinges of the face are flat only to rounding.
    EXPECT_NEAR(ricci_dual_edge(m, face, false), expected, 1e-9);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Curvature, FlatGridsAreFlat) {
  for (const MetricComplex& m : {gen_flat_grid(2, 3), gen_flat_grid(3, 3)}) {
    const SimplicialComplex& c = m.complex();
    for (const Hinge& h : c.hinges()) {
      if (!h.boundary) {
        EXPECT_NEAR(deficit(m, h), 0.0, 1e-12);
      }
    }
    EXPECT_NEAR(regge_action(m), 0.0, 1e-9);
    const CurvatureReport r = compute_curvature_report(m);
    for (const auto& rec : r.vertices) {
      if (rec.value) {
        EXPECT_NEAR(*rec.value, 0.0, 1e-9);
      }
    }
    for (const auto& rec : r.dual_edges) {
      if (rec.value) {
        EXPECT_NEAR(*rec.value, 0.0, 1e-9);
      }
    }
    for (const auto& rec : r.edges) {
      if (rec.value) {
        EXPECT_NEAR(*rec.value, 0.0, 1e-9);
      }
    }
  }
}

TEST(Curvature, FlatThreeGridReportsEveryInteriorDualEdge) {
  const MetricComplex m = gen_flat_grid(3, 3);
  const CurvatureReport r = compute_curvature_report(m);
  for (const auto& rec : r.dual_edges) EXPECT_EQ(rec.value.has_value(), !rec.boundary);
}

TEST(Curvature, GaussBonnetOnIcospheres) {
  for (int level = 0; level <= 3; ++level) {
    const MetricComplex m = gen_icosphere(level, 1.0);
    double sum = 0.0;
    for (const Hinge& h : m.complex().hinges()) sum += deficit(m, h);
    EXPECT_NEAR(sum, 4.0 * kPi, 1e-9) << "level " << level;
  }
}

TEST(Curvature, ScalingCovariance) {
  const MetricComplex m = perturb_lengths(gen_boundary_of_simplex(5), 0.05, 2);
  for (double s : {0.5, 3.0}) {
    const MetricComplex big = scaled(m, s * s);
    const auto hs = m.complex().hinges();
    for (const Hinge& h : hs) EXPECT_NEAR(deficit(big, h), deficit(m, h), 1e-12);
    EXPECT_LT(rel(regge_action(big), std::pow(s, m.dimension() - 2) * regge_action(m)), 1e-10);
    EXPECT_LT(rel(sectional(big, hs[0]), sectional(m, hs[0]) / (s * s)), 1e-10);
  }
}

TEST(Curvature, ScalarCurvatureIntegratesToTwiceTheAction) {
  const MetricComplex m = perturb_lengths(gen_boundary_of_simplex(5), 0.05, 4);
  const SimplicialComplex& c = m.complex();
  double simplicial = 0.0;
  for (std::size_t v = 0; v < c.size(0); ++v) {
    const SimplexId s{0, static_cast<int>(v)};
    simplicial += scalar_vertex(m, s, Lattice::simplicial) * hybrid_volume(m, s);
  }
  double dual = 0.0;
  for (std::size_t t = 0; t < c.size(4); ++t) {
    const SimplexId s{4, static_cast<int>(t)};
    dual += scalar_vertex(m, s, Lattice::dual) * m.volume(s);
  }
  const double action = regge_action(m);
  EXPECT_LT(rel(simplicial, 2.0 * action), 1e-10);
  EXPECT_LT(rel(dual, 2.0 * action), 1e-10);
}

TEST(Curvature, IcosphereScalarApproachesTwo) {
  const MetricComplex m = gen_icosphere(3, 1.0);
  double worst = 0.0;
  for (std::size_t v = 0; v < m.complex().size(0); ++v) {
    worst = std::max(worst, std::abs(scalar_vertex(m, {0, static_cast<int>(v)}, Lattice::simplicial) - 2.0));
  }
  EXPECT_LT(worst, 0.2);
}

TEST(Curvature, BoundaryHingesAreSeparate) {
  const MetricComplex m = gen_flat_grid(2, 2);
  const SimplicialComplex& c = m.complex();
  int corners = 0;
  for (const Hinge& h : c.hinges()) {
    if (!h.boundary) continue;
    EXPECT_THROW(deficit(m, h), BoundaryHinge);
    const double b = boundary_deficit(m, h);
    // Edge midpoints of the square are straight; corners turn by pi/2.
    if (std::abs(b - kPi / 2.0) < 1e-12) {
      ++corners;
    } else {
      EXPECT_NEAR(b, 0.0, 1e-12);
    }
  }
  EXPECT_EQ(corners, 4);
  EXPECT_NEAR(regge_action(m), 0.0, 1e-12);
  EXPECT_NEAR(regge_action(m, std::nullopt, {.include_boundary = true}), 2.0 * kPi, 1e-12);
}

TEST(Curvature, BoundaryElementsAreRejected) {
  const MetricComplex m = gen_flat_grid(3, 1);
  const SimplicialComplex& c = m.complex();
  EXPECT_THROW(scalar_vertex(m, {0, 0}, Lattice::simplicial), BoundaryElement);
  for (std::size_t f = 0; f < c.size(2); ++f) {
    const SimplexId s{2, static_cast<int>(f)};
    if (c.on_boundary(s)) {
      EXPECT_THROW(ricci_dual_edge(m, s, false), BoundaryElement);
      break;
    }
  }
  EXPECT_THROW(ricci_simplicial_edge(m, {1, 0}, false), BoundaryElement);
}

TEST(Curvature, RicciNeedsThreeDimensions) {
  const MetricComplex m = icosahedron();
  EXPECT_THROW(ricci_dual_edge(m, {1, 0}, false), UnsupportedRequest);
  EXPECT_THROW(ricci_simplicial_edge(m, {1, 0}, false), UnsupportedRequest);
}

TEST(Curvature, ReportNormalizationRatios) {
  const MetricComplex m = perturb_lengths(gen_boundary_of_simplex(5), 0.05, 8);
  const CurvatureReport r = compute_curvature_report(m);
  const int d = r.dimension;
  for (const auto& h : r.hinges) EXPECT_NEAR(*h.riemann / *h.riemann_normalized, binomial(d, 2), 1e-12);
  for (const auto& e : r.edges) EXPECT_NEAR(*e.value / *e.value_normalized, d, 1e-12);
  for (const auto& e : r.dual_edges) EXPECT_NEAR(*e.value / *e.value_normalized, d, 1e-12);
  for (const auto& e : r.vertices) EXPECT_EQ(*e.value, *e.value_normalized);
  for (const auto& e : r.dual_vertices) EXPECT_EQ(*e.value, *e.value_normalized);
  EXPECT_EQ(r.orientation_factor, 2.0);
  EXPECT_NEAR(r.action, regge_action(m), 1e-12);
}

}  // namespace
}  // namespace pfcurv
