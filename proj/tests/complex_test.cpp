// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "pfcurv/complex.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/meshgen.hpp"

namespace pfcurv {
namespace {

SimplicialComplex tetra_boundary() { return build_complex(2, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

TEST(Complex, CountsOfTetrahedronBoundary) {
  const SimplicialComplex c = tetra_boundary();
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(c.size(0), 4u);
  EXPECT_EQ(c.size(1), 6u);
  EXPECT_EQ(c.size(2), 4u);
  EXPECT_EQ(c.euler_characteristic(), 2);
  EXPECT_EQ(c.boundary_size(1), 0u);
  EXPECT_TRUE(c.orientable());
}

TEST(Complex, SingleTriangleHasBoundaryEverywhere) {
  const SimplicialComplex c = build_complex(2, {{0, 1, 2}});
  EXPECT_EQ(c.boundary_size(0), 3u);
  EXPECT_EQ(c.boundary_size(1), 3u);
  EXPECT_EQ(c.euler_characteristic(), 1);
}

TEST(Complex, FindIgnoresLabelOrder) {
  const SimplicialComplex c = tetra_boundary();
  const int a[] = {3, 1};
  const int b[] = {1, 3};
  EXPECT_EQ(c.find(a), c.find(b));
  const int missing[] = {0, 9};
  EXPECT_EQ(c.find(missing).index, -1);
  const auto v = c.vertices(c.find(a));
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
}

TEST(Complex, BoundarySignsAlternate) {
  const SimplicialComplex c = build_complex(3, {{0, 1, 2, 3}});
  const auto bd = c.boundary({3, 0});
  ASSERT_EQ(bd.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(bd[i].sign, i % 2 == 0 ? 1 : -1);
}

TEST(Complex, BoundaryOfBoundaryVanishes) {
  for (const MeshData& mesh : {flat_grid_mesh(3, 2), boundary_of_simplex_mesh(5), icosphere_mesh(1, 1.0)}) {
    const SimplicialComplex c = build_complex(mesh.dimension, mesh.cells);
    for (int k = 2; k <= c.dimension(); ++k) {
      const Eigen::SparseMatrix<int> dd = c.boundary_matrix(k - 1) * c.boundary_matrix(k);
      EXPECT_EQ(dd.norm(), 0.0) << "k=" << k;
    }
  }
}

TEST(Complex, FacesAndCofaces) {
  const SimplicialComplex c = tetra_boundary();
  const int v0[] = {0};
  const SimplexId v = c.find(v0);
  EXPECT_EQ(c.cofaces(v, 1).size(), 3u);
  EXPECT_EQ(c.cofaces(v, 2).size(), 3u);
  EXPECT_EQ(c.faces({2, 0}, 1).size(), 3u);
  EXPECT_TRUE(c.is_face(v, c.cofaces(v, 2).front()));
}

TEST(Complex, DuplicateCellIsRejected) {
  EXPECT_THROW(build_complex(2, {{0, 1, 2}, {2, 1, 0}}), DuplicateCell);
}

TEST(Complex, ThreeTrianglesOnAnEdgeAreNonManifold) {
  EXPECT_THROW(build_complex(2, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), NonManifold);
}

TEST(Complex, MalformedCellsAreInvalid) {
  EXPECT_THROW(build_complex(2, {{0, 1}}), InvalidMesh);
  EXPECT_THROW(build_complex(2, {{0, 1, 1}}), InvalidMesh);
  EXPECT_THROW(build_complex(2, {{0, -1, 2}}), InvalidMesh);
}

TEST(Complex, OrientationCheckIsOptIn) {
  const std::vector<std::vector<int>> bad = {{0, 1, 2}, {0, 1, 3}};
  EXPECT_NO_THROW(build_complex(2, bad));
  EXPECT_THROW(build_complex(2, bad, {.check_orientation = true}), InconsistentOrientation);
  EXPECT_NO_THROW(build_complex(2, {{0, 1, 2}, {1, 0, 3}}, {.check_orientation = true}));
}

TEST(Complex, MobiusStripIsNotOrientable) {
  const SimplicialComplex c = build_complex(2, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
  EXPECT_FALSE(c.orientable());
}

TEST(Complex, InteriorHingeStarIsACycle) {
  const SimplicialComplex c = build_complex(3, flat_grid_mesh(3, 2).cells);
  int interior = 0;
  for (const Hinge& h : c.hinges()) {
    const auto n = h.star.size();
    ASSERT_GE(n, 1u);
    auto shared = [&](int a, int b) {
      int common = 0;
      const auto va = c.vertices({3, a});
      const auto vb = c.vertices({3, b});
      for (int x : va) common += std::count(vb.begin(), vb.end(), x);
      return common == 3;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_TRUE(shared(h.star[i], h.star[i + 1]));
    if (!h.boundary) {
      ++interior;
      EXPECT_TRUE(shared(h.star.back(), h.star.front()));
    }
  }
  EXPECT_GT(interior, 0);
}

TEST(Complex, EulerCharacteristicOfGeneratedSpheres) {
  EXPECT_EQ(build_complex(2, icosphere_mesh(2, 1.0).cells).euler_characteristic(), 2);
  EXPECT_EQ(build_complex(3, boundary_of_simplex_mesh(4).cells).euler_characteristic(), 0);
  EXPECT_EQ(build_complex(4, boundary_of_simplex_mesh(5).cells).euler_characteristic(), 2);
}

TEST(Complex, Binomials) {
  EXPECT_EQ(binomial(4, 2), 6.0);
  EXPECT_EQ(binomial(5, 0), 1.0);
  EXPECT_EQ(binomial(3, 4), 0.0);
  EXPECT_EQ(factorial(5), 120.0);
}

}  // namespace
}  // namespace pfcurv
