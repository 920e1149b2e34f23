// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pfcurv/dec.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/meshgen.hpp"

namespace pfcurv {
namespace {

Cochain random_cochain(const MetricComplex& m, Lattice l, int k, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Cochain w = zero_cochain(m, l, k);
  for (double& x : w.values) x = u(gen);
  return w;
}

std::vector<MetricComplex> meshes() {
  std::vector<MetricComplex> out;
  out.push_back(gen_icosphere(2, 1.0));
  out.push_back(gen_boundary_of_simplex(4));
  out.push_back(perturb_lengths(gen_flat_grid(3, 2), 0.05, 7));
  out.push_back(gen_boundary_of_simplex(5));
  return out;
}

TEST(Dec, ExteriorDerivativeSquaresToZero) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> u(-9, 9);
  for (const MetricComplex& m : meshes()) {
    for (Lattice l : {Lattice::simplicial, Lattice::dual}) {
      for (int k = 0; k + 2 <= m.dimension(); ++k) {
        Cochain w = zero_cochain(m, l, k);
        for (double& x : w.values) x = u(gen);
        for (double x : exterior_derivative(m, exterior_derivative(m, w)).values) EXPECT_EQ(x, 0.0);
      }
    }
  }
}

TEST(Dec, CoboundaryOfVertexFunctionIsDifference) {
  const MetricComplex m = gen_flat_grid(2, 1);
  Cochain f = zero_cochain(m, Lattice::simplicial, 0);
  for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = 10.0 * i;
  const Cochain df = exterior_derivative(m, f);
  for (std::size_t e = 0; e < df.values.size(); ++e) {
    const auto v = m.complex().vertices({1, static_cast<int>(e)});
    const double a = f.values[m.complex().vertex_index(v[0])];
    const double b = f.values[m.complex().vertex_index(v[1])];
    EXPECT_EQ(df.values[e], b - a);
  }
}

TEST(Dec, CoderivativeIsAdjoint) {
  std::mt19937_64 gen(2);
  for (const MetricComplex& m : meshes()) {
    for (Lattice l : {Lattice::simplicial, Lattice::dual}) {
      for (int k = 0; k < m.dimension(); ++k) {
        for (int trial = 0; trial < 5; ++trial) {
          const Cochain a = random_cochain(m, l, k, gen);
          const Cochain b = random_cochain(m, l, k + 1, gen);
          const double lhs = l2_inner_product(m, exterior_derivative(m, a), b);
          const double rhs = l2_inner_product(m, a, coderivative(m, b));
          EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(lhs)));
        }
      }
    }
  }
}

TEST(Dec, HodgeRoundTripIsIdentity) {
  std::mt19937_64 gen(3);
  for (const MetricComplex& m : meshes()) {
    for (Lattice l : {Lattice::simplicial, Lattice::dual}) {
      for (int k = 0; k <= m.dimension(); ++k) {
        const Cochain w = random_cochain(m, l, k, gen);
        const Cochain star = hodge(m, w);
        EXPECT_NE(star.lattice, w.lattice);
        EXPECT_EQ(star.degree, m.dimension() - k);
        const Cochain back = hodge(m, star);
        for (std::size_t i = 0; i < w.values.size(); ++i) {
          EXPECT_NEAR(back.values[i], w.values[i], 1e-13 * std::abs(w.values[i]));
        }
      }
    }
  }
}

TEST(Dec, HodgePreservesDensity) {
  const MetricComplex m = gen_icosphere(1, 1.0);
  std::vector<double> dens(m.complex().size(1));
  for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = 0.1 * i - 1.0;
  const Cochain w = from_density(m, Lattice::simplicial, 1, dens);
  const std::vector<double> out = density(m, hodge(m, w));
  for (std::size_t i = 0; i < dens.size(); ++i) EXPECT_NEAR(out[i], dens[i], 1e-13);
}

TEST(Dec, L2MeasureIsDensityTimesHybridVolume) {
  const MetricComplex m = gen_boundary_of_simplex(4);
  std::vector<double> dens(m.complex().size(1), 2.5);
  const Cochain w = from_density(m, Lattice::simplicial, 1, dens);
  for (std::size_t i = 0; i < dens.size(); ++i) {
    EXPECT_NEAR(l2_measure(m, w, static_cast<int>(i)),
                2.5 * element_hybrid_volume(m, Lattice::simplicial, 1, static_cast<int>(i)), 1e-14);
  }
}

TEST(Dec, TransferOfUniformDensityIsUniform) {
  const MetricComplex m = perturb_lengths(gen_boundary_of_simplex(5), 0.05, 9);
  const std::vector<double> ones(m.complex().size(3), 1.0);
  const Cochain w = from_density(m, Lattice::dual, 1, ones);
  const std::vector<double> out = density(m, transfer_density(m, w, Lattice::simplicial));
  for (double x : out) EXPECT_NEAR(x, 1.0, 1e-12);
}

TEST(Dec, TransferPreservesTotalMeasure) {
  std::mt19937_64 gen(4);
  const MetricComplex m = perturb_lengths(gen_boundary_of_simplex(5), 0.05, 9);
  const Cochain w = random_cochain(m, Lattice::dual, 1, gen);
  const Cochain t = transfer_density(m, w, Lattice::simplicial);
  double before = 0.0;
  double after = 0.0;
  for (std::size_t i = 0; i < w.values.size(); ++i) before += l2_measure(m, w, static_cast<int>(i));
  for (std::size_t i = 0; i < t.values.size(); ++i) after += l2_measure(m, t, static_cast<int>(i));
  EXPECT_NEAR(before, after, 1e-12 * std::abs(before));
}

TEST(Dec, TransferRejectsOtherDegrees) {
  const MetricComplex m = gen_boundary_of_simplex(4);
  EXPECT_THROW(transfer_density(m, zero_cochain(m, Lattice::simplicial, 2), Lattice::dual), UnsupportedPair);
  EXPECT_THROW(transfer_density(m, zero_cochain(m, Lattice::simplicial, 1), Lattice::simplicial),
               UnsupportedPair);
}

TEST(Dec, WrongLengthCochainIsRejected) {
  const MetricComplex m = gen_boundary_of_simplex(4);
  Cochain w = zero_cochain(m, Lattice::simplicial, 1);
  w.values.pop_back();
  EXPECT_THROW(hodge(m, w), UnsupportedPair);
  w = zero_cochain(m, Lattice::simplicial, 1);
  EXPECT_THROW(l2_inner_product(m, w, zero_cochain(m, Lattice::dual, 1)), UnsupportedPair);
}

TEST(Dec, ZeroDualMeasureIsReported) {
  // Diagonals of the right-triangle grid have zero-length duals.
  const MetricComplex m = gen_flat_grid(2, 2);
  const Cochain w = zero_cochain(m, Lattice::dual, 1);
  EXPECT_THROW(hodge(m, w), ZeroMeasureElement);
}

// Commutative square: both paths land on *t and differ by d - k per leg.
TEST(Dec, DoubleDualPathsDifferByCodimension) {
  const MetricComplex m = perturb_lengths(gen_boundary_of_simplex(5), 0.05, 1);
  const SimplicialComplex& c = m.complex();
  const int d = 4;
  for (int k = 0; k < d; ++k) {
    const SimplexId s{k, 0};
    const SimplexId t{k + 1, c.cofacets(s)[0]};
    const DoubleDualPaths p = double_dual_paths(m, s, t, 3.0);
    EXPECT_NEAR(p.wedge_then_hodge, 3.0 / m.volume(s) * m.dual_volume(t), 1e-14);
    EXPECT_NEAR(p.wedge_then_hodge / p.hodge_then_contract, d - k, 1e-12);
  }
  // Vertex -> edge -> triangle: constant (d)(d-1).
  const SimplexId v{0, 0};
  const SimplexId e{1, c.cofacets(v)[0]};
  const SimplexId f{2, c.cofacets(e)[0]};
  const DoubleDualPaths p = double_dual_paths(m, std::vector<SimplexId>{v, e, f}, 1.0);
  EXPECT_NEAR(p.wedge_then_hodge / p.hodge_then_contract, d * (d - 1), 1e-12);
}

}  // namespace
}  // namespace pfcurv
