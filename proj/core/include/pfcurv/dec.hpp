// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "pfcurv/geometry.hpp"

namespace pfcurv {

enum class Lattice { simplicial, dual };

const char* to_string(Lattice l);

/// Discrete k-form: integrated valuations on the k-elements of one lattice.
/// Dual k-elements are indexed by their simplicial (d-k)-partners.
struct Cochain {
  Lattice lattice = Lattice::simplicial;
  int degree = 0;
  std::vector<double> values;
};

/// Number of k-elements of `lattice`.
std::size_t element_count(const MetricComplex& m, Lattice lattice, int degree);

/// Simplicial partner of element i: itself on the simplicial lattice, the
/// (d-k)-simplex it is dual to otherwise.
SimplexId partner(const MetricComplex& m, Lattice lattice, int degree, int i);

/// |sigma| of a lattice element (|*s| for dual elements).
double element_measure(const MetricComplex& m, Lattice lattice, int degree, int i);

/// Hybrid volume V of an element; shared by an element and its dual.
double element_hybrid_volume(const MetricComplex& m, Lattice lattice, int degree, int i);

Cochain zero_cochain(const MetricComplex& m, Lattice lattice, int degree);

/// Valuations from per-element densities (value = density * |sigma|).
Cochain from_density(const MetricComplex& m, Lattice lattice, int degree,
                     const std::vector<double>& density);
std::vector<double> density(const MetricComplex& m, const Cochain& w);

/// Density-preserving map between simplicial k-cochains and dual
/// (d-k)-cochains, in either direction.
Cochain hodge(const MetricComplex& m, const Cochain& w);

/// Coboundary through the signed incidence tables. On the dual lattice the
/// simplicial incidence is used transposed.
Cochain exterior_derivative(const MetricComplex& m, const Cochain& w);

/// Adjoint of exterior_derivative under l2_inner_product:
/// <d a, b> = <a, delta b>.
Cochain coderivative(const MetricComplex& m, const Cochain& w);

/// d delta + delta d, for testing compositions.
Cochain laplace_de_rham(const MetricComplex& m, const Cochain& w);

/// density(sigma) * V_sigma.
double l2_measure(const MetricComplex& m, const Cochain& w, int element);

/// sum over elements of density_a * density_b * V.
double l2_inner_product(const MetricComplex& m, const Cochain& a, const Cochain& b);

/// Volume-weighted double-dual trace between the dual and simplicial
/// 1-skeletons (either direction). The target density on element e is
///   sum_{s overlapping e} density(s) V_{s,e} / V_e,
/// so the total L2 measure is preserved. Only 1-cochains are supported.
Cochain transfer_density(const MetricComplex& m, const Cochain& w, Lattice target);

/// The two routes of the wedge/contract commutative square for a simplicial
/// k-form value on `s` and a leg s -> t (t a cofacet of s). Both end on the
/// dual element *t.
struct DoubleDualPaths {
  double wedge_then_hodge = 0.0;     // s -> t by wedge, then *t
  double hodge_then_contract = 0.0;  // *s, then contraction along the leg
};
DoubleDualPaths double_dual_paths(const MetricComplex& m, SimplexId s, SimplexId t, double value);

/// The same squares composed along a chain s_0 < s_1 < ... of cofacets,
/// ending on the dual of the last element.
DoubleDualPaths double_dual_paths(const MetricComplex& m, const std::vector<SimplexId>& chain,
                                  double value);

}  // namespace pfcurv
