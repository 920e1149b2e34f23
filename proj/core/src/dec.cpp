// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "pfcurv/dec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pfcurv/errors.hpp"

namespace pfcurv {

namespace {

bool negligible(const MetricComplex& m, double measure, int dim) {
  return std::abs(measure) <= 1e-13 * std::pow(m.length_scale(), dim);
}

void check_shape(const MetricComplex& m, const Cochain& w) {
  const int d = m.dimension();
  if (w.degree < 0 || w.degree > d) {
    throw UnsupportedRequest("cochain degree " + std::to_string(w.degree) + " outside [0, d]");
  }
  if (w.values.size() != element_count(m, w.lattice, w.degree)) {
    throw UnsupportedPair("cochain has " + std::to_string(w.values.size()) + " values but the " +
                          to_string(w.lattice) + " " + std::to_string(w.degree) + "-skeleton has " +
                          std::to_string(element_count(m, w.lattice, w.degree)) + " elements");
  }
}

// Weight of the diagonal inner product: V / |sigma|^2.
double inner_weight(const MetricComplex& m, Lattice lattice, int degree, int i) {
  const int d = m.dimension();
  const SimplexId s = partner(m, lattice, degree, i);
  if (lattice == Lattice::simplicial) {
    return m.dual_volume(s) / (m.volume(s) * binomial(d, s.dim));
  }
  const double dual = m.dual_volume(s);
  if (negligible(m, dual, d - s.dim)) {
    throw ZeroMeasureElement("dual element of a " + std::to_string(s.dim) +
                             "-simplex has zero measure");
  }
  return m.volume(s) / (dual * binomial(d, s.dim));
}

}  // namespace

const char* to_string(Lattice l) { return l == Lattice::simplicial ? "simplicial" : "dual"; }

std::size_t element_count(const MetricComplex& m, Lattice lattice, int degree) {
  const int d = m.dimension();
  if (degree < 0 || degree > d) return 0;
  return m.complex().size(lattice == Lattice::simplicial ? degree : d - degree);
}

SimplexId partner(const MetricComplex& m, Lattice lattice, int degree, int i) {
  return {lattice == Lattice::simplicial ? degree : m.dimension() - degree, i};
}

double element_measure(const MetricComplex& m, Lattice lattice, int degree, int i) {
  const SimplexId s = partner(m, lattice, degree, i);
  return lattice == Lattice::simplicial ? m.volume(s) : m.dual_volume(s);
}

double element_hybrid_volume(const MetricComplex& m, Lattice lattice, int degree, int i) {
  return hybrid_volume(m, partner(m, lattice, degree, i));
}

Cochain zero_cochain(const MetricComplex& m, Lattice lattice, int degree) {
  return {lattice, degree, std::vector<double>(element_count(m, lattice, degree), 0.0)};
}

Cochain from_density(const MetricComplex& m, Lattice lattice, int degree,
                     const std::vector<double>& density) {
  Cochain out = zero_cochain(m, lattice, degree);
  if (density.size() != out.values.size()) throw UnsupportedPair("density has the wrong length");
  for (std::size_t i = 0; i < density.size(); ++i) {
    out.values[i] = density[i] * element_measure(m, lattice, degree, static_cast<int>(i));
  }
  return out;
}

std::vector<double> density(const MetricComplex& m, const Cochain& w) {
  check_shape(m, w);
  std::vector<double> out(w.values.size());
  const int dim = w.degree;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double a = element_measure(m, w.lattice, w.degree, static_cast<int>(i));
    if (negligible(m, a, dim)) throw ZeroMeasureElement("density on a zero-measure element");
    out[i] = w.values[i] / a;
  }
  return out;
}

Cochain hodge(const MetricComplex& m, const Cochain& w) {
  check_shape(m, w);
  const int d = m.dimension();
  const Lattice target = w.lattice == Lattice::simplicial ? Lattice::dual : Lattice::simplicial;
  Cochain out{target, d - w.degree, std::vector<double>(w.values.size())};
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const int ii = static_cast<int>(i);
    const double from = element_measure(m, w.lattice, w.degree, ii);
    const double to = element_measure(m, target, out.degree, ii);
    if (negligible(m, from, w.degree)) {
      throw ZeroMeasureElement("hodge star from a zero-measure " + std::string(to_string(w.lattice)) +
                               " element");
    }
    out.values[i] = w.values[i] * to / from;
  }
  return out;
}

Cochain exterior_derivative(const MetricComplex& m, const Cochain& w) {
  check_shape(m, w);
  const int d = m.dimension();
  if (w.degree >= d) throw UnsupportedRequest("exterior derivative needs degree < d");
  const SimplicialComplex& c = m.complex();
  Cochain out = zero_cochain(m, w.lattice, w.degree + 1);
  if (w.lattice == Lattice::simplicial) {
    for (std::size_t j = 0; j < out.values.size(); ++j) {
      double sum = 0.0;
      for (const Incidence& inc : c.boundary({w.degree + 1, static_cast<int>(j)})) {
        sum += inc.sign * w.values[inc.face];
      }
      out.values[j] = sum;
    }
  } else {
    // Dual k-cochain lives on (d-k)-simplexes; its derivative on their facets.
    const int sdim = d - w.degree;
    for (std::size_t j = 0; j < w.values.size(); ++j) {
      for (const Incidence& inc : c.boundary({sdim, static_cast<int>(j)})) {
        out.values[inc.face] += inc.sign * w.values[j];
      }
    }
  }
  return out;
}

Cochain coderivative(const MetricComplex& m, const Cochain& w) {
  check_shape(m, w);
  if (w.degree <= 0) throw UnsupportedRequest("coderivative needs degree > 0");
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  const int k = w.degree;

  std::vector<double> weighted(w.values.size());
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    weighted[i] = inner_weight(m, w.lattice, k, static_cast<int>(i)) * w.values[i];
  }

  // Transpose of the (k-1) -> k coboundary applied to the weighted values.
  Cochain out = zero_cochain(m, w.lattice, k - 1);
  if (w.lattice == Lattice::simplicial) {
    for (std::size_t j = 0; j < weighted.size(); ++j) {
      for (const Incidence& inc : c.boundary({k, static_cast<int>(j)})) {
        out.values[inc.face] += inc.sign * weighted[j];
      }
    }
  } else {
    const int sdim = d - (k - 1);
    for (std::size_t j = 0; j < out.values.size(); ++j) {
      double sum = 0.0;
      for (const Incidence& inc : c.boundary({sdim, static_cast<int>(j)})) {
        sum += inc.sign * weighted[inc.face];
      }
      out.values[j] = sum;
    }
  }

  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double wt = inner_weight(m, w.lattice, k - 1, static_cast<int>(i));
    const SimplexId s = partner(m, w.lattice, k - 1, static_cast<int>(i));
    const double v = hybrid_volume(m, s);
    if (negligible(m, v, d)) {
      throw ZeroMeasureElement("coderivative target element has zero hybrid volume");
    }
    out.values[i] /= wt;
  }
  return out;
}

Cochain laplace_de_rham(const MetricComplex& m, const Cochain& w) {
  const int d = m.dimension();
  Cochain out = zero_cochain(m, w.lattice, w.degree);
  if (w.degree < d) {
    const Cochain a = coderivative(m, exterior_derivative(m, w));
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += a.values[i];
  }
  if (w.degree > 0) {
    const Cochain b = exterior_derivative(m, coderivative(m, w));
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  }
  return out;
}

double l2_measure(const MetricComplex& m, const Cochain& w, int element) {
  check_shape(m, w);
  if (element < 0 || static_cast<std::size_t>(element) >= w.values.size()) {
    throw UnsupportedRequest("element index out of range");
  }
  // density * V, with V = |sigma| |*sigma| / C(d,k) folded in.
  const SimplexId s = partner(m, w.lattice, w.degree, element);
  const int d = m.dimension();
  const double other = w.lattice == Lattice::simplicial ? m.dual_volume(s) : m.volume(s);
  return w.values[element] * other / binomial(d, s.dim);
}

double l2_inner_product(const MetricComplex& m, const Cochain& a, const Cochain& b) {
  check_shape(m, a);
  check_shape(m, b);
  if (a.lattice != b.lattice || a.degree != b.degree) {
    throw UnsupportedPair("inner product of cochains on different skeletons");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] == 0.0 || b.values[i] == 0.0) continue;
    sum += a.values[i] * b.values[i] * inner_weight(m, a.lattice, a.degree, static_cast<int>(i));
  }
  return sum;
}

Cochain transfer_density(const MetricComplex& m, const Cochain& w, Lattice target) {
  check_shape(m, w);
  const int d = m.dimension();
  if (w.degree != 1 || target == w.lattice) {
    throw UnsupportedPair("transfer_density supports dual 1-cochains <-> simplicial 1-cochains only");
  }
  const SimplicialComplex& c = m.complex();
  const std::vector<double> src = density(m, w);
  Cochain out = zero_cochain(m, target, 1);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const int ii = static_cast<int>(i);
    const SimplexId e = partner(m, target, 1, ii);
    const double ve = hybrid_volume(m, e);
    if (negligible(m, ve, d)) throw ZeroMeasureElement("transfer target has zero hybrid volume");
    // Overlapping source elements: dual edges *f with f > edge, or edges of f.
    const std::vector<SimplexId> overlap =
        target == Lattice::simplicial ? c.cofaces(e, d - 1) : c.faces(e, 1);
    double sum = 0.0;
    for (const SimplexId& s : overlap) {
      sum += src[s.index] * shared_hybrid_volume(m, s, e);
    }
    out.values[i] = sum / ve * element_measure(m, target, 1, ii);
  }
  return out;
}

DoubleDualPaths double_dual_paths(const MetricComplex& m, SimplexId s, SimplexId t, double value) {
  return double_dual_paths(m, std::vector<SimplexId>{s, t}, value);
}

DoubleDualPaths double_dual_paths(const MetricComplex& m, const std::vector<SimplexId>& chain,
                                  double value) {
  if (chain.size() < 2) throw NotIncident("double-dual paths need at least one leg");
  const int d = m.dimension();
  const double dens = value / m.volume(chain.front());
  DoubleDualPaths out;

  // Right-down: wedging with each leg carries the density up to the last
  // simplex, then the hodge star moves it to its dual.
  out.wedge_then_hodge = dens * m.dual_volume(chain.back());

  // Down-right: start on *s_0. Each step keeps the cone of *s_i over
  // *s_{i+1} (height = leg) and contracts along the leg.
  double factor = 1.0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const SimplexId a = chain[i];
    const SimplexId b = chain[i + 1];
    const double leg = m.elevation(a, b);
    if (negligible(m, leg, 1)) throw ZeroMeasureElement("moment-arm leg has zero length");
    const double cone = factor * dens * leg * m.dual_volume(b) / (d - a.dim);
    out.hodge_then_contract = cone / leg;
    factor /= (d - a.dim);
  }
  return out;
}

}  // namespace pfcurv
