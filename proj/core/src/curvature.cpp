// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "pfcurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pfcurv/errors.hpp"
#include "pfcurv/parallel.hpp"

namespace pfcurv {

namespace {

bool negligible(const MetricComplex& m, double measure, int dim) {
  return std::abs(measure) <= 1e-13 * std::pow(m.length_scale(), dim);
}

double angle_sum(const MetricComplex& m, const Hinge& h) {
  double sum = 0.0;
  for (int t : h.star) sum += dihedral_angle(m, h, t);
  return sum;
}

void require_ricci_dimension(const MetricComplex& m) {
  if (m.dimension() < 3) {
    throw UnsupportedRequest("Ricci curvature needs d >= 3; in 2D it is the scalar curvature over 2");
  }
}

// Deficit of a hinge as it enters sums, or nullopt when it is skipped.
std::optional<double> counted_deficit(const MetricComplex& m, const Hinge& h,
                                      const CurvatureOptions& options) {
  if (!h.boundary) return deficit(m, h);
  if (options.include_boundary) return boundary_deficit(m, h);
  return std::nullopt;
}

// Sectional curvature with the 0/0 case on flat zero-area hinges resolved.
double sectional_from(const MetricComplex& m, SimplexId hinge, double eps) {
  const double area = m.dual_volume(hinge);
  if (negligible(m, area, 2)) {
    if (std::abs(eps) <= kFlatDeficit) return 0.0;
    throw ZeroMeasureElement("curved hinge with zero dual area");
  }
  return eps / area;
}

// numerator / denominator, where both vanish together on flat regions.
double weighted_ratio(const MetricComplex& m, double num, double den, int dim, bool flat) {
  if (negligible(m, den, dim)) {
    if (flat) return 0.0;
    throw ZeroMeasureElement("curvature average over a zero-measure region");
  }
  return num / den;
}

}  // namespace

double deficit(const MetricComplex& m, const Hinge& h) {
  if (h.boundary) throw BoundaryHinge("hinge lies on the boundary; use boundary_deficit");
  return 2.0 * std::numbers::pi - angle_sum(m, h);
}

double boundary_deficit(const MetricComplex& m, const Hinge& h) {
  if (!h.boundary) throw UnsupportedRequest("boundary_deficit on an interior hinge");
  return std::numbers::pi - angle_sum(m, h);
}

double sectional(const MetricComplex& m, const Hinge& h) {
  return sectional_from(m, h.id, deficit(m, h));
}

RiemannEigen riemann_hinge(const MetricComplex& m, const Hinge& h, bool normalized) {
  const double k = sectional(m, h);
  return {normalized ? k : binomial(m.dimension(), 2) * k, h.id};
}

double ricci_dual_edge(const MetricComplex& m, SimplexId face, bool normalized,
                       const CurvatureOptions& options) {
  require_ricci_dimension(m);
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  if (face.dim != d - 1) throw UnsupportedRequest("dual edges are indexed by (d-1)-simplexes");
  if (c.on_boundary(face)) throw BoundaryElement("dual edge of a boundary face is truncated");

  double num = 0.0;
  bool flat = true;
  for (const SimplexId& hid : c.faces(face, d - 2)) {
    const Hinge h = c.hinge(hid.index);
    const auto eps = counted_deficit(m, h, options);
    if (!eps) continue;
    flat = flat && std::abs(*eps) <= kFlatDeficit;
    if (std::abs(*eps) <= kFlatDeficit && negligible(m, m.dual_volume(hid), 2)) continue;
    num += sectional_from(m, hid, *eps) * shared_hybrid_volume(m, hid, face);
  }
  const double full = d * (d - 1) * weighted_ratio(m, num, hybrid_volume(m, face), d, flat);
  return normalized ? full / d : full;
}

double ricci_simplicial_edge(const MetricComplex& m, SimplexId edge, bool normalized,
                             const CurvatureOptions& options) {
  require_ricci_dimension(m);
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  if (edge.dim != 1) throw UnsupportedRequest("simplicial edges are 1-simplexes");
  if (c.on_boundary(edge)) throw BoundaryElement("edge lies on the boundary");

  double eps_weighted = 0.0;
  double area_weighted = 0.0;
  bool flat = true;
  for (const SimplexId& hid : c.cofaces(edge, d - 2)) {
    const Hinge h = c.hinge(hid.index);
    const auto eps = counted_deficit(m, h, options);
    if (!eps) continue;
    flat = flat && std::abs(*eps) <= kFlatDeficit;
    const double a = restricted_hinge_area(m, h, edge);
    eps_weighted += *eps * a;
    area_weighted += m.dual_volume(hid) * a;
  }
  const double full = d * (d - 1) * weighted_ratio(m, eps_weighted, area_weighted, d, flat);
  return normalized ? full / d : full;
}

double ricci_edge_via_dual(const MetricComplex& m, SimplexId edge, bool normalized,
                           const CurvatureOptions& options) {
  require_ricci_dimension(m);
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  if (edge.dim != 1) throw UnsupportedRequest("simplicial edges are 1-simplexes");
  if (c.on_boundary(edge)) throw BoundaryElement("edge lies on the boundary");

  double num = 0.0;
  bool flat = true;
  for (const SimplexId& hid : c.cofaces(edge, d - 2)) {
    const Hinge h = c.hinge(hid.index);
    const auto eps = counted_deficit(m, h, options);
    if (!eps) continue;
    flat = flat && std::abs(*eps) <= kFlatDeficit;
    if (std::abs(*eps) <= kFlatDeficit && negligible(m, m.dual_volume(hid), 2)) continue;
    const double k = sectional_from(m, hid, *eps);
    for (const SimplexId& f : c.cofaces(hid, d - 1)) {
      const SimplexId chain[3] = {edge, hid, f};
      num += k * shared_hybrid_volume(m, chain);
    }
  }
  const double full = d * (d - 1) * weighted_ratio(m, num, hybrid_volume(m, edge), d, flat);
  return normalized ? full / d : full;
}

double scalar_vertex(const MetricComplex& m, SimplexId element, Lattice lattice,
                     const CurvatureOptions& options) {
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  if (d < 2) throw UnsupportedRequest("curvature needs d >= 2");
  const double scale = d * (d - 1);

  if (lattice == Lattice::simplicial) {
    if (element.dim != 0) throw UnsupportedRequest("simplicial scalar curvature lives on vertices");
    if (c.on_boundary(element)) throw BoundaryElement("vertex lies on the boundary");
    double eps_weighted = 0.0;
    double area_weighted = 0.0;
    bool flat = true;
    for (const SimplexId& hid : c.cofaces(element, d - 2)) {
      const Hinge h = c.hinge(hid.index);
      const auto eps = counted_deficit(m, h, options);
      if (!eps) continue;
      flat = flat && std::abs(*eps) <= kFlatDeficit;
      const double a = m.local_dual_volume(element, hid) / binomial(d - 2, 0);
      eps_weighted += *eps * a;
      area_weighted += m.dual_volume(hid) * a;
    }
    return scale * weighted_ratio(m, eps_weighted, area_weighted, d, flat);
  }

  if (element.dim != d) throw UnsupportedRequest("dual vertices are indexed by top cells");
  double sum = 0.0;
  for (const SimplexId& hid : c.faces(element, d - 2)) {
    const Hinge h = c.hinge(hid.index);
    const auto eps = counted_deficit(m, h, options);
    if (!eps) continue;
    if (std::abs(*eps) <= kFlatDeficit && negligible(m, m.dual_volume(hid), 2)) continue;
    sum += sectional_from(m, hid, *eps) * shared_hybrid_volume(m, hid, element);
  }
  const double v = m.volume(element);
  if (negligible(m, v, d)) throw ZeroMeasureElement("top cell has zero volume");
  return scale * sum / v;
}

double regge_action(const MetricComplex& m, std::optional<double> prefactor,
                    const CurvatureOptions& options) {
  const std::vector<Hinge> hinges = m.complex().hinges();
  std::vector<double> terms(hinges.size(), 0.0);
  parallel_for(hinges.size(), [&](std::size_t i) {
    const auto eps = counted_deficit(m, hinges[i], options);
    if (eps) terms[i] = *eps * m.volume(hinges[i].id);
  });
  double s = 0.0;
  for (double t : terms) s += t;
  return prefactor.value_or(1.0) * s;
}

CurvatureReport compute_curvature_report(const MetricComplex& m, const CurvatureOptions& options) {
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  CurvatureReport r;
  r.dimension = d;
  if (d < 2) throw UnsupportedRequest("curvature needs d >= 2");

  const std::vector<Hinge> hinges = c.hinges();
  r.hinges.resize(hinges.size());
  parallel_for(hinges.size(), [&](std::size_t i) {
    const Hinge& h = hinges[i];
    HingeRecord& rec = r.hinges[i];
    rec.id = h.id;
    rec.boundary = h.boundary;
    rec.volume = m.volume(h.id);
    rec.dual_volume = m.dual_volume(h.id);
    rec.hybrid_volume = hybrid_volume(m, h.id);
    const auto eps = counted_deficit(m, h, options);
    if (!eps) return;
    rec.deficit = eps;
    if (h.boundary) return;
    try {
      const double k = sectional_from(m, h.id, *eps);
      rec.sectional = k;
      rec.riemann = binomial(d, 2) * k;
      rec.riemann_normalized = k;
    } catch (const ZeroMeasureElement&) {
    }
  });

  auto fill = [&](std::vector<ElementRecord>& out, int dim, auto&& value, double divisor,
                  bool dual_element) {
    out.resize(c.size(dim));
    parallel_for(out.size(), [&](std::size_t i) {
      const SimplexId s{dim, static_cast<int>(i)};
      ElementRecord& rec = out[i];
      rec.id = s;
      rec.boundary = c.on_boundary(s);
      rec.volume = dual_element ? m.dual_volume(s) : m.volume(s);
      rec.dual_volume = dual_element ? m.volume(s) : m.dual_volume(s);
      rec.hybrid_volume = hybrid_volume(m, s);
      try {
        const double v = value(s);
        rec.value = v;
        rec.value_normalized = v / divisor;
      } catch (const BoundaryElement&) {
      } catch (const ZeroMeasureElement&) {
      }
    });
  };

  if (d >= 3) {
    fill(r.dual_edges, d - 1, [&](SimplexId s) { return ricci_dual_edge(m, s, false, options); },
         d, true);
    fill(r.edges, 1, [&](SimplexId s) { return ricci_simplicial_edge(m, s, false, options); }, d,
         false);
  }
  // Scalars carry no normalization factor.
  fill(r.vertices, 0,
       [&](SimplexId s) { return scalar_vertex(m, s, Lattice::simplicial, options); }, 1.0, false);
  fill(r.dual_vertices, d, [&](SimplexId s) { return scalar_vertex(m, s, Lattice::dual, options); },
       1.0, true);

  r.action = regge_action(m, std::nullopt, options);
  return r;
}

}  // namespace pfcurv
