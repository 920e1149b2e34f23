// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "pfcurv/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pfcurv/curvature.hpp"
#include "pfcurv/dec.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/meshgen.hpp"

namespace pfcurv {

namespace {

constexpr std::uint64_t kCheckSeed = 0x5eedULL;

double rel(double a, double b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

CheckResult result(std::string name, double residual, double tolerance, std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.note = std::move(note);
  return r;
}

CheckResult skipped(std::string name, double tolerance, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  r.skipped = true;
  r.note = std::move(note);
  return r;
}

bool closed(const MetricComplex& m) { return m.complex().boundary_size(m.dimension() - 1) == 0; }

void volume_checks(const MetricComplex& m, std::vector<CheckResult>& out) {
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  const double total = m.total_volume();

  for (int k = 0; k <= d; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(k); ++i) sum += hybrid_volume(m, {k, static_cast<int>(i)});
    out.push_back(result("hybrid volumes partition the mesh (k=" + std::to_string(k) + ")",
                         std::abs(sum - total) / total, 1e-9));
  }

  std::vector<std::vector<double>> flags(d + 1);
  for (int k = 0; k <= d; ++k) flags[k].assign(c.size(k), 0.0);
  for_each_flag(m, [&](const Flag& f) {
    const double v = irreducible_cell_volume(m, f);
    for (const SimplexId& s : f) flags[s.dim][s.index] += v;
  });
  const double cell_scale = total / static_cast<double>(c.size(d));
  double worst = 0.0;
  for (int k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i < c.size(k); ++i) {
      worst = std::max(worst, rel(hybrid_volume(m, {k, static_cast<int>(i)}), flags[k][i], cell_scale));
    }
  }
  out.push_back(result("hybrid volume equals the signed flag sum", worst, 1e-10));

  worst = 0.0;
  for (int k = 1; k <= d; ++k) {
    for (std::size_t i = 0; i < c.size(k); ++i) {
      const SimplexId s{k, static_cast<int>(i)};
      const Eigen::MatrixXd g = m.gram(s);
      const auto b = m.circumcenter(s);
      Eigen::VectorXd alpha(k);
      for (int j = 0; j < k; ++j) alpha(j) = b[j + 1];
      const Eigen::VectorXd ga = g * alpha;
      const double r2 = m.circumradius_sq(s);
      worst = std::max(worst, std::abs(alpha.dot(ga) - r2) / r2);
      for (int j = 0; j < k; ++j) {
        const double dist = alpha.dot(ga) - 2.0 * ga(j) + g(j, j);
        worst = std::max(worst, std::abs(dist - r2) / r2);
      }
    }
  }
  out.push_back(result("circumcenters are equidistant from their vertices", worst, 1e-10));

  if (d >= 3) {
    worst = 0.0;
    for (std::size_t i = 0; i < c.size(1); ++i) {
      const SimplexId e{1, static_cast<int>(i)};
      double sum = 0.0;
      for (const SimplexId& h : c.cofaces(e, d - 2)) {
        sum += restricted_hinge_area(m, c.hinge(h.index), e) * m.dual_volume(h) / binomial(d, 2);
      }
      worst = std::max(worst, rel(sum, hybrid_volume(m, e), cell_scale));
    }
    out.push_back(result("edge hybrid volumes split over their hinges", worst, 1e-10));
  }
}

Cochain random_cochain(const MetricComplex& m, Lattice lattice, int degree, std::uint64_t stream,
                       bool integer) {
  const SplitMix64 rng(kCheckSeed ^ (stream * 0x100000001B3ULL));
  Cochain w = zero_cochain(m, lattice, degree);
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const double u = rng.uniform_at(i);
    w.values[i] = integer ? std::floor(11.0 * u) - 5.0 : 2.0 * u - 1.0;
  }
  return w;
}

void dec_checks(const MetricComplex& m, std::vector<CheckResult>& out) {
  const int d = m.dimension();
  std::uint64_t stream = 1;
  for (Lattice lattice : {Lattice::simplicial, Lattice::dual}) {
    const std::string tag = to_string(lattice);

    double dd = 0.0;
    for (int k = 0; k + 2 <= d; ++k) {
      const Cochain w = random_cochain(m, lattice, k, stream++, true);
      const Cochain z = exterior_derivative(m, exterior_derivative(m, w));
      for (double x : z.values) dd = std::max(dd, std::abs(x));
    }
    out.push_back(result("d d = 0 on integer " + tag + " cochains", dd, 0.0));

    try {
      double worst = 0.0;
      for (int k = 0; k < d; ++k) {
        const Cochain a = random_cochain(m, lattice, k, stream++, false);
        const Cochain b = random_cochain(m, lattice, k + 1, stream++, false);
        const double lhs = l2_inner_product(m, exterior_derivative(m, a), b);
        const double rhs = l2_inner_product(m, a, coderivative(m, b));
        worst = std::max(worst, rel(lhs, rhs, 1e-300));
      }
      out.push_back(result("<d a, b> = <a, delta b> on " + tag + " cochains", worst, 1e-10));
    } catch (const ZeroMeasureElement& e) {
      out.push_back(skipped("<d a, b> = <a, delta b> on " + tag + " cochains", 1e-10, e.what()));
    }

    try {
      double worst = 0.0;
      for (int k = 0; k <= d; ++k) {
        const Cochain w = random_cochain(m, lattice, k, stream++, false);
        const Cochain back = hodge(m, hodge(m, w));
        for (std::size_t i = 0; i < w.values.size(); ++i) {
          worst = std::max(worst, rel(back.values[i], w.values[i], 1e-300));
        }
      }
      out.push_back(result("hodge round trip from " + tag + " cochains", worst, 1e-13));
    } catch (const ZeroMeasureElement& e) {
      out.push_back(skipped("hodge round trip from " + tag + " cochains", 1e-13, e.what()));
    }
  }
}

void curvature_checks(const MetricComplex& m, std::vector<CheckResult>& out) {
  const SimplicialComplex& c = m.complex();
  const int d = m.dimension();
  if (d < 2) return;
  const bool is_closed = closed(m);
  const std::vector<Hinge> hinges = c.hinges();

  if (d == 2) {
    if (is_closed) {
      double sum = 0.0;
      for (const Hinge& h : hinges) sum += deficit(m, h);
      out.push_back(result("Gauss-Bonnet: sum of vertex deficits = 2 pi chi",
                           std::abs(sum - 2.0 * std::numbers::pi * c.euler_characteristic()), 1e-9));
    } else {
      out.push_back(skipped("Gauss-Bonnet: sum of vertex deficits = 2 pi chi", 1e-9,
                            "mesh has a boundary"));
    }
  }

  const double action = regge_action(m);
  double floor = 0.0;
  for (const Hinge& h : hinges) floor += m.volume(h.id);

  try {
    double sum = 0.0;
    for (const Hinge& h : hinges) {
      if (!h.boundary) sum += riemann_hinge(m, h, false).value * hybrid_volume(m, h.id);
    }
    out.push_back(result("sum of hinge eigenvalue x V = action", rel(sum, action, floor), 1e-10));

    if (d >= 3) {
      double dual = 0.0;
      for (std::size_t i = 0; i < c.size(d - 1); ++i) {
        const SimplexId f{d - 1, static_cast<int>(i)};
        if (!c.on_boundary(f)) dual += ricci_dual_edge(m, f, false) * hybrid_volume(m, f);
      }
      out.push_back(result("sum of dual-edge Ricci x V = 2 x action", rel(dual, 2.0 * action, floor),
                           1e-10));
      if (is_closed) {
        double edge = 0.0;
        double paths = 0.0;
        for (std::size_t i = 0; i < c.size(1); ++i) {
          const SimplexId e{1, static_cast<int>(i)};
          const double direct = ricci_simplicial_edge(m, e, false);
          edge += direct * hybrid_volume(m, e);
          paths = std::max(paths, rel(direct, ricci_edge_via_dual(m, e, false), 1e-300));
        }
        out.push_back(result("sum of edge Ricci x V = 2 x action", rel(edge, 2.0 * action, floor),
                             1e-10));
        out.push_back(result("edge Ricci: direct average = restricted dual-edge path", paths, 1e-10));
      } else {
        out.push_back(skipped("sum of edge Ricci x V = 2 x action", 1e-10, "mesh has a boundary"));
      }
    }

    double dual_scalar = 0.0;
    for (std::size_t i = 0; i < c.size(d); ++i) {
      const SimplexId t{d, static_cast<int>(i)};
      dual_scalar += scalar_vertex(m, t, Lattice::dual) * m.volume(t);
    }
    out.push_back(result("sum of dual-vertex scalar x V = 2 x action",
                         rel(dual_scalar, 2.0 * action, floor), 1e-10));
    if (is_closed) {
      double scalar = 0.0;
      for (std::size_t i = 0; i < c.size(0); ++i) {
        const SimplexId v{0, static_cast<int>(i)};
        scalar += scalar_vertex(m, v, Lattice::simplicial) * hybrid_volume(m, v);
      }
      out.push_back(result("sum of vertex scalar x V = 2 x action", rel(scalar, 2.0 * action, floor),
                           1e-10));
    } else {
      out.push_back(skipped("sum of vertex scalar x V = 2 x action", 1e-10, "mesh has a boundary"));
    }
  } catch (const ZeroMeasureElement& e) {
    out.push_back(skipped("curvature integrals", 1e-10, e.what()));
  }
}

}  // namespace

CheckSuite parse_check_suite(const std::string& name) {
  if (name == "volumes") return CheckSuite::volumes;
  if (name == "dec") return CheckSuite::dec;
  if (name == "curvature") return CheckSuite::curvature;
  if (name == "all") return CheckSuite::all;
  throw UnsupportedRequest("unknown suite '" + name + "'");
}

std::vector<CheckResult> run_checks(const MetricComplex& m, CheckSuite suite) {
  std::vector<CheckResult> out;
  if (suite == CheckSuite::volumes || suite == CheckSuite::all) volume_checks(m, out);
  if (suite == CheckSuite::dec || suite == CheckSuite::all) dec_checks(m, out);
  if (suite == CheckSuite::curvature || suite == CheckSuite::all) curvature_checks(m, out);
  return out;
}

}  // namespace pfcurv
