// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "pfcurv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include "pfcurv/errors.hpp"
#include "pfcurv/parallel.hpp"

namespace pfcurv {

namespace {

std::string describe(const SimplicialComplex& c, SimplexId s) {
  std::ostringstream os;
  os << s.dim << "-simplex [";
  const auto v = c.vertices(s);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// Slot (in the sorted tuple of `cell`) of the single vertex not in `face`,
// or -1 if `face` is not a facet of `cell`.
int opposite_slot(const SimplicialComplex& c, SimplexId face, SimplexId cell) {
  if (face.dim + 1 != cell.dim || !c.is_face(face, cell)) return -1;
  const auto fv = c.vertices(face);
  const auto cv = c.vertices(cell);
  for (int i = 0; i <= cell.dim; ++i) {
    if (!std::binary_search(fv.begin(), fv.end(), cv[i])) return i;
  }
  return -1;
}

}  // namespace

MetricComplex::MetricComplex(std::shared_ptr<const SimplicialComplex> complex,
                             std::vector<double> lengths_sq)
    : complex_(std::move(complex)), lengths_sq_(std::move(lengths_sq)) {
  const SimplicialComplex& c = *complex_;
  const int d = c.dimension();
  if (lengths_sq_.size() != c.size(1)) {
    throw InvalidMesh("expected " + std::to_string(c.size(1)) + " squared edge lengths, got " +
                      std::to_string(lengths_sq_.size()));
  }
  for (std::size_t e = 0; e < lengths_sq_.size(); ++e) {
    if (!(lengths_sq_[e] > 0.0) || !std::isfinite(lengths_sq_[e])) {
      throw DegenerateSimplex("non-positive squared length on " +
                              describe(c, {1, static_cast<int>(e)}));
    }
  }
  length_scale_ = std::sqrt(*std::max_element(lengths_sq_.begin(), lengths_sq_.end()));

  volume_.assign(d + 1, {});
  r2_.assign(d + 1, {});
  bary_.assign(d + 1, {});
  elev_.assign(d + 1, {});
  dual_.assign(d + 1, {});

  volume_[0].assign(c.size(0), 1.0);
  r2_[0].assign(c.size(0), 0.0);
  bary_[0].assign(c.size(0), 1.0);

  for (int k = 1; k <= d; ++k) {
    const std::size_t n = c.size(k);
    volume_[k].resize(n);
    r2_[k].resize(n);
    bary_[k].resize(n * (k + 1));
    parallel_for(n, [&, k](std::size_t j) {
      const SimplexId s{k, static_cast<int>(j)};
      const Eigen::MatrixXd g = gram(s);
      const double scale = g.diagonal().maxCoeff();
      Eigen::LLT<Eigen::MatrixXd> llt(g);
      if (llt.info() != Eigen::Success) {
        throw DegenerateSimplex("Gram matrix not positive definite on " + describe(c, s));
      }
      const Eigen::MatrixXd l = llt.matrixL();
      double vol = 1.0;
      for (int i = 0; i < k; ++i) {
        const double pivot = l(i, i) * l(i, i);
        if (!(pivot > kDegeneracyTolerance * scale)) {
          throw DegenerateSimplex("vanishing Gram pivot on " + describe(c, s));
        }
        vol *= l(i, i);
      }
      volume_[k][j] = vol / factorial(k);

      // Circumcenter c = sum_i alpha_i e_i solves 2 G alpha = diag(G).
      const Eigen::VectorXd rhs = 0.5 * g.diagonal();
      const Eigen::VectorXd alpha = llt.solve(rhs);
      r2_[k][j] = alpha.dot(rhs);
      double* b = bary_[k].data() + j * (k + 1);
      b[0] = 1.0 - alpha.sum();
      for (int i = 0; i < k; ++i) b[i + 1] = alpha(i);
    });
  }

  // Elevation over the facet opposite slot i: lambda_i * k |t| / |facet|,
  // i.e. the barycentric weight times the height of the opposite vertex.
  for (int k = 1; k <= d; ++k) {
    const std::size_t n = c.size(k);
    elev_[k].resize(n * (k + 1));
    for (std::size_t j = 0; j < n; ++j) {
      const SimplexId t{k, static_cast<int>(j)};
      const auto bd = c.boundary(t);
      for (int i = 0; i <= k; ++i) {
        const double facet_vol = volume_[k - 1][bd[i].face];
        elev_[k][j * (k + 1) + i] = bary_[k][j * (k + 1) + i] * k * volume_[k][j] / facet_vol;
      }
    }
  }

  dual_[d].assign(c.size(d), 1.0);
  for (int k = d - 1; k >= 0; --k) {
    const std::size_t n = c.size(k);
    dual_[k].assign(n, 0.0);
    for (std::size_t j = 0; j < c.size(k + 1); ++j) {
      const SimplexId t{k + 1, static_cast<int>(j)};
      const auto bd = c.boundary(t);
      for (int i = 0; i <= k + 1; ++i) {
        dual_[k][bd[i].face] += elevation_at(t, i) * dual_[k + 1][j];
      }
    }
    for (double& v : dual_[k]) v /= (d - k);
  }
}

double MetricComplex::length_sq(int a, int b) const {
  const int e[2] = {a, b};
  const SimplexId id = complex_->find(e);
  if (id.index < 0) {
    throw NotIncident("no edge between vertices " + std::to_string(a) + " and " + std::to_string(b));
  }
  return lengths_sq_[id.index];
}

Eigen::MatrixXd MetricComplex::gram(SimplexId s) const {
  const auto v = complex_->vertices(s);
  const int k = s.dim;
  Eigen::VectorXd l0(k);
  for (int i = 0; i < k; ++i) l0(i) = length_sq(v[0], v[i + 1]);
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i) {
    g(i, i) = l0(i);
    for (int j = i + 1; j < k; ++j) {
      g(i, j) = g(j, i) = 0.5 * (l0(i) + l0(j) - length_sq(v[i + 1], v[j + 1]));
    }
  }
  return g;
}

std::span<const double> MetricComplex::circumcenter(SimplexId s) const {
  const auto n = static_cast<std::size_t>(s.dim + 1);
  return {bary_[s.dim].data() + n * static_cast<std::size_t>(s.index), n};
}

double MetricComplex::elevation_at(SimplexId cell, int position) const {
  return elev_[cell.dim][static_cast<std::size_t>(cell.index) * (cell.dim + 1) + position];
}

double MetricComplex::elevation(SimplexId face, SimplexId cell) const {
  const int slot = opposite_slot(*complex_, face, cell);
  if (slot < 0) {
    throw NotIncident(describe(*complex_, face) + " is not a facet of " + describe(*complex_, cell));
  }
  return elevation_at(cell, slot);
}

double MetricComplex::local_dual_volume(SimplexId s, SimplexId c) const {
  if (s == c) return 1.0;
  if (!complex_->is_face(s, c)) {
    throw NotIncident(describe(*complex_, s) + " is not a face of " + describe(*complex_, c));
  }
  const auto sv = complex_->vertices(s);
  const auto cv = complex_->vertices(c);
  double sum = 0.0;
  std::vector<int> up(sv.begin(), sv.end());
  for (int v : cv) {
    if (std::binary_search(sv.begin(), sv.end(), v)) continue;
    up.assign(sv.begin(), sv.end());
    up.insert(std::upper_bound(up.begin(), up.end(), v), v);
    const SimplexId t = complex_->find(up);
    const int slot = static_cast<int>(std::find(up.begin(), up.end(), v) - up.begin());
    sum += elevation_at(t, slot) * local_dual_volume(t, c);
  }
  return sum / (c.dim - s.dim);
}

double MetricComplex::total_volume() const {
  const int d = dimension();
  double sum = 0.0;
  for (double v : volume_[d]) sum += v;
  return sum;
}

double MetricComplex::well_centered_fraction() const {
  const int d = dimension();
  const std::size_t n = complex_->size(d);
  std::size_t inside = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto b = circumcenter({d, static_cast<int>(j)});
    if (std::all_of(b.begin(), b.end(), [](double x) { return x >= -1e-12; })) ++inside;
  }
  return n ? static_cast<double>(inside) / static_cast<double>(n) : 0.0;
}

MetricComplex make_metric_complex(const MeshData& mesh, const BuildOptions& options) {
  if (mesh.dimension < 1) throw InvalidMesh("mesh dimension must be at least 1");
  if (mesh.coordinates) {
    const auto& coords = *mesh.coordinates;
    for (const auto& cell : mesh.cells) {
      for (int v : cell) {
        if (v < 0 || static_cast<std::size_t>(v) >= coords.size()) {
          throw InvalidMesh("cell references vertex " + std::to_string(v) + " outside coordinates");
        }
      }
    }
    for (const auto& p : coords) {
      if (p.size() != coords.front().size()) throw InvalidMesh("coordinates have mixed lengths");
      for (double x : p) {
        if (!std::isfinite(x)) throw InvalidMesh("non-finite coordinate");
      }
    }
  }
  auto complex = std::make_shared<const SimplicialComplex>(
      build_complex(mesh.dimension, mesh.cells, options));
  const std::size_t ne = complex->size(1);

  std::vector<double> from_list(ne, -1.0);
  for (const EdgeLengthSq& e : mesh.edge_lengths_sq) {
    const int ev[2] = {e.a, e.b};
    const SimplexId id = complex->find(ev);
    if (id.index < 0) {
      throw InvalidMesh("edge_lengths_sq entry [" + std::to_string(e.a) + "," + std::to_string(e.b) +
                        "] is not an edge of the mesh");
    }
    if (!(e.value > 0.0) || !std::isfinite(e.value)) {
      throw InvalidMesh("edge_lengths_sq entry [" + std::to_string(e.a) + "," + std::to_string(e.b) +
                        "] is not positive");
    }
    from_list[id.index] = e.value;
  }

  std::vector<double> lengths(ne, 0.0);
  for (std::size_t i = 0; i < ne; ++i) {
    const auto v = complex->vertices({1, static_cast<int>(i)});
    if (mesh.coordinates) {
      const auto& p = (*mesh.coordinates)[v[0]];
      const auto& q = (*mesh.coordinates)[v[1]];
      double s = 0.0;
      for (std::size_t a = 0; a < p.size(); ++a) s += (p[a] - q[a]) * (p[a] - q[a]);
      lengths[i] = s;
      if (from_list[i] > 0.0 && std::abs(from_list[i] - s) > 1e-9 * std::max(s, from_list[i])) {
        throw InvalidMesh("coordinates and edge_lengths_sq disagree on edge [" +
                          std::to_string(v[0]) + "," + std::to_string(v[1]) + "]");
      }
    } else {
      if (from_list[i] < 0.0) {
        throw InvalidMesh("missing squared length for edge [" + std::to_string(v[0]) + "," +
                          std::to_string(v[1]) + "]");
      }
      lengths[i] = from_list[i];
    }
  }
  return MetricComplex(std::move(complex), std::move(lengths));
}

MeshData to_mesh_data(const MetricComplex& m) {
  const SimplicialComplex& c = m.complex();
  MeshData out;
  out.dimension = c.dimension();
  for (std::size_t t = 0; t < c.size(out.dimension); ++t) {
    const auto v = c.vertices({out.dimension, static_cast<int>(t)});
    std::vector<int> cell(v.begin(), v.end());
    if (c.top_orientation()[t] < 0) std::swap(cell[0], cell[1]);
    out.cells.push_back(std::move(cell));
  }
  for (std::size_t e = 0; e < c.size(1); ++e) {
    const auto v = c.vertices({1, static_cast<int>(e)});
    out.edge_lengths_sq.push_back({v[0], v[1], m.lengths_sq()[e]});
  }
  return out;
}

Eigen::MatrixXd embed_simplex(const MetricComplex& m, SimplexId s) {
  const int k = s.dim;
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(k + 1, k);
  if (k == 0) return coords;
  const Eigen::MatrixXd g = m.gram(s);
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw DegenerateSimplex("cannot embed a degenerate simplex");
  coords.bottomRows(k) = llt.matrixL();
  return coords;
}

double simplex_volume(const MetricComplex& m, SimplexId s) { return m.volume(s); }

Circumcenter circumcenter(const MetricComplex& m, SimplexId s) {
  const auto b = m.circumcenter(s);
  return {std::vector<double>(b.begin(), b.end()), m.circumradius_sq(s)};
}

double elevation(const MetricComplex& m, SimplexId s, SimplexId t) { return m.elevation(s, t); }

double dual_volume(const MetricComplex& m, SimplexId s) { return m.dual_volume(s); }

double irreducible_cell_volume(const MetricComplex& m, const Flag& flag) {
  const int d = m.dimension();
  if (static_cast<int>(flag.size()) != d + 1) throw NotIncident("a full flag has d+1 entries");
  double prod = 1.0;
  for (int j = 0; j < d; ++j) prod *= m.elevation(flag[j], flag[j + 1]);
  return prod / factorial(d);
}

void for_each_flag(const MetricComplex& m, const std::function<void(const Flag&)>& fn) {
  const SimplicialComplex& c = m.complex();
  const int d = c.dimension();
  Flag flag(d + 1);
  std::function<void(int)> descend = [&](int k) {
    if (k == 0) {
      fn(flag);
      return;
    }
    for (const Incidence& inc : c.boundary(flag[k])) {
      flag[k - 1] = {k - 1, inc.face};
      descend(k - 1);
    }
  };
  for (std::size_t t = 0; t < c.size(d); ++t) {
    flag[d] = {d, static_cast<int>(t)};
    descend(d);
  }
}

double hybrid_volume(const MetricComplex& m, SimplexId s) {
  return m.volume(s) * m.dual_volume(s) / binomial(m.dimension(), s.dim);
}

double shared_hybrid_volume(const MetricComplex& m, std::span<const SimplexId> chain) {
  if (chain.empty()) throw NotIncident("empty chain");
  const int d = m.dimension();
  const SimplexId first = chain.front();
  const SimplexId last = chain.back();
  double v = factorial(first.dim) * m.volume(first);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!m.complex().is_face(chain[i], chain[i + 1])) {
      throw NotIncident("chain elements are not nested");
    }
    v *= factorial(chain[i + 1].dim - chain[i].dim) * m.local_dual_volume(chain[i], chain[i + 1]);
  }
  v *= factorial(d - last.dim) * m.dual_volume(last);
  return v / factorial(d);
}

double shared_hybrid_volume(const MetricComplex& m, SimplexId s, SimplexId t) {
  const SimplicialComplex& c = m.complex();
  if (c.is_face(s, t)) {
    const SimplexId chain[2] = {s, t};
    return shared_hybrid_volume(m, chain);
  }
  if (c.is_face(t, s)) {
    const SimplexId chain[2] = {t, s};
    return shared_hybrid_volume(m, chain);
  }
  throw NotIncident(describe(c, s) + " and " + describe(c, t) + " share no flag");
}

double restricted_hybrid_measure(const MetricComplex& m, SimplexId inner, SimplexId container) {
  return m.volume(inner) * m.local_dual_volume(inner, container) / binomial(container.dim, inner.dim);
}

double restricted_hinge_area(const MetricComplex& m, const Hinge& h, SimplexId edge) {
  if (m.dimension() < 3) {
    throw UnsupportedRequest("restricted hinge areas need d >= 3 (hinges contain no edges)");
  }
  if (edge.dim != 1 || !m.complex().is_face(edge, h.id)) {
    throw NotIncident(describe(m.complex(), edge) + " is not an edge of hinge " +
                      describe(m.complex(), h.id));
  }
  return restricted_hybrid_measure(m, edge, h.id);
}

double moment_arm(const MetricComplex& m, SimplexId s, SimplexId partner) {
  const int d = m.dimension();
  if (!m.complex().is_face(s, partner)) {
    throw NotIncident(describe(m.complex(), s) + " does not overlap the dual of " +
                      describe(m.complex(), partner));
  }
  const int k = s.dim;
  const int p = d - partner.dim;
  const double denom = m.volume(s) * m.dual_volume(partner);
  if (std::abs(denom) < 1e-300) throw ZeroMeasureElement("dual element has zero measure");
  return std::abs(binomial(d, k) * binomial(d - k, p) * shared_hybrid_volume(m, s, partner) / denom);
}

double dihedral_angle(const MetricComplex& m, SimplexId hinge, SimplexId top) {
  const SimplicialComplex& c = m.complex();
  const int d = c.dimension();
  if (hinge.dim != d - 2 || top.dim != d || !c.is_face(hinge, top)) {
    throw NotIncident(describe(c, hinge) + " is not a hinge of " + describe(c, top));
  }
  const auto tv = c.vertices(top);
  const auto hv = c.vertices(hinge);
  std::vector<int> hslots;
  std::vector<int> others;
  for (int i = 0; i <= d; ++i) {
    (std::binary_search(hv.begin(), hv.end(), tv[i]) ? hslots : others).push_back(i);
  }
  const Eigen::MatrixXd p = embed_simplex(m, top);
  const Eigen::VectorXd origin = p.row(hslots[0]).transpose();
  Eigen::MatrixXd span(d, d - 2);
  for (int i = 1; i < d - 1; ++i) span.col(i - 1) = p.row(hslots[i]).transpose() - origin;

  auto project_out = [&](Eigen::VectorXd v) {
    if (d > 2) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
      const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d - 2);
      v -= q * (q.transpose() * v);
    }
    return v;
  };
  const Eigen::VectorXd u = project_out(p.row(others[0]).transpose() - origin);
  const Eigen::VectorXd w = project_out(p.row(others[1]).transpose() - origin);
  const double cosine = u.dot(w) / (u.norm() * w.norm());

  // sin from volumes: d |T| |h| / ((d-1) |f_a| |f_b|), exact near right angles.
  const auto bd = c.boundary(top);
  const double fa = m.volume({d - 1, bd[others[0]].face});
  const double fb = m.volume({d - 1, bd[others[1]].face});
  const double sine = d * m.volume(top) * m.volume(hinge) / ((d - 1) * fa * fb);
  return std::atan2(sine, cosine);
}

double dihedral_angle(const MetricComplex& m, const Hinge& h, int top) {
  return dihedral_angle(m, h.id, {m.dimension(), top});
}

}  // namespace pfcurv
