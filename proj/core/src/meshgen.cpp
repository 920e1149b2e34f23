// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "pfcurv/meshgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include <Eigen/Cholesky>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "pfcurv/errors.hpp"

namespace pfcurv {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

using Points = std::vector<std::vector<double>>;

// Puts each cell in positive orientation with respect to `frame(cell)`.
template <typename Frame>
void orient_cells(std::vector<std::vector<int>>& cells, Frame&& frame) {
  for (auto& cell : cells) {
    if (frame(cell) < 0.0) std::swap(cell[cell.size() - 2], cell[cell.size() - 1]);
  }
}

double simplex_det(const Points& p, const std::vector<int>& cell) {
  const int k = static_cast<int>(cell.size()) - 1;
  Eigen::MatrixXd a(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a(i, j) = p[cell[i + 1]][j] - p[cell[0]][j];
  }
  return a.determinant();
}

std::vector<EdgeLengthSq> unit_lengths(const std::vector<std::vector<int>>& cells) {
  std::map<std::pair<int, int>, bool> seen;
  std::vector<EdgeLengthSq> out;
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const auto key = std::minmax(c[i], c[j]);
        if (seen.emplace(key, true).second) out.push_back({key.first, key.second, 1.0});
      }
    }
  }
  return out;
}

bool euclidean_top(const MetricComplex& m, const std::vector<double>& lengths, int top) {
  const SimplicialComplex& c = m.complex();
  const int d = c.dimension();
  const auto v = c.vertices({d, top});
  auto len = [&](int a, int b) {
    const int e[2] = {std::min(a, b), std::max(a, b)};
    return lengths[c.find(e).index];
  };
  Eigen::MatrixXd g(d, d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      g(i - 1, j - 1) =
          i == j ? len(v[0], v[i])
                 : 0.5 * (len(v[0], v[i]) + len(v[0], v[j]) - len(v[i], v[j]));
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) return false;
  const double scale = g.diagonal().maxCoeff();
  const Eigen::MatrixXd l = llt.matrixL();
  for (int i = 0; i < d; ++i) {
    if (!(l(i, i) * l(i, i) > kDegeneracyTolerance * scale)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t SplitMix64::at(std::uint64_t counter) const {
  std::uint64_t z = seed_ + (counter + 1) * kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform_at(std::uint64_t counter) const {
  return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
}

MeshData flat_grid_mesh(int dimension, int n) {
  if (dimension != 2 && dimension != 3) throw UnsupportedRequest("flat grids exist for d = 2 and 3");
  if (n < 1) throw UnsupportedRequest("flat grid needs at least one cell per axis");
  const int side = n + 1;
  MeshData out;
  out.dimension = dimension;
  Points pts;
  auto id = [&](std::array<int, 3> x) { return x[0] + side * (x[1] + side * x[2]); };

  if (dimension == 2) {
    for (int j = 0; j < side; ++j) {
      for (int i = 0; i < side; ++i) pts.push_back({double(i), double(j)});
    }
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const int a = id({i, j, 0}), b = id({i + 1, j, 0});
        const int c = id({i + 1, j + 1, 0}), e = id({i, j + 1, 0});
        out.cells.push_back({a, b, c});
        out.cells.push_back({a, c, e});
      }
    }
  } else {
    for (int k = 0; k < side; ++k) {
      for (int j = 0; j < side; ++j) {
        for (int i = 0; i < side; ++i) pts.push_back({double(i), double(j), double(k)});
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          std::array<int, 3> axes{0, 1, 2};
          do {
            std::array<int, 3> x{i, j, k};
            std::vector<int> cell{id(x)};
            for (int a : axes) {
              ++x[a];
              cell.push_back(id(x));
            }
            out.cells.push_back(std::move(cell));
          } while (std::next_permutation(axes.begin(), axes.end()));
        }
      }
    }
  }
  orient_cells(out.cells, [&](const std::vector<int>& c) { return simplex_det(pts, c); });
  out.coordinates = std::move(pts);
  return out;
}

MetricComplex gen_flat_grid(int dimension, int n) {
  return make_metric_complex(flat_grid_mesh(dimension, n));
}

MeshData boundary_of_simplex_mesh(int ambient) {
  if (ambient < 3) throw UnsupportedRequest("simplex boundary needs ambient dimension >= 3");
  MeshData out;
  out.dimension = ambient - 1;
  // Facet opposite vertex i, with the induced boundary orientation.
  for (int i = 0; i <= ambient; ++i) {
    std::vector<int> cell;
    for (int v = 0; v <= ambient; ++v) {
      if (v != i) cell.push_back(v);
    }
    if (i % 2 == 1) std::swap(cell[0], cell[1]);
    out.cells.push_back(std::move(cell));
  }
  out.edge_lengths_sq = unit_lengths(out.cells);
  return out;
}

MetricComplex gen_boundary_of_simplex(int ambient) {
  return make_metric_complex(boundary_of_simplex_mesh(ambient));
}

MeshData icosphere_mesh(int level, double radius) {
  if (level < 0 || level > 6) throw UnsupportedRequest("icosphere level must be in [0, 6]");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw UnsupportedRequest("radius must be positive");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Points pts;
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) {
      pts.push_back({0.0, s1, s2 * phi});
      pts.push_back({s1, s2 * phi, 0.0});
      pts.push_back({s2 * phi, 0.0, s1});
    }
  }
  auto dist_sq = [&](int a, int b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += (pts[a][i] - pts[b][i]) * (pts[a][i] - pts[b][i]);
    return s;
  };
  // Faces are the triples at mutual distance 2.
  std::vector<std::vector<int>> cells;
  for (int a = 0; a < 12; ++a) {
    for (int b = a + 1; b < 12; ++b) {
      for (int c = b + 1; c < 12; ++c) {
        if (std::abs(dist_sq(a, b) - 4.0) < 1e-9 && std::abs(dist_sq(b, c) - 4.0) < 1e-9 &&
            std::abs(dist_sq(a, c) - 4.0) < 1e-9) {
          cells.push_back({a, b, c});
        }
      }
    }
  }
  auto project = [&](std::vector<double> p) {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (double& x : p) x *= radius / r;
    return p;
  };
  for (auto& p : pts) p = project(p);

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      std::vector<double> p(3);
      for (int i = 0; i < 3; ++i) p[i] = 0.5 * (pts[a][i] + pts[b][i]);
      pts.push_back(project(p));
      const int id = static_cast<int>(pts.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::vector<int>> next;
    next.reserve(cells.size() * 4);
    for (const auto& t : cells) {
      const int ab = midpoint(t[0], t[1]), bc = midpoint(t[1], t[2]), ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    cells = std::move(next);
  }

  // Outward orientation: (b - a) x (c - a) points away from the origin.
  orient_cells(cells, [&](const std::vector<int>& t) {
    const auto& a = pts[t[0]];
    const auto& b = pts[t[1]];
    const auto& c = pts[t[2]];
    const Eigen::Vector3d u(b[0] - a[0], b[1] - a[1], b[2] - a[2]);
    const Eigen::Vector3d w(c[0] - a[0], c[1] - a[1], c[2] - a[2]);
    return u.cross(w).dot(Eigen::Vector3d(a[0], a[1], a[2]));
  });

  MeshData out;
  out.dimension = 2;
  out.cells = std::move(cells);
  out.coordinates = std::move(pts);
  return out;
}

MetricComplex gen_icosphere(int level, double radius) {
  return make_metric_complex(icosphere_mesh(level, radius));
}

MetricComplex perturb_lengths(const MetricComplex& m, double amplitude, std::uint64_t seed) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw UnsupportedRequest("perturbation amplitude must be finite and non-negative");
  }
  if (amplitude >= 1.0) {
    throw DegenerateSimplex("perturbation amplitude >= 1 can make squared lengths non-positive");
  }
  const SimplicialComplex& c = m.complex();
  const int d = c.dimension();
  const auto base = m.lengths_sq();
  const std::size_t ne = base.size();
  const SplitMix64 rng(seed);

  std::vector<double> lengths(base.begin(), base.end());
  auto draw = [&](std::size_t e, int round) {
    const double u = rng.uniform_at(static_cast<std::uint64_t>(round) * ne + e);
    lengths[e] = base[e] * (1.0 + amplitude * (2.0 * u - 1.0));
  };
  for (std::size_t e = 0; e < ne; ++e) draw(e, 0);

  for (int round = 1;; ++round) {
    std::vector<char> redo(ne, 0);
    bool any = false;
    for (std::size_t t = 0; t < c.size(d); ++t) {
      if (euclidean_top(m, lengths, static_cast<int>(t))) continue;
      any = true;
      for (const SimplexId& e : c.faces({d, static_cast<int>(t)}, 1)) redo[e.index] = 1;
    }
    if (!any) break;
    if (round > kMaxResampleRounds) {
      throw DegenerateSimplex("perturbation left degenerate simplexes after " +
                              std::to_string(kMaxResampleRounds) + " resampling rounds");
    }
    for (std::size_t e = 0; e < ne; ++e) {
      if (redo[e]) draw(e, round);
    }
  }
  return MetricComplex(m.complex_ptr(), std::move(lengths));
}

MeshData generate(const MeshSpec& spec) {
  MeshData mesh;
  if (spec.generator == "flat-grid") {
    mesh = flat_grid_mesh(spec.dimension, spec.size);
  } else if (spec.generator == "simplex-boundary") {
    mesh = boundary_of_simplex_mesh(spec.dimension);
  } else if (spec.generator == "icosphere") {
    mesh = icosphere_mesh(spec.level, spec.radius);
  } else {
    throw UnsupportedRequest("unknown generator '" + spec.generator + "'");
  }
  if (spec.amplitude == 0.0) return mesh;
  const MetricComplex perturbed = perturb_lengths(make_metric_complex(mesh), spec.amplitude, spec.seed);
  MeshData out = to_mesh_data(perturbed);
  return out;
}

}  // namespace pfcurv
