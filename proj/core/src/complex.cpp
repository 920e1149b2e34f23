// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "pfcurv/complex.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "pfcurv/errors.hpp"

namespace pfcurv {

namespace {

std::string tuple_string(std::span<const int> t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ']';
  return os.str();
}

// Sign of the permutation that sorts `v` (insertion sort parity).
int sort_with_parity(std::vector<int>& v) {
  int parity = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      parity = -parity;
    }
  }
  return parity;
}

// Calls fn(subset) for every size-m subset of `items`, in lexicographic
// order of positions.
template <typename Fn>
void for_each_subset(std::span<const int> items, int m, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (m < 0 || m > n) return;
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[i] = i;
  std::vector<int> subset(m);
  while (true) {
    for (int i = 0; i < m; ++i) subset[i] = items[pos[i]];
    fn(subset);
    int i = m - 1;
    while (i >= 0 && pos[i] == n - m + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < m; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace

std::size_t SimplicialComplex::TupleHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t SimplicialComplex::size(int k) const {
  if (k < 0 || k > dim_) return 0;
  return verts_[k].size() / static_cast<std::size_t>(k + 1);
}

std::span<const int> SimplicialComplex::vertices(SimplexId s) const {
  const auto n = static_cast<std::size_t>(s.dim + 1);
  return {verts_[s.dim].data() + n * static_cast<std::size_t>(s.index), n};
}

SimplexId SimplicialComplex::find(std::span<const int> labels) const {
  const int k = static_cast<int>(labels.size()) - 1;
  if (k < 0 || k > dim_) return {k, -1};
  std::vector<int> key(labels.begin(), labels.end());
  std::sort(key.begin(), key.end());
  auto it = lookup_[k].find(key);
  return {k, it == lookup_[k].end() ? -1 : it->second};
}

int SimplicialComplex::vertex_index(int label) const {
  const int key[1] = {label};
  return find(key).index;
}

std::span<const Incidence> SimplicialComplex::boundary(SimplexId s) const {
  if (s.dim == 0) return {};
  const auto n = static_cast<std::size_t>(s.dim + 1);
  return {boundary_[s.dim].data() + n * static_cast<std::size_t>(s.index), n};
}

std::span<const int> SimplicialComplex::cofacets(SimplexId s) const {
  return cofacets_[s.dim][s.index];
}

std::vector<SimplexId> SimplicialComplex::faces(SimplexId s, int k) const {
  std::vector<SimplexId> out;
  if (k < 0 || k > s.dim) return out;
  for_each_subset(vertices(s), k + 1, [&](const std::vector<int>& sub) {
    out.push_back({k, lookup_[k].at(sub)});
  });
  return out;
}

std::vector<SimplexId> SimplicialComplex::cofaces(SimplexId s, int k) const {
  std::vector<SimplexId> out;
  if (k < s.dim || k > dim_) return out;
  if (k == s.dim) return {s};
  const auto sv = vertices(s);
  std::set<int> found;
  for (int top : vertex_star_[vertex_index(sv[0])]) {
    const auto tv = vertices({dim_, top});
    if (!std::includes(tv.begin(), tv.end(), sv.begin(), sv.end())) continue;
    std::vector<int> rest;
    std::set_difference(tv.begin(), tv.end(), sv.begin(), sv.end(), std::back_inserter(rest));
    for_each_subset(rest, k - s.dim, [&](const std::vector<int>& extra) {
      std::vector<int> t(sv.begin(), sv.end());
      t.insert(t.end(), extra.begin(), extra.end());
      std::sort(t.begin(), t.end());
      found.insert(lookup_[k].at(t));
    });
  }
  for (int i : found) out.push_back({k, i});
  return out;
}

bool SimplicialComplex::is_face(SimplexId face, SimplexId cell) const {
  if (face.dim > cell.dim) return false;
  const auto a = vertices(face);
  const auto b = vertices(cell);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Eigen::SparseMatrix<int> SimplicialComplex::boundary_matrix(int k) const {
  if (k < 1 || k > dim_) throw UnsupportedRequest("boundary_matrix: k must lie in [1, d]");
  std::vector<Eigen::Triplet<int>> trips;
  const int n = static_cast<int>(size(k));
  for (int j = 0; j < n; ++j) {
    for (const Incidence& inc : boundary({k, j})) trips.emplace_back(inc.face, j, inc.sign);
  }
  Eigen::SparseMatrix<int> m(static_cast<Eigen::Index>(size(k - 1)), n);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

std::size_t SimplicialComplex::boundary_size(int k) const {
  if (k < 0 || k > dim_) return 0;
  return static_cast<std::size_t>(std::count(boundary_flag_[k].begin(), boundary_flag_[k].end(), 1));
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0;
  for (int k = 0; k <= dim_; ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<int>(size(k));
  return chi;
}

Hinge SimplicialComplex::hinge(int index) const {
  if (dim_ < 2) throw UnsupportedRequest("hinges require dimension >= 2");
  const int hd = dim_ - 2;
  Hinge out;
  out.id = {hd, index};
  out.boundary = on_boundary(out.id);

  const auto hv = vertices(out.id);
  std::vector<int> tops;
  for (const SimplexId& t : cofaces(out.id, dim_)) tops.push_back(t.index);

  // The two (d-1)-faces of `top` containing the hinge.
  auto hinge_faces = [&](int top) {
    std::array<int, 2> fs{-1, -1};
    int n = 0;
    for (const Incidence& inc : boundary({dim_, top})) {
      if (is_face(out.id, {dim_ - 1, inc.face})) fs[n++] = inc.face;
    }
    return fs;
  };
  auto other_top = [&](int face, int top) {
    for (int t : cofacets_[dim_ - 1][face]) {
      if (t != top) return t;
    }
    return -1;
  };

  int start = tops.front();
  int entry_face = -1;
  if (out.boundary) {
    for (int t : tops) {
      for (int f : hinge_faces(t)) {
        if (cofacets_[dim_ - 1][f].size() == 1) {
          start = t;
          entry_face = f;
          break;
        }
      }
      if (entry_face >= 0) break;
    }
  }
  if (entry_face < 0) entry_face = hinge_faces(start)[0];

  int cur = start;
  int via = entry_face;
  while (true) {
    out.star.push_back(cur);
    const auto fs = hinge_faces(cur);
    const int exit_face = fs[0] == via ? fs[1] : fs[0];
    const int next = other_top(exit_face, cur);
    if (next < 0 || next == start) break;
    if (out.star.size() > tops.size()) break;
    cur = next;
    via = exit_face;
  }
  if (out.star.size() != tops.size()) {
    throw BrokenCycle("star of hinge " + tuple_string(hv) + " does not form a single cycle");
  }
  return out;
}

std::vector<Hinge> SimplicialComplex::hinges() const {
  std::vector<Hinge> out;
  if (dim_ < 2) return out;
  const int n = static_cast<int>(size(dim_ - 2));
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(hinge(i));
  return out;
}

SimplicialComplex build_complex(int dimension, const std::vector<std::vector<int>>& cells,
                                const BuildOptions& options) {
  if (dimension < 0) throw InvalidMesh("dimension must be non-negative");
  if (cells.empty()) throw InvalidMesh("complex needs at least one top cell");

  SimplicialComplex c;
  c.dim_ = dimension;
  const int d = dimension;
  c.verts_.assign(d + 1, {});
  c.lookup_.assign(d + 1, {});

  std::vector<std::vector<int>> sorted;
  sorted.reserve(cells.size());
  for (const auto& cell : cells) {
    if (static_cast<int>(cell.size()) != d + 1) {
      throw InvalidMesh("cell " + tuple_string(cell) + " does not have d+1 vertices");
    }
    std::vector<int> s = cell;
    c.orientation_.push_back(sort_with_parity(s));
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidMesh("cell " + tuple_string(cell) + " repeats a vertex");
    }
    if (s.front() < 0) throw InvalidMesh("negative vertex label in " + tuple_string(cell));
    if (!c.lookup_[d].emplace(s, static_cast<int>(sorted.size())).second) {
      throw DuplicateCell("cell " + tuple_string(cell) + " appears more than once");
    }
    c.verts_[d].insert(c.verts_[d].end(), s.begin(), s.end());
    sorted.push_back(std::move(s));
  }

  // Lower skeletons in lexicographic order.
  for (int k = 0; k < d; ++k) {
    std::set<std::vector<int>> faces;
    for (const auto& s : sorted) {
      for_each_subset(s, k + 1, [&](const std::vector<int>& sub) { faces.insert(sub); });
    }
    int idx = 0;
    for (const auto& f : faces) {
      c.lookup_[k].emplace(f, idx++);
      c.verts_[k].insert(c.verts_[k].end(), f.begin(), f.end());
    }
  }

  c.boundary_.assign(d + 1, {});
  c.cofacets_.assign(d + 1, {});
  for (int k = 0; k <= d; ++k) c.cofacets_[k].resize(c.size(k));
  for (int k = 1; k <= d; ++k) {
    const int n = static_cast<int>(c.size(k));
    c.boundary_[k].reserve(static_cast<std::size_t>(n) * (k + 1));
    std::vector<int> face(k);
    for (int j = 0; j < n; ++j) {
      const auto v = c.vertices({k, j});
      for (int i = 0; i <= k; ++i) {
        for (int a = 0, b = 0; a <= k; ++a) {
          if (a != i) face[b++] = v[a];
        }
        const int fi = c.lookup_[k - 1].at(face);
        c.boundary_[k].push_back({fi, (i % 2 == 0) ? 1 : -1});
        c.cofacets_[k - 1][fi].push_back(j);
      }
    }
  }

  c.boundary_flag_.assign(d + 1, {});
  for (int k = 0; k <= d; ++k) c.boundary_flag_[k].assign(c.size(k), 0);
  if (d >= 1) {
    for (std::size_t f = 0; f < c.size(d - 1); ++f) {
      const auto nco = c.cofacets_[d - 1][f].size();
      if (nco > 2) {
        throw NonManifold("(d-1)-face " + tuple_string(c.vertices({d - 1, static_cast<int>(f)})) +
                          " has " + std::to_string(nco) + " top cofaces");
      }
      if (nco == 1) {
        for (int k = 0; k <= d - 1; ++k) {
          for (const SimplexId& s : c.faces({d - 1, static_cast<int>(f)}, k)) {
            c.boundary_flag_[k][s.index] = 1;
          }
        }
      }
    }
  }

  c.vertex_star_.assign(c.size(0), {});
  for (std::size_t t = 0; t < c.size(d); ++t) {
    for (int label : c.vertices({d, static_cast<int>(t)})) {
      c.vertex_star_[c.lookup_[0].at({label})].push_back(static_cast<int>(t));
    }
  }

  // Orientability by propagation across interior facets. A top cell's sign
  // in `orient` multiplies its sorted-tuple orientation.
  if (d >= 1) {
    auto facet_sign = [&](int top, int face) {
      for (const Incidence& inc : c.boundary({d, top})) {
        if (inc.face == face) return inc.sign;
      }
      return 0;
    };
    bool consistent_input = true;
    for (std::size_t f = 0; f < c.size(d - 1); ++f) {
      const auto& co = c.cofacets_[d - 1][f];
      if (co.size() != 2) continue;
      const int fi = static_cast<int>(f);
      const int a = c.orientation_[co[0]] * facet_sign(co[0], fi);
      const int b = c.orientation_[co[1]] * facet_sign(co[1], fi);
      if (a + b != 0) consistent_input = false;
    }
    if (options.check_orientation && !consistent_input) {
      throw InconsistentOrientation("input cell orientations disagree across an interior face");
    }

    std::vector<int> orient(c.size(d), 0);
    for (std::size_t seed = 0; seed < orient.size() && c.orientable_; ++seed) {
      if (orient[seed] != 0) continue;
      orient[seed] = 1;
      std::queue<int> q;
      q.push(static_cast<int>(seed));
      while (!q.empty() && c.orientable_) {
        const int t = q.front();
        q.pop();
        for (const Incidence& inc : c.boundary({d, t})) {
          for (int u : c.cofacets_[d - 1][inc.face]) {
            if (u == t) continue;
            const int want = -orient[t] * inc.sign * facet_sign(u, inc.face);
            if (orient[u] == 0) {
              orient[u] = want;
              q.push(u);
            } else if (orient[u] != want) {
              c.orientable_ = false;
            }
          }
        }
      }
    }
  }

  return c;
}

}  // namespace pfcurv
