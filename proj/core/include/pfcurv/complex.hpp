// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

namespace pfcurv {

/// Dense handle of a k-simplex inside one SimplicialComplex.
struct SimplexId {
  int dim = 0;
  int index = 0;

  friend auto operator<=>(const SimplexId&, const SimplexId&) = default;
};

/// Signed entry of the boundary operator: `face` appears in the boundary of
/// its parent with sign (-1)^position, where position is the slot of the
/// removed vertex in the parent's sorted tuple.
struct Incidence {
  int face = 0;
  int sign = 0;
};

/// Codimension-2 simplex together with the d-simplexes around it, ordered so
/// that consecutive entries share a (d-1)-face containing the hinge. For an
/// interior hinge the order is cyclic; for a boundary hinge it runs from one
/// boundary face to the other.
struct Hinge {
  SimplexId id;
  std::vector<int> star;
  bool boundary = false;
};

struct BuildOptions {
  /// Require the input vertex order of the top cells to induce a consistent
  /// orientation across every interior (d-1)-face.
  bool check_orientation = false;
};

class SimplicialComplex {
 public:
  int dimension() const { return dim_; }
  std::size_t size(int k) const;

  /// Sorted vertex labels of `s`.
  std::span<const int> vertices(SimplexId s) const;

  /// Looks up a simplex from its vertex labels (any order). Returns
  /// index -1 when absent.
  SimplexId find(std::span<const int> labels) const;
  bool contains(std::span<const int> labels) const { return find(labels).index >= 0; }

  /// Index of the 0-simplex carrying `label`, or -1.
  int vertex_index(int label) const;

  /// Signed (k-1)-faces of a k-simplex, one per removed vertex position.
  std::span<const Incidence> boundary(SimplexId s) const;
  /// Indices of the (k+1)-simplexes having `s` as a facet.
  std::span<const int> cofacets(SimplexId s) const;

  std::vector<SimplexId> faces(SimplexId s, int k) const;
  std::vector<SimplexId> cofaces(SimplexId s, int k) const;

  /// True if `face` is a (not necessarily proper) face of `cell`.
  bool is_face(SimplexId face, SimplexId cell) const;

  /// Signed incidence table of the boundary map C_k -> C_{k-1}; rows index
  /// (k-1)-simplexes, columns k-simplexes.
  Eigen::SparseMatrix<int> boundary_matrix(int k) const;

  bool on_boundary(SimplexId s) const { return boundary_flag_[s.dim][s.index] != 0; }
  std::size_t boundary_size(int k) const;

  /// Orientation (+1/-1) of each top cell relative to its sorted tuple, as
  /// given by the input vertex order.
  std::span<const int> top_orientation() const { return orientation_; }
  bool orientable() const { return orientable_; }

  int euler_characteristic() const;

  /// Every (d-2)-simplex with its ordered star. Empty for d < 2.
  std::vector<Hinge> hinges() const;
  Hinge hinge(int index) const;

  /// Top cells incident on a vertex index.
  std::span<const int> vertex_star(int vertex_index) const { return vertex_star_[vertex_index]; }

 private:
  friend SimplicialComplex build_complex(int, const std::vector<std::vector<int>>&, const BuildOptions&);

  struct TupleHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  int dim_ = 0;
  std::vector<std::vector<int>> verts_;  // per k: flattened (k+1)-tuples
  std::vector<std::unordered_map<std::vector<int>, int, TupleHash>> lookup_;
  std::vector<std::vector<Incidence>> boundary_;   // per k >= 1: flattened (k+1) entries
  std::vector<std::vector<std::vector<int>>> cofacets_;
  std::vector<std::vector<char>> boundary_flag_;
  std::vector<std::vector<int>> vertex_star_;
  std::vector<int> orientation_;
  bool orientable_ = true;
};

/// Builds every skeleton of the complex spanned by `cells`, each a tuple of
/// d+1 distinct vertex labels. Top cells keep their input order; lower
/// skeletons are in lexicographic order of their sorted tuples.
SimplicialComplex build_complex(int dimension, const std::vector<std::vector<int>>& cells,
                                const BuildOptions& options = {});

/// Binomial coefficient for the small arguments used throughout.
constexpr double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace pfcurv
