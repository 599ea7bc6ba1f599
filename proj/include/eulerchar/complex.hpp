#pragma once

// Simplicial complexes given by their facets, and the structural operations
// the divide-and-conquer algorithms are assembled from.

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "eulerchar/detail/row_matrix.hpp"
#include "eulerchar/face.hpp"

namespace eulerchar {

/// A simplicial complex on the vertex universe {0, ..., n-1}, stored as its
/// facets. Facets form an antichain without duplicates. Zero facets is the
/// void complex; the single facet {} is the complex {{}}. Vertices that lie
/// in no facet are allowed and are part of the vertex set.
///
/// Values are immutable once built.
class Complex {
public:
  /// Void complex on zero vertices.
  Complex() = default;

  /// Takes ownership of a facet matrix. If `antichain` is false the rows are
  /// reduced to their maximal elements first.
  explicit Complex(detail::RowMatrix facets, bool antichain = false);

  static Complex void_complex(std::size_t universe) { return Complex(detail::RowMatrix(universe, 0), true); }
  /// pows(V): the full simplex on all vertices.
  static Complex simplex(std::size_t universe);

  std::size_t universe() const { return mat_.cols(); }
  std::size_t num_facets() const { return mat_.rows(); }
  bool is_void() const { return mat_.rows() == 0; }
  /// True for {{}}: one facet, and it is empty.
  bool is_empty_face_only() const;

  Face facet(std::size_t i) const { return Face::from_words(universe(), mat_.row(i)); }
  std::vector<Face> facets() const;
  std::span<const detail::Word> facet_words(std::size_t i) const { return mat_.row(i); }
  const detail::RowMatrix& matrix() const { return mat_; }

  /// Whether sigma is a face (a subset of some facet).
  bool contains(const Face& sigma) const;
  bool has_facet(const Face& sigma) const;
  /// Vertices lying in at least one facet.
  Face used_vertices() const;

  /// Same complex with facets sorted lexicographically.
  Complex canonical() const;

  /// Set equality of facets over the same universe; facet order is ignored.
  friend bool operator==(const Complex& a, const Complex& b);

  friend std::ostream& operator<<(std::ostream& os, const Complex& c);

private:
  detail::RowMatrix mat_;
};

/// Builds a complex from arbitrary faces; keeps the maximal ones.
Complex make_complex(std::size_t universe, const std::vector<std::vector<std::size_t>>& faces);
Complex make_complex(std::size_t universe, const std::vector<Face>& faces);

struct Restriction {
  Complex complex;
  /// old vertex index -> new index, or -1 for removed vertices.
  std::vector<long> index_map;
};

/// Delta minus tau: faces disjoint from tau, on the vertex set V \ tau
/// (renumbered in ascending order).
Restriction restrict(const Complex& delta, const Face& tau);

/// Delta union pows(sigma).
Complex add_facet_closure(const Complex& delta, const Face& sigma);

/// Lowest vertex contained in every facet, if any.
std::optional<std::size_t> is_cone(const Complex& delta);

/// sigma and tau cover the whole universe.
bool codisjoint(const Face& sigma, const Face& tau);

/// Nerve on the facets: nerve vertex i is facet i.
Complex nerve(const Complex& delta);

/// Join with Delta's vertices first and Gamma's shifted by Delta's universe.
Complex join(const Complex& delta, const Complex& gamma);

/// Union of complexes on disjoint vertex sets, universes concatenated.
Complex disjoint_union(const Complex& delta, const Complex& gamma);

/// Renames vertex v to perm[v]; perm must be a permutation of the universe.
Complex relabel(const Complex& delta, std::span<const std::size_t> perm);

struct IndependentPair {
  Face a;
  Face b;
};

/// Finds a vertex bipartition (A, B) such that Psi is the join of its parts.
/// Facet complements are grouped into connected components by shared
/// vertices; A is the component holding the lowest such vertex (plus any
/// vertex lying in every facet), B the rest. Requires at least two facets and
/// no unused vertices.
std::optional<IndependentPair> find_independent_pair(const Complex& psi);

/// The two factors for an independent pair: clo(F_A) minus comp(A), and
/// clo(F_B) minus comp(B), each on its own renumbered vertex set.
std::pair<Complex, Complex> split_independent(const Complex& psi, const IndependentPair& pair);

}  // namespace eulerchar
