#include "eulerchar/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eulerchar/errors.hpp"

namespace eulerchar {

using detail::RowMatrix;
using detail::Word;

namespace {

void check_universe(const Complex& delta, const Face& f, const char* what) {
  if (f.universe() != delta.universe())
    throw InputError(std::string(what) + ": face universe " + std::to_string(f.universe()) +
                     " does not match complex universe " + std::to_string(delta.universe()));
}

// Copies the bits of src into dst starting at bit `offset`.
void place_bits(std::span<Word> dst, std::span<const Word> src, std::size_t offset) {
  detail::for_each_bit(src, [&](std::size_t v) { detail::set_bit(dst, v + offset); });
}

void place_full(std::span<Word> dst, std::size_t count, std::size_t offset) {
  for (std::size_t v = 0; v < count; ++v) detail::set_bit(dst, v + offset);
}

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Complex::Complex(RowMatrix facets, bool antichain) : mat_(std::move(facets)) {
  if (!antichain) detail::keep_maximal(mat_);
}

Complex Complex::simplex(std::size_t universe) {
  RowMatrix m(universe, 0);
  m.push_row(Face::full(universe).words());
  return Complex(std::move(m), true);
}

bool Complex::is_empty_face_only() const {
  return mat_.rows() == 1 && detail::is_zero(mat_.row(0));
}

std::vector<Face> Complex::facets() const {
  std::vector<Face> out;
  out.reserve(num_facets());
  for (std::size_t i = 0; i < num_facets(); ++i) out.push_back(facet(i));
  return out;
}

bool Complex::contains(const Face& sigma) const {
  check_universe(*this, sigma, "contains");
  return detail::contained_in_some_row(mat_, sigma.words());
}

bool Complex::has_facet(const Face& sigma) const {
  check_universe(*this, sigma, "has_facet");
  return detail::find_row(mat_, sigma.words()) != detail::npos;
}

Face Complex::used_vertices() const { return Face::from_words(universe(), detail::row_union(mat_)); }

Complex Complex::canonical() const {
  std::vector<Face> fs = facets();
  std::sort(fs.begin(), fs.end());
  RowMatrix m(universe(), 0);
  m.reserve_rows(fs.size());
  for (const Face& f : fs) m.push_row(f.words());
  return Complex(std::move(m), true);
}

bool operator==(const Complex& a, const Complex& b) {
  if (a.universe() != b.universe() || a.num_facets() != b.num_facets()) return false;
  return a.canonical().mat_ == b.canonical().mat_;
}

std::ostream& operator<<(std::ostream& os, const Complex& c) {
  os << '(' << c.universe() << ';';
  for (std::size_t i = 0; i < c.num_facets(); ++i) os << (i ? ", " : " ") << c.facet(i);
  return os << ')';
}

Complex make_complex(std::size_t universe, const std::vector<std::vector<std::size_t>>& faces) {
  RowMatrix m(universe, 0);
  m.reserve_rows(faces.size());
  for (const auto& f : faces) {
    auto row = m.push_zero_row();
    for (std::size_t v : f) {
      if (v >= universe)
        throw InputError("vertex index " + std::to_string(v) + " out of range for universe of size " +
                         std::to_string(universe));
      detail::set_bit(row, v);
    }
  }
  return Complex(std::move(m));
}

Complex make_complex(std::size_t universe, const std::vector<Face>& faces) {
  RowMatrix m(universe, 0);
  m.reserve_rows(faces.size());
  for (const Face& f : faces) {
    if (f.universe() != universe) throw InputError("make_complex: face over a different universe");
    m.push_row(f.words());
  }
  return Complex(std::move(m));
}

Restriction restrict(const Complex& delta, const Face& tau) {
  check_universe(delta, tau, "restrict");
  const Face keep = tau.complement();
  Restriction out;
  out.index_map.assign(delta.universe(), -1);
  long next = 0;
  for (std::size_t v = 0; v < delta.universe(); ++v)
    if (!tau.contains(v)) out.index_map[v] = next++;

  const RowMatrix& src = delta.matrix();
  std::vector<char> touched(src.rows(), 0);
  for (std::size_t i = 0; i < src.rows(); ++i) touched[i] = detail::intersects(src.row(i), tau.words());
  RowMatrix mat = detail::compact_columns(src, keep.words());
  // A row disjoint from tau is unchanged and cannot sit inside another row.
  detail::keep_maximal(mat, touched);
  out.complex = Complex(std::move(mat), true);
  return out;
}

Complex add_facet_closure(const Complex& delta, const Face& sigma) {
  check_universe(delta, sigma, "add_facet_closure");
  if (delta.contains(sigma)) return delta;
  RowMatrix mat = delta.matrix();
  std::vector<char> keep(mat.rows(), 1);
  for (std::size_t i = 0; i < mat.rows(); ++i) keep[i] = !detail::is_subset(mat.row(i), sigma.words());
  mat.keep_rows(keep);
  mat.push_row(sigma.words());
  return Complex(std::move(mat), true);
}

std::optional<std::size_t> is_cone(const Complex& delta) {
  if (delta.is_void()) return std::nullopt;
  const auto common = detail::row_intersection(delta.matrix());
  const std::size_t v = detail::lowest_bit(common);
  if (v == detail::npos) return std::nullopt;
  return v;
}

bool codisjoint(const Face& sigma, const Face& tau) {
  return (sigma | tau) == Face::full(sigma.universe());
}

Complex nerve(const Complex& delta) {
  if (delta.is_void()) throw InputError("nerve of the void complex is undefined");
  const RowMatrix& src = delta.matrix();
  RowMatrix by_vertex = detail::transpose(src);
  RowMatrix mat(src.rows(), 0);
  for (std::size_t v = 0; v < by_vertex.rows(); ++v)
    if (!detail::is_zero(by_vertex.row(v))) mat.push_row(by_vertex.row(v));
  if (mat.rows() == 0) mat.push_zero_row();
  detail::keep_maximal(mat);
  return Complex(std::move(mat), true);
}

Complex join(const Complex& delta, const Complex& gamma) {
  if (delta.is_void() || gamma.is_void()) throw InputError("join requires non-void operands");
  const std::size_t nd = delta.universe();
  const std::size_t ng = gamma.universe();
  RowMatrix mat(nd + ng, 0);
  mat.reserve_rows(delta.num_facets() + gamma.num_facets());
  for (std::size_t i = 0; i < delta.num_facets(); ++i) {
    auto row = mat.push_zero_row();
    place_bits(row, delta.facet_words(i), 0);
    place_full(row, ng, nd);
  }
  for (std::size_t i = 0; i < gamma.num_facets(); ++i) {
    auto row = mat.push_zero_row();
    place_full(row, nd, 0);
    place_bits(row, gamma.facet_words(i), nd);
  }
  return Complex(std::move(mat));
}

Complex disjoint_union(const Complex& delta, const Complex& gamma) {
  const std::size_t nd = delta.universe();
  RowMatrix mat(nd + gamma.universe(), 0);
  mat.reserve_rows(delta.num_facets() + gamma.num_facets());
  for (std::size_t i = 0; i < delta.num_facets(); ++i) place_bits(mat.push_zero_row(), delta.facet_words(i), 0);
  for (std::size_t i = 0; i < gamma.num_facets(); ++i) place_bits(mat.push_zero_row(), gamma.facet_words(i), nd);
  return Complex(std::move(mat));
}

Complex relabel(const Complex& delta, std::span<const std::size_t> perm) {
  const std::size_t n = delta.universe();
  if (perm.size() != n) throw InputError("relabel: permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw InputError("relabel: not a permutation");
    seen[p] = 1;
  }
  RowMatrix mat(n, 0);
  mat.reserve_rows(delta.num_facets());
  for (std::size_t i = 0; i < delta.num_facets(); ++i) {
    auto row = mat.push_zero_row();
    detail::for_each_bit(delta.facet_words(i), [&](std::size_t v) { detail::set_bit(row, perm[v]); });
  }
  return Complex(std::move(mat), true);
}

std::optional<IndependentPair> find_independent_pair(const Complex& psi) {
  const std::size_t n = psi.universe();
  const std::size_t m = psi.num_facets();
  if (m < 2) return std::nullopt;
  const RowMatrix comps = detail::complement_rows(psi.matrix());
  DisjointSets sets(n);
  std::vector<char> in_complement(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = comps.row(i);
    const std::size_t first = detail::lowest_bit(c);
    if (first == detail::npos) return std::nullopt;  // facet = V
    detail::for_each_bit(c, [&](std::size_t v) {
      in_complement[v] = 1;
      sets.unite(first, v);
    });
  }
  std::size_t anchor = detail::npos;
  bool second_component = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_complement[v]) continue;
    if (anchor == detail::npos)
      anchor = sets.find(v);
    else if (sets.find(v) != anchor)
      second_component = true;
  }
  if (!second_component) return std::nullopt;

  IndependentPair pair{Face(n), Face(n)};
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_complement[v] || sets.find(v) == anchor)
      pair.a.insert(v);
    else
      pair.b.insert(v);
  }
  return pair;
}

std::pair<Complex, Complex> split_independent(const Complex& psi, const IndependentPair& pair) {
  check_universe(psi, pair.a, "split_independent");
  check_universe(psi, pair.b, "split_independent");
  if (pair.a.intersects(pair.b) || (pair.a | pair.b) != Face::full(psi.universe()))
    throw InputError("split_independent: (A, B) is not a partition of the vertices");
  // Factor on one side: facets containing every vertex of the other side,
  // restricted to this side.
  auto part = [&](const Face& other) {
    RowMatrix sel(psi.universe(), 0);
    for (std::size_t i = 0; i < psi.num_facets(); ++i)
      if (detail::is_subset(other.words(), psi.facet_words(i))) sel.push_row(psi.facet_words(i));
    return restrict(Complex(std::move(sel), true), other).complex;
  };
  return {part(pair.b), part(pair.a)};
}

}  // namespace eulerchar
