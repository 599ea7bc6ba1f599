#include "eulerchar/oracle.hpp"

#include <bit>
#include <string>

#include "eulerchar/errors.hpp"

namespace eulerchar::oracle {

using detail::Word;

std::uint64_t FVector::total() const {
  std::uint64_t t = 0;
  for (auto f : entries) t += f;
  return t;
}

EulerValue FVector::alternating_sum() const {
  EulerValue acc(0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const EulerValue f(static_cast<std::int64_t>(entries[i]));
    acc = (i % 2 == 0) ? acc - f : acc + f;
  }
  return acc;
}

namespace {

// membership[s] != 0 iff the vertex set with bitmask s is a face.
std::vector<std::uint8_t> face_table(const Complex& delta) {
  const std::size_t n = delta.universe();
  if (n > kMaxSubsetVertices)
    throw CapacityError("subset enumeration limited to " + std::to_string(kMaxSubsetVertices) +
                        " vertices, got " + std::to_string(n));
  std::vector<std::uint8_t> face(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < delta.num_facets(); ++i) {
    const auto w = delta.facet_words(i);
    face[w.empty() ? 0 : static_cast<std::size_t>(w[0])] = 1;
  }
  // Down-closure: a set is a face if adding some vertex gives a face.
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t bit = std::size_t{1} << v;
    for (std::size_t s = 0; s < face.size(); ++s)
      if (!(s & bit) && face[s | bit]) face[s] = 1;
  }
  return face;
}

}  // namespace

EulerValue euler_by_subsets(const Complex& delta) {
  const auto face = face_table(delta);
  std::int64_t acc = 0;
  for (std::size_t s = 0; s < face.size(); ++s)
    if (face[s]) acc += (std::popcount(s) % 2 == 0) ? -1 : 1;
  return EulerValue(acc);
}

EulerValue euler_by_inclusion_exclusion(const Complex& delta) {
  const std::size_t m = delta.num_facets();
  if (m > kMaxInclusionExclusionFacets)
    throw CapacityError("inclusion-exclusion limited to " + std::to_string(kMaxInclusionExclusionFacets) +
                        " facets, got " + std::to_string(m));
  if (m == 0) return EulerValue(0);
  const std::size_t stride = delta.matrix().stride();
  // Depth-first over facet subsets, carrying the running intersection.
  std::vector<Word> stack((m + 1) * stride, ~Word{0});
  std::int64_t acc = 0;
  auto rec = [&](auto&& self, std::size_t next, std::size_t depth, std::size_t chosen) -> void {
    for (std::size_t i = next; i < m; ++i) {
      const Word* parent = stack.data() + depth * stride;
      Word* cur = stack.data() + (depth + 1) * stride;
      const auto f = delta.facet_words(i);
      bool empty = true;
      for (std::size_t w = 0; w < stride; ++w) {
        cur[w] = parent[w] & f[w];
        empty = empty && cur[w] == 0;
      }
      if (empty) acc += ((chosen + 1) % 2 == 0) ? 1 : -1;
      self(self, i + 1, depth + 1, chosen + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return EulerValue(acc);
}

FVector f_vector(const Complex& delta, std::uint64_t face_limit) {
  const std::size_t n = delta.universe();
  FVector fv;
  fv.entries.assign(n + 1, 0);
  if (delta.is_void()) return fv;

  if (n <= kMaxSubsetVertices) {
    const auto face = face_table(delta);
    for (std::size_t s = 0; s < face.size(); ++s)
      if (face[s]) ++fv.entries[static_cast<std::size_t>(std::popcount(s))];
    return fv;
  }

  // Faces are generated in ascending vertex order; sigma + v is a face iff
  // some facet contains both sigma and v, tracked as a set of facets.
  const detail::RowMatrix cols = detail::transpose(delta.matrix());
  const std::size_t stride = cols.stride();
  std::vector<Word> stack((n + 1) * stride, 0);
  for (std::size_t i = 0; i < delta.num_facets(); ++i) detail::set_bit({stack.data(), stride}, i);
  std::uint64_t seen = 1;
  fv.entries[0] = 1;
  auto rec = [&](auto&& self, std::size_t next, std::size_t depth) -> void {
    const Word* parent = stack.data() + depth * stride;
    Word* cur = stack.data() + (depth + 1) * stride;
    for (std::size_t v = next; v < n; ++v) {
      const auto col = cols.row(v);
      bool any = false;
      for (std::size_t w = 0; w < stride; ++w) {
        cur[w] = parent[w] & col[w];
        any = any || cur[w] != 0;
      }
      if (!any) continue;
      if (++seen > face_limit)
        throw CapacityError("face enumeration exceeded limit of " + std::to_string(face_limit) + " faces");
      ++fv.entries[depth + 1];
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return fv;
}

}  // namespace eulerchar::oracle
