#include <doctest.h>

#include <random>
#include <sstream>

#include "eulerchar/complex.hpp"
#include "eulerchar/errors.hpp"
#include "support.hpp"

using namespace eulerchar;
using testing::chi;
using testing::cx;
using testing::face;

TEST_CASE("make_complex keeps maximal faces") {
  CHECK(cx(3, {{0, 1}, {0}, {0, 1}}) == cx(3, {{0, 1}}));
  CHECK(cx(3, {{0, 1}, {0}, {0, 1}}).num_facets() == 1);
  CHECK(cx(3, {}).is_void());
  CHECK(cx(3, {}).universe() == 3);
  CHECK(cx(2, {{}, {0}}) == cx(2, {{0}}));
  CHECK(cx(2, {{}}).is_empty_face_only());
  CHECK_THROWS_AS(cx(2, {{2}}), InputError);
}

TEST_CASE("make_complex ignores input order") {
  CHECK(cx(4, {{0, 1}, {2, 3}, {1}}) == cx(4, {{1}, {2, 3}, {0, 1}}));
  CHECK(cx(4, {{0, 1}}) != cx(4, {{0, 2}}));
  CHECK(cx(4, {{0, 1}}) != cx(5, {{0, 1}}));
}

TEST_CASE("normalization is idempotent") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& d : testing::all_complexes(n)) {
      CHECK(make_complex(n, d.facets()) == d);
      CHECK(Complex(d.matrix()) == d);
    }
}

TEST_CASE("complex counts match the Dedekind numbers") {
  const std::size_t expected[] = {2, 3, 6, 20, 168};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(testing::all_complexes(n).size() == expected[n]);
}

TEST_CASE("membership") {
  const auto d = cx(4, {{0, 1, 2}, {2, 3}});
  CHECK(d.contains(face(4, {})));
  CHECK(d.contains(face(4, {0, 2})));
  CHECK_FALSE(d.contains(face(4, {1, 3})));
  CHECK(d.has_facet(face(4, {2, 3})));
  CHECK_FALSE(d.has_facet(face(4, {2})));
  CHECK(d.used_vertices() == face(4, {0, 1, 2, 3}));
  CHECK(cx(4, {{1}}).used_vertices() == face(4, {1}));
  CHECK_FALSE(Complex::void_complex(2).contains(face(2, {})));
}

TEST_CASE("printing") {
  std::ostringstream os;
  os << cx(3, {{1, 2}, {0}}) << ' ' << cx(1, {{}}) << ' ' << Complex::void_complex(2);
  CHECK(os.str() == "(3; {1,2}, {0}) (1; {}) (2;)");
}

TEST_CASE("restrict") {
  auto r = restrict(cx(3, {{0, 1}, {1, 2}}), face(3, {2}));
  CHECK(r.complex == cx(2, {{0, 1}}));
  CHECK(r.index_map == std::vector<long>{0, 1, -1});

  CHECK(restrict(cx(3, {{0, 1}}), face(3, {0, 1})).complex == cx(1, {{}}));

  // Faces of the triangle boundary avoiding 0: {1}, {2}, {1,2}.
  r = restrict(cx(3, {{0, 1}, {0, 2}, {1, 2}}), face(3, {0}));
  CHECK(r.complex == cx(2, {{0, 1}}));
  CHECK(r.index_map == std::vector<long>{-1, 0, 1});

  CHECK(restrict(Complex::void_complex(3), face(3, {1})).complex == Complex::void_complex(2));
}

TEST_CASE("add_facet_closure") {
  CHECK(add_facet_closure(cx(3, {{0, 1}, {2}}), face(3, {0, 2})) == cx(3, {{0, 1}, {0, 2}}));
  CHECK(add_facet_closure(cx(3, {{0, 1, 2}}), face(3, {0})) == cx(3, {{0, 1, 2}}));
  CHECK(add_facet_closure(Complex::void_complex(2), face(2, {})) == cx(2, {{}}));
}

TEST_CASE("is_cone") {
  CHECK(is_cone(cx(3, {{0, 1}, {0, 2}})) == 0u);
  CHECK(is_cone(cx(3, {{1, 2}, {0, 2}})) == 2u);
  CHECK_FALSE(is_cone(cx(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(is_cone(cx(1, {{}})));
  CHECK_FALSE(is_cone(Complex::void_complex(2)));
}

TEST_CASE("codisjoint") {
  CHECK(codisjoint(face(4, {0, 1, 2}), face(4, {1, 2, 3})));
  CHECK_FALSE(codisjoint(face(3, {0}), face(3, {1})));
  CHECK(codisjoint(face(2, {0, 1}), face(2, {})));
}

TEST_CASE("nerve") {
  CHECK(nerve(cx(3, {{0, 1}, {1, 2}, {0, 2}})) == cx(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(nerve(cx(2, {{0}})) == cx(1, {{0}}));
  CHECK(nerve(cx(1, {{}})) == cx(1, {{}}));
  CHECK(nerve(cx(3, {{}})) == cx(1, {{}}));
  CHECK_THROWS_AS(nerve(Complex::void_complex(3)), InputError);
  // Facet 0 = {0,1}, facet 1 = {1,2}: F_0 = {0}, F_1 = {0,1}, F_2 = {1}.
  CHECK(nerve(cx(3, {{0, 1}, {1, 2}})) == cx(2, {{0, 1}}));
}

TEST_CASE("nerve preserves the Euler characteristic") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& d : testing::all_complexes(n)) {
      if (d.is_void()) continue;
      CHECK(chi(nerve(d)) == chi(d));
    }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto d = testing::random_small_complex(rng, 10, 12);
    CHECK(chi(nerve(d)) == chi(d));
  }
}

TEST_CASE("join") {
  CHECK(join(cx(2, {{0}, {1}}), cx(3, {{0}, {1}, {2}})) ==
        cx(5, {{0, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}}));
  CHECK(join(cx(1, {{}}), cx(1, {{}})) == cx(2, {{0}, {1}}));
  CHECK(join(cx(1, {{0}}), cx(1, {{0}})) == cx(2, {{0, 1}}));
  CHECK_THROWS_AS(join(Complex::void_complex(1), cx(1, {{0}})), InputError);
}

TEST_CASE("join multiplies Euler characteristics") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto d = testing::random_small_complex(rng, 6, 6);
    const auto g = testing::random_small_complex(rng, 6, 6);
    CHECK(chi(join(d, g)) == chi(d) * chi(g));
  }
}

TEST_CASE("disjoint union adds Euler characteristics plus one") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto d = testing::random_small_complex(rng, 6, 6);
    const auto g = testing::random_small_complex(rng, 6, 6);
    CHECK(chi(disjoint_union(d, g)) == chi(d) + chi(g) + 1);
  }
}

TEST_CASE("relabel") {
  const std::vector<std::size_t> perm{2, 0, 1};
  CHECK(relabel(cx(3, {{0, 1}, {2}}), perm) == cx(3, {{2, 0}, {1}}));
}

// The void complex is excluded: its only candidate pivot is the empty set.
TEST_CASE("split identity for every valid pivot") {
  auto check = [](const Complex& d) {
    if (d.is_void()) return;
    const std::size_t n = d.universe();
    const auto full = Face::full(n);
    for (const auto& sigma : testing::all_faces(n)) {
      if (sigma == full || d.contains(sigma)) continue;
      const auto left = restrict(d, sigma.complement()).complex;
      const auto right = add_facet_closure(d, sigma);
      REQUIRE(chi(d) == chi(left) + chi(right));
    }
  };
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& d : testing::all_complexes(n)) check(d);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto d = testing::random_small_complex(rng, 10, 12);
    std::uniform_int_distribution<std::size_t> coin(0, 1);
    Face sigma(d.universe());
    for (std::size_t v = 0; v < d.universe(); ++v)
      if (coin(rng)) sigma.insert(v);
    if (d.is_void() || sigma == Face::full(d.universe()) || d.contains(sigma)) continue;
    CHECK(chi(d) == chi(restrict(d, sigma.complement()).complex) + chi(add_facet_closure(d, sigma)));
  }
}

TEST_CASE("independent pair of a join") {
  const auto psi = join(cx(2, {{0}, {1}}), cx(3, {{0}, {1}, {2}}));
  const auto pair = find_independent_pair(psi);
  REQUIRE(pair);
  CHECK((pair->a | pair->b) == Face::full(5));
  CHECK_FALSE(pair->a.intersects(pair->b));
  const auto [x, y] = split_independent(psi, *pair);
  CHECK(chi(x) * chi(y) == chi(psi));
  CHECK(join(x, y).num_facets() == psi.num_facets());
}

TEST_CASE("independent pair edge cases") {
  CHECK_FALSE(find_independent_pair(cx(2, {{0, 1}})));
  CHECK_FALSE(find_independent_pair(cx(3, {{0, 1}, {0, 2}, {1, 2, 0}})));
  // Complements {0,2}, {1,2} overlap: one component.
  CHECK_FALSE(find_independent_pair(cx(3, {{1}, {0}})));
  // Triangle boundary: three singleton complements, each its own component.
  const auto omega = cx(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto pair = find_independent_pair(omega);
  REQUIRE(pair);
  const auto [x, y] = split_independent(omega, *pair);
  CHECK(chi(x) * chi(y) == chi(omega));
}

namespace {

// Joins the parts back and maps the result into psi's vertex order.
Complex rejoin(const Complex& psi, const IndependentPair& pair, const Complex& x, const Complex& y) {
  const auto joined = join(x, y);
  std::vector<std::size_t> perm;
  for (auto v : pair.a.members()) perm.push_back(v);
  for (auto v : pair.b.members()) perm.push_back(v);
  (void)psi;
  return relabel(joined, perm);
}

}  // namespace

TEST_CASE("independence splits rebuild the complex exactly") {
  std::size_t splits = 0;
  auto check = [&](const Complex& psi) {
    if (psi.num_facets() < 2 || psi.used_vertices() != Face::full(psi.universe())) return;
    const auto pair = find_independent_pair(psi);
    if (!pair) return;
    ++splits;
    const auto [x, y] = split_independent(psi, *pair);
    REQUIRE(rejoin(psi, *pair, x, y) == psi);
  };
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& d : testing::all_complexes(n)) check(d);
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const auto d = testing::random_small_complex(rng, 4, 4);
    const auto g = testing::random_small_complex(rng, 4, 4);
    if (d.is_void() || g.is_void()) continue;
    const auto psi = join(d, g);
    const auto used = psi.used_vertices();
    check(restrict(psi, used.complement()).complex);
  }
  CHECK(splits > 100);
}
