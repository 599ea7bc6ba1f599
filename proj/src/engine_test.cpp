#include <doctest.h>

#include <random>

#include "eulerchar/engine.hpp"
#include "eulerchar/errors.hpp"
#include "eulerchar/generators.hpp"
#include "support.hpp"

using namespace eulerchar;
using testing::chi;
using testing::cx;
using testing::face;

namespace {

std::vector<EngineConfig> all_configs() {
  std::vector<EngineConfig> out;
  for (auto alg : {Algorithm::Bcrt, Algorithm::Dbms})
    for (auto p : {PivotStrategy::PopVar, PivotStrategy::RareVar, PivotStrategy::Random, PivotStrategy::PopGcd,
                   PivotStrategy::MaxSupp, PivotStrategy::MinSupp, PivotStrategy::Rarest, PivotStrategy::RareMax})
      for (bool nerve : {true, false}) {
        if (!strategy_supported(alg, p)) continue;
        EngineConfig cfg;
        cfg.algorithm = alg;
        cfg.pivot = p;
        cfg.use_nerve = nerve;
        cfg.seed = 5;
        cfg.verify_measures = true;
        out.push_back(cfg);
      }
  return out;
}

}  // namespace

TEST_CASE("strategy names") {
  CHECK(to_string(PivotStrategy::RareMax) == "raremax");
  CHECK(parse_pivot("popgcd") == PivotStrategy::PopGcd);
  CHECK_FALSE(parse_pivot("bogus"));
  CHECK(parse_algorithm("bcrt") == Algorithm::Bcrt);
  CHECK(to_string(Algorithm::Dbms) == "dbms");
  CHECK(strategy_supported(Algorithm::Bcrt, PivotStrategy::PopGcd));
  CHECK_FALSE(strategy_supported(Algorithm::Bcrt, PivotStrategy::RareMax));
  CHECK_FALSE(strategy_supported(Algorithm::Dbms, PivotStrategy::PopGcd));
  CHECK(default_pivot(Algorithm::Bcrt) == PivotStrategy::PopVar);
  CHECK(default_pivot(Algorithm::Dbms) == PivotStrategy::RareMax);
  CHECK(all_configs().size() == 22);
}

TEST_CASE("mismatched strategy is rejected") {
  EngineConfig cfg;
  cfg.algorithm = Algorithm::Bcrt;
  cfg.pivot = PivotStrategy::RareMax;
  CHECK_THROWS_AS(euler(cx(2, {{0}, {1}}), cfg), InputError);
}

TEST_CASE("simplify examples") {
  auto step = simplify_step(cx(3, {{0, 1}, {0, 2}, {1, 2}}));
  REQUIRE(step);
  CHECK(step->complex == cx(2, {{0}, {1}}));
  CHECK(step->sign == -1);

  step = simplify_step(cx(3, {{0, 1}, {2}}));
  REQUIRE(step);
  CHECK(step->complex == cx(1, {{}}));
  CHECK(step->sign == -1);

  step = simplify_step(cx(3, {{0, 1}}));
  REQUIRE(step);
  CHECK(step->complex == cx(2, {{0, 1}}));
  CHECK(step->sign == 1);

  CHECK_FALSE(simplify_step(cx(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
}

TEST_CASE("simplify preserves chi up to sign and reaches a fixpoint") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& d : testing::all_complexes(n)) {
      const auto s = simplify(d);
      REQUIRE(chi(d) == s.sign * chi(s.complex));
      REQUIRE_FALSE(simplify_step(s.complex));
    }
}

TEST_CASE("base cases") {
  CHECK(try_base_case(cx(4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}})) == EulerValue(1));
  CHECK(try_base_case(cx(3, {{0, 1}, {2}})) == EulerValue(1));
  CHECK(try_base_case(cx(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == EulerValue(-1));
  CHECK(try_base_case(cx(1, {{}})) == EulerValue(-1));
  CHECK(try_base_case(Complex::void_complex(2)) == EulerValue(0));
  CHECK(try_base_case(cx(3, {{0, 1}, {0, 2}})) == EulerValue(0));
  CHECK(try_base_case(cx(3, {{0}, {1}, {2}})) == EulerValue(2));
}

TEST_CASE("base cases agree with the oracle on simplified complexes") {
  std::size_t hits = 0;
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& d : testing::all_complexes(n)) {
      const auto s = simplify(d).complex;
      if (auto v = try_base_case(s)) {
        ++hits;
        REQUIRE(v->value() == chi(s));
      }
    }
  CHECK(hits > 100);
}

TEST_CASE("BCRT pivot examples") {
  PivotRng rng(0);
  CHECK(select_pivot_bcrt(cx(4, {{0, 1}, {2, 3}}), PivotStrategy::PopVar, rng) == face(4, {1, 2, 3}));
  CHECK(select_pivot_bcrt(cx(3, {{0, 1}, {2}}), PivotStrategy::RareVar, rng) == face(3, {1, 2}));
  const auto d = cx(3, {{0, 1}, {2}});
  PivotRng r1(0), r2(0);
  const auto p1 = select_pivot_bcrt(d, PivotStrategy::Random, r1);
  CHECK(p1 == select_pivot_bcrt(d, PivotStrategy::Random, r2));
  CHECK_FALSE(d.contains(p1));
  CHECK(p1 != Face::full(3));
}

TEST_CASE("DBMS pivot examples") {
  const auto d = cx(4, {{0, 1, 2}, {0, 3}, {1, 3}});
  auto index_of = [&](std::size_t i) { return d.facet(i); };
  PivotRng rng(0);
  CHECK(index_of(select_pivot_dbms(d, PivotStrategy::MaxSupp, rng)) == face(4, {0, 3}));
  CHECK(index_of(select_pivot_dbms(d, PivotStrategy::MinSupp, rng)) == face(4, {0, 1, 2}));
  CHECK(index_of(select_pivot_dbms(d, PivotStrategy::RareVar, rng)) == face(4, {1, 3}));
}

TEST_CASE("split examples") {
  auto [b1, b2] = split_bcrt(cx(3, {{0, 1}, {2}}), face(3, {0, 2}));
  CHECK(b1 == cx(2, {{0}, {1}}));
  CHECK(b2 == cx(3, {{0, 1}, {0, 2}}));
  CHECK(chi(b1) + chi(b2) == 1);

  auto [c1, c2] = split_bcrt(cx(2, {{0}}), face(2, {1}));
  CHECK(chi(c1) + chi(c2) == 0);
  CHECK_THROWS_AS(split_bcrt(cx(2, {{0}}), face(2, {0})), InternalError);
  CHECK_THROWS_AS(split_bcrt(cx(2, {{0}}), Face::full(2)), InternalError);

  const auto d = cx(3, {{0, 1}, {1, 2}});
  std::size_t f = d.facet(0) == face(3, {1, 2}) ? 0 : 1;
  auto [d1, d2] = split_dbms(d, f);
  CHECK(d1 == cx(3, {{0, 1}}));
  CHECK(chi(d1) - chi(d2) == 0);

  const auto omega = cx(3, {{0, 1}, {0, 2}, {1, 2}});
  for (std::size_t i = 0; i < 3; ++i) {
    auto [o1, o2] = split_dbms(omega, i);
    CHECK(chi(o1) - chi(o2) == -1);
  }
  CHECK_THROWS_AS(split_dbms(cx(2, {{0}}), 0), InternalError);
}

TEST_CASE("split identities hold exhaustively") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& d : testing::all_complexes(n)) {
      for (std::size_t f = 0; d.num_facets() >= 2 && f < d.num_facets(); ++f) {
        auto [x, y] = split_dbms(d, f);
        REQUIRE(chi(d) == chi(x) - chi(y));
      }
      if (d.is_void()) continue;
      for (const auto& sigma : testing::all_faces(n)) {
        if (sigma == Face::full(n) || d.contains(sigma)) continue;
        auto [x, y] = split_bcrt(d, sigma);
        REQUIRE(chi(d) == chi(x) + chi(y));
      }
    }
}

TEST_CASE("pivots are valid on simplified complexes") {
  std::mt19937_64 gen(31);
  for (int i = 0; i < 300; ++i) {
    const auto s = simplify(testing::random_small_complex(gen, 10, 10)).complex;
    if (try_base_case(s)) continue;
    PivotRng rng(i);
    for (auto p : {PivotStrategy::PopVar, PivotStrategy::RareVar, PivotStrategy::Random, PivotStrategy::PopGcd}) {
      const auto sigma = select_pivot_bcrt(s, p, rng);
      REQUIRE_FALSE(s.contains(sigma));
      REQUIRE(sigma != Face::full(s.universe()));
    }
    for (auto p : {PivotStrategy::PopVar, PivotStrategy::RareVar, PivotStrategy::Random, PivotStrategy::MaxSupp,
                   PivotStrategy::MinSupp, PivotStrategy::Rarest, PivotStrategy::RareMax})
      REQUIRE(select_pivot_dbms(s, p, rng) < s.num_facets());
  }
}

TEST_CASE("engine examples") {
  CHECK(euler(generators::gen_rook(6, 6)).value == EulerValue(185));
  CHECK(euler(generators::gen_nicgraph(7, 2)).value == EulerValue(-120));
  for (std::size_t n = 1; n <= 70; n += 23) CHECK(euler(Complex::simplex(n)).value == EulerValue(0));
  CHECK(euler(Complex::void_complex(3)).value == EulerValue(0));
  CHECK(euler(cx(0, {{}})).value == EulerValue(-1));
  CHECK(euler(cx(3, {{0, 1}})).stats.nodes_expanded >= 1);
}

TEST_CASE("every configuration matches the oracle exhaustively") {
  const auto configs = all_configs();
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& d : testing::all_complexes(n)) {
      const auto expect = chi(d);
      for (const auto& cfg : configs) REQUIRE(euler(d, cfg).value.value() == expect);
    }
}

TEST_CASE("every configuration matches the oracle on random complexes") {
  const auto configs = all_configs();
  std::mt19937_64 rng(32);
  for (int i = 0; i < 500; ++i) {
    const auto d = testing::random_small_complex(rng, 12, 12);
    const auto expect = chi(d);
    for (const auto& cfg : configs) REQUIRE(euler(d, cfg).value.value() == expect);
  }
}

TEST_CASE("independence toggles do not change the value") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    auto d = testing::random_small_complex(rng, 6, 5);
    const auto g = testing::random_small_complex(rng, 6, 5);
    if (i % 2 == 0 && !d.is_void() && !g.is_void()) d = join(d, g);
    const auto expect = chi(d);
    for (auto alg : {Algorithm::Bcrt, Algorithm::Dbms}) {
      auto cfg = EngineConfig::for_algorithm(alg);
      cfg.verify_measures = true;
      for (int mode = 0; mode < 3; ++mode) {
        cfg.use_independence_at_root = mode >= 1;
        cfg.use_independence_interior = mode == 2;
        REQUIRE(euler(d, cfg).value.value() == expect);
      }
    }
  }
}

TEST_CASE("independence splits fire on joins") {
  const auto psi = join(generators::gen_matching(5), generators::gen_rook(2, 3));
  auto cfg = EngineConfig::for_algorithm(Algorithm::Dbms);
  const auto r = euler(psi, cfg);
  CHECK(r.stats.independence_splits >= 1);
  CHECK(r.value == euler(generators::gen_matching(5)).value * euler(generators::gen_rook(2, 3)).value);
}

TEST_CASE("runs are deterministic") {
  const auto d = generators::gen_random(20, 40, 9);
  for (const auto& cfg : all_configs()) {
    const auto a = euler(d, cfg);
    const auto b = euler(d, cfg);
    REQUIRE(a.value == b.value);
    REQUIRE(a.stats.same_counters(b.stats));
  }
}

TEST_CASE("seeds change random strategies but not the value") {
  const auto d = generators::gen_random(25, 40, 10);
  auto cfg = EngineConfig::for_algorithm(Algorithm::Dbms);
  cfg.pivot = PivotStrategy::Random;
  const auto a = euler(d, cfg);
  cfg.seed = 99;
  const auto b = euler(d, cfg);
  CHECK(a.value == b.value);
  CHECK(a.value == euler(d).value);
}

TEST_CASE("stats are consistent") {
  const auto r = euler(generators::gen_matching(8));
  CHECK(r.stats.base_cases.total() >= 1);
  CHECK(r.stats.base_cases.total() <= r.stats.nodes_expanded);
  CHECK(r.stats.nerve_applications >= 1);
}
