#pragma once

// Divide-and-conquer computation of the reduced Euler characteristic.
//
// Both algorithms split a complex into two simpler ones whose Euler
// characteristics combine additively:
//
//   BCRT, pivot sigma (sigma not a face, sigma != V):
//     chi(D) = chi(D minus comp(sigma)) + chi(D union pows(sigma))
//   DBMS, pivot a facet sigma, D' = clo(facets(D) \ {sigma}):
//     chi(D) = chi(D') - chi(D' minus comp(sigma))
//
// Every node is first simplified (unused vertices dropped, abundant vertices
// eliminated), optionally split into a join of independent parts, optionally
// replaced by its nerve, and then either resolved by a base case or split.

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "eulerchar/complex.hpp"
#include "eulerchar/euler_value.hpp"

namespace eulerchar {

enum class Algorithm { Bcrt, Dbms };

/// Pivot strategies. Names follow the algebraic convention, so for vertices
/// they read inverted: "popvar" picks a rare vertex.
enum class PivotStrategy { PopVar, RareVar, Random, PopGcd, MaxSupp, MinSupp, Rarest, RareMax };

std::string_view to_string(Algorithm a);
std::string_view to_string(PivotStrategy p);
std::optional<Algorithm> parse_algorithm(std::string_view s);
std::optional<PivotStrategy> parse_pivot(std::string_view s);
bool strategy_supported(Algorithm a, PivotStrategy p);
PivotStrategy default_pivot(Algorithm a);

struct EngineConfig {
  Algorithm algorithm = Algorithm::Dbms;
  PivotStrategy pivot = PivotStrategy::RareMax;
  bool use_nerve = true;
  bool use_independence_at_root = true;
  bool use_independence_interior = false;
  std::uint64_t seed = 0;
  /// Check per-node termination measures and throw InternalError on failure.
  /// On by default in builds without NDEBUG.
#ifdef NDEBUG
  bool verify_measures = false;
#else
  bool verify_measures = true;
#endif

  static EngineConfig for_algorithm(Algorithm a) {
    EngineConfig cfg;
    cfg.algorithm = a;
    cfg.pivot = default_pivot(a);
    return cfg;
  }
};

struct BaseCaseHits {
  std::uint64_t void_complex = 0;
  std::uint64_t empty_face = 0;
  std::uint64_t cone = 0;
  std::uint64_t codisjoint = 0;
  std::uint64_t two_facets = 0;
  std::uint64_t three_facets = 0;
  std::uint64_t four_facets = 0;

  std::uint64_t total() const {
    return void_complex + empty_face + cone + codisjoint + two_facets + three_facets + four_facets;
  }
  friend bool operator==(const BaseCaseHits&, const BaseCaseHits&) = default;
};

struct EngineStats {
  std::uint64_t nodes_expanded = 0;
  BaseCaseHits base_cases;
  std::uint64_t nerve_applications = 0;
  std::uint64_t abundant_eliminations = 0;
  std::uint64_t independence_splits = 0;
  std::chrono::nanoseconds elapsed{0};

  /// Equality of all counters; elapsed time is ignored.
  bool same_counters(const EngineStats& o) const {
    return nodes_expanded == o.nodes_expanded && base_cases == o.base_cases &&
           nerve_applications == o.nerve_applications && abundant_eliminations == o.abundant_eliminations &&
           independence_splits == o.independence_splits;
  }
};

struct EulerResult {
  EulerValue value;
  EngineStats stats;
};

/// Exact reduced Euler characteristic. Deterministic for a fixed config,
/// including the random strategies. Throws InputError if the pivot strategy
/// does not belong to the algorithm, OverflowError on 64-bit overflow.
EulerResult euler(const Complex& delta, const EngineConfig& cfg = {});

struct Simplified {
  Complex complex;
  int sign = 1;
};

/// One round: drop unused vertices, then eliminate at most one abundant
/// vertex. Returns nullopt when nothing changed.
std::optional<Simplified> simplify_step(const Complex& delta);

/// simplify_step to a fixpoint. chi(delta) == sign * chi(result).
Simplified simplify(const Complex& delta);

/// Closed-form value for complexes the algorithms do not split further.
/// Expects a simplified complex (no unused or abundant vertices).
std::optional<EulerValue> try_base_case(const Complex& delta);

/// Deterministic generator for the random strategies.
class PivotRng {
public:
  explicit PivotRng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform in [0, bound); bound must be positive.
  std::size_t uniform(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(gen_);
  }

private:
  std::mt19937_64 gen_;
};

/// BCRT pivot: a vertex set that is not a face and is not all of V.
Face select_pivot_bcrt(const Complex& delta, PivotStrategy strategy, PivotRng& rng);

/// DBMS pivot: index of a facet.
std::size_t select_pivot_dbms(const Complex& delta, PivotStrategy strategy, PivotRng& rng);

/// (delta minus comp(sigma), delta union pows(sigma)); chi(delta) is their sum.
std::pair<Complex, Complex> split_bcrt(const Complex& delta, const Face& sigma);

/// (D', D' minus comp(sigma)) with sigma = facet f and D' the closure of the
/// other facets; chi(delta) is the first minus the second.
std::pair<Complex, Complex> split_dbms(const Complex& delta, std::size_t facet);

}  // namespace eulerchar
