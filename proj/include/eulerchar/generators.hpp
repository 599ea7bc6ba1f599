#pragma once

// Benchmark families: random complexes, chessboard complexes, matching
// complexes and complexes of not-b-connected graphs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "eulerchar/complex.hpp"

namespace eulerchar::generators {

inline constexpr std::size_t kDefaultFacetLimit = 5'000'000;

enum class Family { Random, Rook, Match, NicGraph };

struct GeneratorSpec {
  Family family = Family::Random;
  std::size_t a = 0;  // vertices (random), rows (rook), graph order (match, nicgraph)
  std::size_t b = 0;  // facets (random), columns (rook), connectivity (nicgraph)
  std::uint64_t seed = 0;
};

/// Parses `rook:6,6`, `match:9`, `nicgraph:7,2`, `random:20,100` or
/// `random:20,100,seed=7`. Throws InputError.
GeneratorSpec parse_spec(std::string_view text);
std::string format_spec(const GeneratorSpec& spec);

Complex generate(const GeneratorSpec& spec, std::size_t facet_limit = kDefaultFacetLimit);

/// m pairwise incomparable facets on n vertices, each vertex present with
/// probability 1/2. Throws CapacityError after 10000 * m consecutive
/// rejected candidates.
Complex gen_random(std::size_t n, std::size_t m, std::uint64_t seed);

/// Chessboard complex: cell (i, j) is vertex i * b + j; facets are the
/// placements of min(a, b) non-attacking rooks.
Complex gen_rook(std::size_t a, std::size_t b, std::size_t facet_limit = kDefaultFacetLimit);

/// Matching complex of K_a; vertices are edges in lexicographic order.
Complex gen_matching(std::size_t a, std::size_t facet_limit = kDefaultFacetLimit);

/// Complex of graphs on a vertices that are not b-connected; vertices are
/// edges of K_a in lexicographic order.
Complex gen_nicgraph(std::size_t a, std::size_t b, std::size_t facet_limit = kDefaultFacetLimit);

/// Index of edge {i, j}, i < j, of K_a in lexicographic order.
std::size_t edge_index(std::size_t a, std::size_t i, std::size_t j);

}  // namespace eulerchar::generators
