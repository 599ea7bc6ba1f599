#pragma once

// Brute-force reference computations. Deliberately naive; used as ground
// truth in tests and available from the CLI.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eulerchar/complex.hpp"
#include "eulerchar/euler_value.hpp"

namespace eulerchar::oracle {

inline constexpr std::size_t kMaxSubsetVertices = 25;
inline constexpr std::size_t kMaxInclusionExclusionFacets = 25;
inline constexpr std::uint64_t kDefaultFaceLimit = 200'000'000;

/// entries[0] = f_{-1}, entries[i + 1] = f_i (faces with i + 1 vertices).
struct FVector {
  std::vector<std::uint64_t> entries;

  std::uint64_t total() const;
  /// -f_{-1} + f_0 - f_1 + ...
  EulerValue alternating_sum() const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Sum of -(-1)^|sigma| over all faces, found by testing every subset of the
/// universe. Throws CapacityError above kMaxSubsetVertices.
EulerValue euler_by_subsets(const Complex& delta);

/// Inclusion-exclusion over facet subsets: (-1)^|v| for each nonempty set v of
/// facets with empty common intersection. Throws CapacityError above
/// kMaxInclusionExclusionFacets.
EulerValue euler_by_inclusion_exclusion(const Complex& delta);

/// Face counts by cardinality. Small universes use subset enumeration; larger
/// ones enumerate faces directly, throwing CapacityError once more than
/// `face_limit` faces have been seen.
FVector f_vector(const Complex& delta, std::uint64_t face_limit = kDefaultFaceLimit);

}  // namespace eulerchar::oracle
