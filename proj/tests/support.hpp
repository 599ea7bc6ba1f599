#pragma once

// Instance families shared by the unit, integration and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "eulerchar/complex.hpp"
#include "eulerchar/oracle.hpp"

namespace eulerchar::testing {

inline Face face(std::size_t n, std::initializer_list<std::size_t> members) { return Face(n, members); }

inline Complex cx(std::size_t n, const std::vector<std::vector<std::size_t>>& faces) { return make_complex(n, faces); }

/// All 2^n subsets of {0..n-1}.
inline std::vector<Face> all_faces(std::size_t n) {
  std::vector<Face> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Face f(n);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) f.insert(v);
    out.push_back(f);
  }
  return out;
}

/// Every complex on n vertices, one per antichain of subsets (including the
/// void complex and {{}}). n <= 5.
inline std::vector<Complex> all_complexes(std::size_t n) {
  const std::uint32_t subsets = 1u << n;
  std::vector<std::uint32_t> chosen;
  std::vector<Complex> out;
  auto emit = [&] {
    std::vector<std::vector<std::size_t>> faces;
    for (auto s : chosen) {
      std::vector<std::size_t> f;
      for (std::size_t v = 0; v < n; ++v)
        if (s >> v & 1) f.push_back(v);
      faces.push_back(std::move(f));
    }
    out.push_back(make_complex(n, faces));
  };
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (next == subsets) {
      emit();
      return;
    }
    self(self, next + 1);
    for (auto s : chosen)
      if ((s & next) == s || (s & next) == next) return;
    chosen.push_back(next);
    self(self, next + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
  return out;
}

/// Random complex: up to m random faces on n vertices, maximalized. Each
/// vertex is in a face with probability `density`.
inline Complex random_complex(std::mt19937_64& rng, std::size_t n, std::size_t m, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  std::vector<Face> faces;
  for (std::size_t i = 0; i < m; ++i) {
    Face f(n);
    for (std::size_t v = 0; v < n; ++v)
      if (bit(rng)) f.insert(v);
    faces.push_back(f);
  }
  return make_complex(n, faces);
}

/// Random complex with n in [1, max_n] and m in [1, max_m].
inline Complex random_small_complex(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
  const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  return random_complex(rng, n, m, density);
}

inline std::int64_t chi(const Complex& delta) { return oracle::euler_by_subsets(delta).value(); }

}  // namespace eulerchar::testing
