#pragma once

// Constructive side of the hardness results: #SAT -> graph -> complex,
// complexes with a prescribed Euler characteristic, and sign negation by
// joining with a triangle boundary.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eulerchar/complex.hpp"

namespace eulerchar::reductions {

struct Literal {
  std::size_t var = 0;
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  /// Throws InputError on an empty clause or out-of-range variable.
  void validate() const;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct Graph {
  std::size_t num_vertices = 0;
  /// Sorted, each pair (u, v) with u < v, no duplicates.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline constexpr std::size_t kMaxBruteForceVars = 20;

/// Vertices T_i, F_i, D_i per variable (3i, 3i+1, 3i+2), then C_j per clause
/// (3n + j). Each variable gets a triangle; a literal v_i in clause j joins
/// T_i to C_j, a literal not-v_i joins F_i to C_j.
Graph sat_to_graph(const CnfFormula& f);

/// One facet per edge: the complement of its two endpoints.
Complex graph_to_complex(const Graph& g);

/// Truth-table count. Throws CapacityError above kMaxBruteForceVars.
std::uint64_t count_sat_bruteforce(const CnfFormula& f);

struct SatComplex {
  Complex complex;
  /// sign * chi(complex) is the number of satisfying assignments.
  int sign = 1;
};

SatComplex sat_to_complex(const CnfFormula& f);

/// Parity sum over independent sets, by enumeration. Test oracle for
/// graph_to_complex; limited to 25 vertices.
std::int64_t independent_set_parity(const Graph& g);

/// Delta join Omega, Omega the triangle boundary on three appended vertices.
Complex negate_euler(const Complex& delta);

/// A complex with reduced Euler characteristic k, built from joins of
/// three-point complexes along the binary expansion of |k|.
Complex complex_with_euler(std::int64_t k);

/// 2 l^2 + 3 l + 7 with l = ceil(log2 |k|), l = 0 for k = 0.
std::uint64_t construction_bound(std::int64_t k);

/// DIMACS CNF: `c` comments, one `p cnf <vars> <clauses>` header, clauses
/// as signed 1-based literals terminated by 0.
CnfFormula parse_dimacs(std::istream& in);
std::string format_dimacs(const CnfFormula& f);

}  // namespace eulerchar::reductions
