#pragma once

// Square-free monomial ideals as 0/1 generator matrices, and their
// correspondence with simplicial complexes: a face sigma maps to the
// monomial over the variables outside sigma.

#include <cstddef>
#include <ostream>
#include <vector>

#include "eulerchar/complex.hpp"
#include "eulerchar/detail/row_matrix.hpp"

namespace eulerchar {

/// Ideal in num_vars variables generated by square-free monomials; row i
/// holds the exponent vector of generator i. Generators are minimal: no row
/// is contained in another and there are no duplicates. Zero generators is
/// the zero ideal; an all-zero row is the unit ideal.
class SquareFreeIdeal {
public:
  SquareFreeIdeal() = default;
  /// Takes rows that the caller guarantees are already minimal.
  static SquareFreeIdeal from_minimal(detail::RowMatrix gens) { return SquareFreeIdeal(std::move(gens)); }

  std::size_t num_vars() const { return gens_.cols(); }
  std::size_t num_generators() const { return gens_.rows(); }
  bool is_zero() const { return gens_.rows() == 0; }
  /// Variables dividing generator i.
  Face generator(std::size_t i) const { return Face::from_words(num_vars(), gens_.row(i)); }
  const detail::RowMatrix& matrix() const { return gens_; }

  /// Equal generator sets, order ignored.
  friend bool operator==(const SquareFreeIdeal& a, const SquareFreeIdeal& b);
  friend std::ostream& operator<<(std::ostream& os, const SquareFreeIdeal& ideal);

private:
  explicit SquareFreeIdeal(detail::RowMatrix gens) : gens_(std::move(gens)) {}
  detail::RowMatrix gens_;
};

/// Keeps the rows minimal under divisibility, dropping duplicates.
SquareFreeIdeal minimalize(std::size_t num_vars, const std::vector<std::vector<std::size_t>>& rows);
SquareFreeIdeal minimalize(detail::RowMatrix rows);

/// One generator per facet: the product of the variables outside it.
SquareFreeIdeal complex_to_ideal(const Complex& delta);

/// Inverse of complex_to_ideal; the ambient variables are the vertex set.
/// Throws InputError unless the generators are minimal.
Complex ideal_to_complex(const SquareFreeIdeal& ideal);

/// Ideal of the transposed generator/variable matrix: variable j becomes
/// the generator over the old generators it divides. Throws InputError on
/// the zero ideal.
SquareFreeIdeal transpose_ideal(const SquareFreeIdeal& ideal);

}  // namespace eulerchar
