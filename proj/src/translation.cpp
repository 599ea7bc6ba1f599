#include "eulerchar/translation.hpp"

#include <algorithm>
#include <string>

#include "eulerchar/errors.hpp"

namespace eulerchar {

using detail::RowMatrix;

namespace {

bool rows_minimal(const RowMatrix& mat) {
  RowMatrix copy = mat;
  detail::keep_minimal(copy);
  return copy.rows() == mat.rows();
}

}  // namespace

bool operator==(const SquareFreeIdeal& a, const SquareFreeIdeal& b) {
  if (a.num_vars() != b.num_vars() || a.num_generators() != b.num_generators()) return false;
  // Complements of minimal generators are an antichain, so compare as complexes.
  return Complex(detail::complement_rows(a.gens_), true) == Complex(detail::complement_rows(b.gens_), true);
}

std::ostream& operator<<(std::ostream& os, const SquareFreeIdeal& ideal) {
  os << '<';
  for (std::size_t i = 0; i < ideal.num_generators(); ++i) {
    if (i) os << ", ";
    const auto vars = ideal.generator(i).members();
    if (vars.empty()) os << '1';
    for (std::size_t k = 0; k < vars.size(); ++k) os << (k ? "*" : "") << 'x' << vars[k];
  }
  return os << "> in " << ideal.num_vars() << " variables";
}

SquareFreeIdeal minimalize(std::size_t num_vars, const std::vector<std::vector<std::size_t>>& rows) {
  RowMatrix mat(num_vars, 0);
  for (const auto& r : rows) {
    auto row = mat.push_zero_row();
    for (std::size_t v : r) {
      if (v >= num_vars)
        throw InputError("variable index " + std::to_string(v) + " out of range for " + std::to_string(num_vars) +
                         " variables");
      detail::set_bit(row, v);
    }
  }
  return minimalize(std::move(mat));
}

SquareFreeIdeal minimalize(RowMatrix rows) {
  detail::keep_minimal(rows);
  return SquareFreeIdeal::from_minimal(std::move(rows));
}

SquareFreeIdeal complex_to_ideal(const Complex& delta) {
  return SquareFreeIdeal::from_minimal(detail::complement_rows(delta.matrix()));
}

Complex ideal_to_complex(const SquareFreeIdeal& ideal) {
  if (!rows_minimal(ideal.matrix())) throw InputError("ideal_to_complex: generators are not minimal");
  return Complex(detail::complement_rows(ideal.matrix()), true);
}

SquareFreeIdeal transpose_ideal(const SquareFreeIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("transpose of the zero ideal is undefined");
  return minimalize(detail::transpose(ideal.matrix()));
}

}  // namespace eulerchar
