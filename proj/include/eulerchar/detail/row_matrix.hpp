#pragma once

// Dense 0/1 incidence matrix with packed rows. Rows are facets (or ideal
// generators), columns are vertices (or variables). This is the working
// representation shared by the core operations and the engine.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eulerchar/detail/bits.hpp"

namespace eulerchar::detail {

class RowMatrix {
public:
  RowMatrix() = default;
  /// m zero rows over n columns.
  RowMatrix(std::size_t n, std::size_t m) : n_(n), stride_(words_for(n)), m_(m), data_(stride_ * m, 0) {}

  std::size_t cols() const { return n_; }
  std::size_t rows() const { return m_; }
  std::size_t stride() const { return stride_; }

  std::span<Word> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
  std::span<const Word> row(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }

  void push_row(std::span<const Word> r);
  /// Appends a zero row and returns it.
  std::span<Word> push_zero_row();
  void reserve_rows(std::size_t m) { data_.reserve(m * stride_); }

  /// Keeps only rows whose flag is set, preserving order.
  void keep_rows(const std::vector<char>& keep);
  /// Removes a single row, preserving order.
  void erase_row(std::size_t i);

  friend bool operator==(const RowMatrix&, const RowMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> data_;
};

/// Removes duplicate rows and rows contained in another row. Surviving rows
/// keep their relative order; among duplicates the first occurrence wins.
void keep_maximal(RowMatrix& mat);

/// As keep_maximal, but the caller guarantees that rows with candidate[i] == 0
/// are not contained in any other row. Only candidate rows are tested.
void keep_maximal(RowMatrix& mat, const std::vector<char>& candidate);

/// Removes duplicate rows and rows containing another row (minimal rows
/// under inclusion survive). Order preserved.
void keep_minimal(RowMatrix& mat);

/// Number of rows containing each column.
std::vector<std::uint32_t> column_counts(const RowMatrix& mat);

/// Bitwise OR / AND over all rows (AND of zero rows is the zero row).
std::vector<Word> row_union(const RowMatrix& mat);
std::vector<Word> row_intersection(const RowMatrix& mat);

/// Drops columns not selected by `keep` and renumbers the rest in ascending
/// order.
RowMatrix compact_columns(const RowMatrix& mat, std::span<const Word> keep);

/// Row i of the result lists the rows of `mat` that contain column i.
RowMatrix transpose(const RowMatrix& mat);

/// Bitwise complement of every row within the column universe.
RowMatrix complement_rows(const RowMatrix& mat);

/// Index of a row equal to r, or npos.
std::size_t find_row(const RowMatrix& mat, std::span<const Word> r);

/// True if r is a subset of some row.
bool contained_in_some_row(const RowMatrix& mat, std::span<const Word> r);

}  // namespace eulerchar::detail
