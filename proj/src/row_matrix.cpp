#include "eulerchar/detail/row_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace eulerchar::detail {

void RowMatrix::push_row(std::span<const Word> r) {
  data_.insert(data_.end(), r.begin(), r.end());
  ++m_;
}

std::span<Word> RowMatrix::push_zero_row() {
  data_.resize(data_.size() + stride_, 0);
  ++m_;
  return row(m_ - 1);
}

void RowMatrix::keep_rows(const std::vector<char>& keep) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    if (!keep[i]) continue;
    if (out != i)
      std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(i * stride_), stride_,
                  data_.begin() + static_cast<std::ptrdiff_t>(out * stride_));
    ++out;
  }
  m_ = out;
  data_.resize(m_ * stride_);
}

void RowMatrix::erase_row(std::size_t i) {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * stride_);
  data_.erase(first, first + static_cast<std::ptrdiff_t>(stride_));
  --m_;
}

namespace {

// Shared worker. Rows are visited by decreasing size; a row can only be
// contained in a row that is at least as large, so every potential
// container has been decided by the time the row is tested. Kept rows are
// indexed by column so the scan is limited to rows sharing the candidate's
// least-covered column.
void keep_maximal_impl(RowMatrix& mat, const std::vector<char>* candidate) {
  const std::size_t m = mat.rows();
  if (m <= 1) return;
  std::vector<std::size_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = popcount(mat.row(i));

  std::vector<char> keep(m, 0);
  std::vector<std::vector<std::uint32_t>> by_column(mat.cols());
  std::size_t kept_count = 0;
  auto adopt = [&](std::size_t i) {
    keep[i] = 1;
    ++kept_count;
    for_each_bit(mat.row(i), [&](std::size_t v) { by_column[v].push_back(static_cast<std::uint32_t>(i)); });
  };

  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (candidate && !(*candidate)[i])
      adopt(i);
    else
      order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  for (std::size_t i : order) {
    const auto r = mat.row(i);
    bool dominated = false;
    if (sizes[i] == 0) {
      dominated = kept_count > 0;
    } else {
      std::size_t best = npos;
      std::size_t best_len = static_cast<std::size_t>(-1);
      for_each_bit(r, [&](std::size_t v) {
        if (by_column[v].size() < best_len) {
          best_len = by_column[v].size();
          best = v;
        }
      });
      for (std::uint32_t k : by_column[best]) {
        if (sizes[k] >= sizes[i] && is_subset(r, mat.row(k))) {
          dominated = true;
          break;
        }
      }
    }
    if (!dominated) adopt(i);
  }
  if (kept_count != m) mat.keep_rows(keep);
}

}  // namespace

void keep_maximal(RowMatrix& mat) { keep_maximal_impl(mat, nullptr); }

void keep_maximal(RowMatrix& mat, const std::vector<char>& candidate) {
  keep_maximal_impl(mat, &candidate);
}

void keep_minimal(RowMatrix& mat) {
  RowMatrix comp = complement_rows(mat);
  keep_maximal(comp);
  mat = complement_rows(comp);
}

std::vector<std::uint32_t> column_counts(const RowMatrix& mat) {
  std::vector<std::uint32_t> counts(mat.cols(), 0);
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for_each_bit(mat.row(i), [&](std::size_t v) { ++counts[v]; });
  return counts;
}

std::vector<Word> row_union(const RowMatrix& mat) {
  std::vector<Word> acc(mat.stride(), 0);
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    const auto r = mat.row(i);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= r[w];
  }
  return acc;
}

std::vector<Word> row_intersection(const RowMatrix& mat) {
  if (mat.rows() == 0) return std::vector<Word>(mat.stride(), 0);
  auto first = mat.row(0);
  std::vector<Word> acc(first.begin(), first.end());
  for (std::size_t i = 1; i < mat.rows(); ++i) {
    const auto r = mat.row(i);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= r[w];
  }
  return acc;
}

RowMatrix compact_columns(const RowMatrix& mat, std::span<const Word> keep) {
  const std::size_t new_n = popcount(keep);
  RowMatrix out(new_n, mat.rows());
  std::vector<unsigned> widths(keep.size());
  for (std::size_t w = 0; w < keep.size(); ++w) widths[w] = static_cast<unsigned>(std::popcount(keep[w]));
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    const auto src = mat.row(i);
    auto dst = out.row(i);
    std::size_t pos = 0;
    for (std::size_t w = 0; w < keep.size(); ++w) {
      if (widths[w] == 0) continue;
      const Word bits = extract_bits(src[w], keep[w]);
      const std::size_t word = pos / kWordBits;
      const std::size_t shift = pos % kWordBits;
      dst[word] |= bits << shift;
      if (shift != 0 && shift + widths[w] > kWordBits) dst[word + 1] |= bits >> (kWordBits - shift);
      pos += widths[w];
    }
  }
  return out;
}

RowMatrix transpose(const RowMatrix& mat) {
  RowMatrix out(mat.rows(), mat.cols());
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for_each_bit(mat.row(i), [&](std::size_t v) { set_bit(out.row(v), i); });
  return out;
}

RowMatrix complement_rows(const RowMatrix& mat) {
  RowMatrix out(mat.cols(), mat.rows());
  const Word tail = tail_mask(mat.cols());
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    const auto src = mat.row(i);
    auto dst = out.row(i);
    for (std::size_t w = 0; w < src.size(); ++w) dst[w] = ~src[w];
    if (!dst.empty()) dst.back() &= tail;
  }
  return out;
}

std::size_t find_row(const RowMatrix& mat, std::span<const Word> r) {
  for (std::size_t i = 0; i < mat.rows(); ++i)
    if (equal(mat.row(i), r)) return i;
  return npos;
}

bool contained_in_some_row(const RowMatrix& mat, std::span<const Word> r) {
  for (std::size_t i = 0; i < mat.rows(); ++i)
    if (is_subset(r, mat.row(i))) return true;
  return false;
}

}  // namespace eulerchar::detail
