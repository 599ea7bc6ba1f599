#include <doctest.h>

#include <random>

#include "eulerchar/detail/row_matrix.hpp"

using namespace eulerchar::detail;

namespace {

RowMatrix from_rows(std::size_t n, const std::vector<std::vector<std::size_t>>& rows) {
  RowMatrix m(n, 0);
  for (const auto& r : rows) {
    auto row = m.push_zero_row();
    for (auto v : r) set_bit(row, v);
  }
  return m;
}

std::vector<std::vector<std::size_t>> as_rows(const RowMatrix& m) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.emplace_back();
    for_each_bit(m.row(i), [&](std::size_t v) { out.back().push_back(v); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("keep_maximal drops dominated rows and duplicates") {
  auto m = from_rows(4, {{0}, {0, 1}, {2}, {0, 1}, {}, {2, 3}});
  keep_maximal(m);
  CHECK(as_rows(m) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});

  auto e = from_rows(2, {{}, {}});
  keep_maximal(e);
  CHECK(e.rows() == 1);
}

TEST_CASE("keep_minimal drops dominating rows and duplicates") {
  auto m = from_rows(3, {{0, 1, 2}, {0, 1}, {1, 2}, {0, 1}});
  keep_minimal(m);
  CHECK(as_rows(m) == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("keep_maximal agrees with a quadratic reference") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 80, m = rng() % 40;
    RowMatrix mat(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      auto row = mat.push_zero_row();
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 3 == 0) set_bit(row, v);
    }
    std::vector<std::vector<std::size_t>> expect;
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < mat.rows() && maximal; ++j) {
        if (i == j || !is_subset(mat.row(i), mat.row(j))) continue;
        if (!equal(mat.row(i), mat.row(j)) || j < i) maximal = false;
      }
      if (maximal) {
        expect.emplace_back();
        for_each_bit(mat.row(i), [&](std::size_t v) { expect.back().push_back(v); });
      }
    }
    std::sort(expect.begin(), expect.end());
    keep_maximal(mat);
    CHECK(as_rows(mat) == expect);
  }
}

TEST_CASE("column statistics") {
  const auto m = from_rows(70, {{0, 65}, {0, 1}, {0, 65, 69}});
  const auto counts = column_counts(m);
  CHECK(counts.size() == 70);
  CHECK(counts[0] == 3);
  CHECK(counts[65] == 2);
  CHECK(counts[2] == 0);
  const auto all = row_union(m);
  CHECK(popcount(all) == 4);
  const auto common = row_intersection(m);
  CHECK(popcount(common) == 1);
  CHECK(test_bit(common, 0));
  CHECK(is_zero(row_intersection(RowMatrix(70, 0))));
}

TEST_CASE("compact_columns keeps the selected columns in order") {
  const auto m = from_rows(70, {{1, 3, 66}, {2, 66, 69}});
  std::vector<Word> keep(2, 0);
  for (auto v : {1, 2, 66, 69}) set_bit(keep, v);
  const auto c = compact_columns(m, keep);
  CHECK(c.cols() == 4);
  CHECK(as_rows(c) == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 2, 3}});
}

TEST_CASE("transpose and complement") {
  const auto m = from_rows(3, {{0, 1}, {2}});
  const auto t = transpose(m);
  CHECK(t.cols() == 2);
  CHECK(t.rows() == 3);
  CHECK(as_rows(t) == std::vector<std::vector<std::size_t>>{{0}, {0}, {1}});
  CHECK(transpose(t) == m);
  CHECK(as_rows(complement_rows(m)) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
}

TEST_CASE("row search") {
  const auto m = from_rows(5, {{0, 1}, {2, 3, 4}});
  std::vector<Word> r{0b01100};
  CHECK(contained_in_some_row(m, r));
  CHECK(find_row(m, r) == npos);
  std::vector<Word> full{0b11100};
  CHECK(find_row(m, full) == 1);
  std::vector<Word> miss{0b00101};
  CHECK_FALSE(contained_in_some_row(m, miss));
}

TEST_CASE("keep_rows and erase_row") {
  auto m = from_rows(3, {{0}, {1}, {2}});
  m.keep_rows({1, 0, 1});
  CHECK(as_rows(m) == std::vector<std::vector<std::size_t>>{{0}, {2}});
  m.erase_row(0);
  CHECK(as_rows(m) == std::vector<std::vector<std::size_t>>{{2}});
}
