#include "eulerchar/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <vector>

#include "eulerchar/errors.hpp"

namespace eulerchar::generators {

using detail::RowMatrix;
using detail::Word;

namespace {

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("generator spec: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void check_limit(std::size_t count, std::size_t limit, std::string_view what) {
  if (count > limit)
    throw CapacityError(std::string(what) + ": " + std::to_string(count) + " facets exceeds limit of " +
                        std::to_string(limit));
}

}  // namespace

std::size_t edge_index(std::size_t a, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // Edges (0,1..a-1), (1,2..a-1), ...
  return i * (2 * a - i - 1) / 2 + (j - i - 1);
}

GeneratorSpec parse_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("generator spec needs 'family:params', got '" + std::string(text) + "'");
  const auto family = text.substr(0, colon);
  const auto params = split(text.substr(colon + 1), ',');
  GeneratorSpec spec;
  auto expect = [&](std::size_t k) {
    if (params.size() != k)
      throw InputError("generator spec '" + std::string(text) + "': expected " + std::to_string(k) + " parameters");
  };
  if (family == "rook") {
    expect(2);
    spec = {Family::Rook, parse_count(params[0], "rows"), parse_count(params[1], "columns"), 0};
    if (spec.a == 0 || spec.b == 0) throw InputError("rook: parameters must be positive");
  } else if (family == "match") {
    expect(1);
    spec = {Family::Match, parse_count(params[0], "order"), 0, 0};
    if (spec.a < 2) throw InputError("match: order must be at least 2");
  } else if (family == "nicgraph") {
    expect(2);
    spec = {Family::NicGraph, parse_count(params[0], "order"), parse_count(params[1], "connectivity"), 0};
    if (spec.b < 2 || spec.a < spec.b + 1) throw InputError("nicgraph: need 2 <= b < a");
  } else if (family == "random") {
    if (params.size() != 2 && params.size() != 3) expect(3);
    spec = {Family::Random, parse_count(params[0], "vertex count"), parse_count(params[1], "facet count"), 0};
    if (params.size() == 3) {
      auto p = params[2];
      if (p.substr(0, 5) == "seed=") p = p.substr(5);
      std::uint64_t seed = 0;
      const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), seed);
      if (ec != std::errc() || ptr != p.data() + p.size() || p.empty())
        throw InputError("random: bad seed '" + std::string(params[2]) + "'");
      spec.seed = seed;
    }
    if (spec.a == 0 || spec.b == 0) throw InputError("random: parameters must be positive");
  } else {
    throw InputError("unknown generator family '" + std::string(family) + "'");
  }
  return spec;
}

std::string format_spec(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::Rook: return "rook:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    case Family::Match: return "match:" + std::to_string(spec.a);
    case Family::NicGraph: return "nicgraph:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    case Family::Random:
      return "random:" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ",seed=" + std::to_string(spec.seed);
  }
  return {};
}

Complex generate(const GeneratorSpec& spec, std::size_t facet_limit) {
  switch (spec.family) {
    case Family::Random: return gen_random(spec.a, spec.b, spec.seed);
    case Family::Rook: return gen_rook(spec.a, spec.b, facet_limit);
    case Family::Match: return gen_matching(spec.a, facet_limit);
    case Family::NicGraph: return gen_nicgraph(spec.a, spec.b, facet_limit);
  }
  throw InputError("unknown generator family");
}

Complex gen_random(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0 || m == 0) throw InputError("random: parameters must be positive");
  std::mt19937_64 gen(seed);
  RowMatrix mat(n, 0);
  mat.reserve_rows(m);
  std::vector<Word> cand(detail::words_for(n));
  const std::uint64_t max_rejections = 10'000ULL * m;
  std::uint64_t rejections = 0;
  while (mat.rows() < m) {
    for (auto& w : cand) w = gen();
    cand.back() &= detail::tail_mask(n);
    bool comparable = false;
    for (std::size_t i = 0; i < mat.rows() && !comparable; ++i)
      comparable = detail::is_subset(cand, mat.row(i)) || detail::is_subset(mat.row(i), cand);
    if (comparable) {
      if (++rejections >= max_rejections)
        throw CapacityError("random: cannot find " + std::to_string(m) + " incomparable facets on " +
                            std::to_string(n) + " vertices");
      continue;
    }
    rejections = 0;
    mat.push_row(cand);
  }
  return Complex(std::move(mat), true);
}

Complex gen_rook(std::size_t a, std::size_t b, std::size_t facet_limit) {
  if (a == 0 || b == 0) throw InputError("rook: parameters must be positive");
  const std::size_t rows = std::min(a, b);
  const std::size_t cols = std::max(a, b);
  // Number of facets: cols! / (cols - rows)!
  std::size_t count = 1;
  for (std::size_t k = 0; k < rows; ++k) {
    count *= cols - k;
    check_limit(count, facet_limit, "rook");
  }
  const bool transposed = a > b;
  auto cell = [&](std::size_t r, std::size_t c) { return transposed ? c * b + r : r * b + c; };

  RowMatrix mat(a * b, 0);
  mat.reserve_rows(count);
  std::vector<std::size_t> choice(rows);
  std::vector<char> used(cols, 0);
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == rows) {
      auto row = mat.push_zero_row();
      for (std::size_t i = 0; i < rows; ++i) detail::set_bit(row, cell(i, choice[i]));
      return;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      choice[r] = c;
      self(self, r + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return Complex(std::move(mat), true);
}

Complex gen_matching(std::size_t a, std::size_t facet_limit) {
  if (a < 2) throw InputError("match: order must be at least 2");
  // Maximal matchings of K_a: perfect for even a, one vertex left over for odd a.
  std::size_t count = 1;
  for (std::size_t k = (a % 2 == 0) ? a - 1 : a; k > 1; k -= 2) {
    count *= k;
    check_limit(count, facet_limit, "match");
  }
  const std::size_t edges = a * (a - 1) / 2;
  RowMatrix mat(edges, 0);
  mat.reserve_rows(count);
  std::vector<char> matched(a, 0);
  std::vector<std::size_t> chosen;
  bool skipped = false;
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < a && matched[i]) ++i;
    if (i == a) {
      auto row = mat.push_zero_row();
      for (std::size_t e : chosen) detail::set_bit(row, e);
      return;
    }
    matched[i] = 1;
    for (std::size_t j = i + 1; j < a; ++j) {
      if (matched[j]) continue;
      matched[j] = 1;
      chosen.push_back(edge_index(a, i, j));
      self(self);
      chosen.pop_back();
      matched[j] = 0;
    }
    if (a % 2 == 1 && !skipped) {
      skipped = true;
      self(self);
      skipped = false;
    }
    matched[i] = 0;
  };
  rec(rec);
  return Complex(std::move(mat), true);
}

Complex gen_nicgraph(std::size_t a, std::size_t b, std::size_t facet_limit) {
  if (b < 2 || a < b + 1) throw InputError("nicgraph: need 2 <= b < a");
  // A maximal graph that is not b-connected is K_{A+C} union K_{B+C} for a
  // separator C of size b - 1 and a split {A, B} of the remaining vertices.
  const std::size_t edges = a * (a - 1) / 2;
  RowMatrix mat(edges, 0);
  std::vector<std::size_t> sep;
  auto emit_for_separator = [&] {
    std::vector<char> in_sep(a, 0);
    for (std::size_t c : sep) in_sep[c] = 1;
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < a; ++v)
      if (!in_sep[v]) rest.push_back(v);
    const std::size_t r = rest.size();
    if (r < 2) return;
    // Unordered bipartitions: fix rest[0] on side A.
    const std::uint64_t splits = (std::uint64_t{1} << (r - 1)) - 1;
    for (std::uint64_t mask = 0; mask < splits; ++mask) {
      check_limit(mat.rows() + 1, facet_limit, "nicgraph");
      std::vector<char> side_a(a, 0);
      side_a[rest[0]] = 1;
      for (std::size_t k = 1; k < r; ++k) side_a[rest[k]] = ((mask >> (k - 1)) & 1) ? 1 : 0;
      auto row = mat.push_zero_row();
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = i + 1; j < a; ++j) {
          if (in_sep[i] || in_sep[j] || side_a[i] == side_a[j]) detail::set_bit(row, edge_index(a, i, j));
        }
    }
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (sep.size() == b - 1) {
      emit_for_separator();
      return;
    }
    for (std::size_t v = start; v < a; ++v) {
      sep.push_back(v);
      self(self, v + 1);
      sep.pop_back();
    }
  };
  rec(rec, 0);
  return Complex(std::move(mat));
}

}  // namespace eulerchar::generators
