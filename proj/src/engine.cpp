#include "eulerchar/engine.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <vector>

#include "eulerchar/errors.hpp"

namespace eulerchar {

using detail::RowMatrix;
using detail::npos;
using detail::Word;

namespace {

struct NamedPivot {
  std::string_view name;
  PivotStrategy strategy;
};

constexpr std::array<NamedPivot, 8> kPivotNames{{
    {"popvar", PivotStrategy::PopVar},
    {"rarevar", PivotStrategy::RareVar},
    {"random", PivotStrategy::Random},
    {"popgcd", PivotStrategy::PopGcd},
    {"maxsupp", PivotStrategy::MaxSupp},
    {"minsupp", PivotStrategy::MinSupp},
    {"rarest", PivotStrategy::Rarest},
    {"raremax", PivotStrategy::RareMax},
}};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t child_path(std::uint64_t path, std::uint64_t branch) {
  return splitmix64(path ^ ((branch + 1) * 0xd1b54a32d192ed03ULL));
}

// ---------------------------------------------------------------------------
// Node-level operations on the facet matrix.

// Drops columns that no row uses. Returns true if anything was removed.
bool drop_unused(RowMatrix& mat) {
  const auto used = detail::row_union(mat);
  if (detail::popcount(used) == mat.cols()) return false;
  mat = detail::compact_columns(mat, used);
  return true;
}

// Rows tau & sigma for tau != sigma, renumbered onto sigma's vertices.
// Equals clo(facets \ {sigma}) minus comp(sigma).
RowMatrix link_of_facet(const RowMatrix& mat, std::size_t f) {
  const auto sigma = mat.row(f);
  RowMatrix cut(mat.cols(), 0);
  cut.reserve_rows(mat.rows() - 1);
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    if (i == f) continue;
    auto r = cut.push_zero_row();
    const auto src = mat.row(i);
    for (std::size_t w = 0; w < r.size(); ++w) r[w] = src[w] & sigma[w];
  }
  RowMatrix out = detail::compact_columns(cut, sigma);
  detail::keep_maximal(out);
  return out;
}

RowMatrix without_row(const RowMatrix& mat, std::size_t f) {
  RowMatrix out = mat;
  out.erase_row(f);
  return out;
}

bool has_full_column(const std::vector<std::uint32_t>& counts, std::size_t m) {
  return std::any_of(counts.begin(), counts.end(), [&](std::uint32_t c) { return c == m; });
}

// One abundant-vertex elimination if possible. Requires no unused columns.
bool eliminate_abundant(RowMatrix& mat, const std::vector<std::uint32_t>& counts) {
  const std::size_t m = mat.rows();
  if (m < 2) return false;
  std::size_t e = npos;
  for (std::size_t v = 0; v < counts.size(); ++v)
    if (counts[v] == m - 1) {
      e = v;
      break;
    }
  if (e == npos) return false;
  std::size_t sigma = npos;
  for (std::size_t i = 0; i < m; ++i)
    if (!detail::test_bit(mat.row(i), e)) {
      sigma = i;
      break;
    }
  mat = link_of_facet(mat, sigma);
  return true;
}

// Simplifies in place and returns the sign to multiply by. With
// stop_at_cone, returns as soon as a vertex lies in every facet.
int simplify_matrix(RowMatrix& mat, bool stop_at_cone, std::uint64_t* eliminations) {
  int sign = 1;
  for (;;) {
    drop_unused(mat);
    if (mat.rows() < 2) return sign;
    const auto counts = detail::column_counts(mat);
    if (stop_at_cone && has_full_column(counts, mat.rows())) return sign;
    if (!eliminate_abundant(mat, counts)) return sign;
    sign = -sign;
    if (eliminations) ++*eliminations;
  }
}

enum class BaseKind { Void, EmptyFace, Cone, Codisjoint, Two, Three, Four };

struct BaseResult {
  BaseKind kind;
  std::int64_t value;
};

// Void, {{}} and cones; valid for any complex.
std::optional<BaseResult> trivial_base_case(const RowMatrix& mat) {
  if (mat.rows() == 0) return BaseResult{BaseKind::Void, 0};
  if (mat.rows() == 1 && detail::is_zero(mat.row(0))) return BaseResult{BaseKind::EmptyFace, -1};
  if (!detail::is_zero(detail::row_intersection(mat))) return BaseResult{BaseKind::Cone, 0};
  return std::nullopt;
}

std::optional<BaseResult> base_case(const RowMatrix& mat, const std::vector<std::uint32_t>& counts) {
  if (auto t = trivial_base_case(mat)) return t;
  const std::size_t m = mat.rows();
  // Pairwise co-disjoint <=> each vertex is missing from at most one facet.
  if (std::all_of(counts.begin(), counts.end(), [&](std::uint32_t c) { return c + 1 >= m; }))
    return BaseResult{BaseKind::Codisjoint, (m % 2 == 0) ? 1 : -1};
  if (m == 2) return BaseResult{BaseKind::Two, 1};
  // With no cone and no abundant vertex, three facets are pairwise disjoint.
  if (m == 3) return BaseResult{BaseKind::Three, 2};
  if (m == 4 && mat.cols() == 4 &&
      std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c == 2; }))
    return BaseResult{BaseKind::Four, -1};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Pivot selection.

// excluded[e] != 0 iff V \ {e} is a facet.
std::vector<char> complement_is_facet(const RowMatrix& mat) {
  const std::size_t n = mat.cols();
  std::vector<char> excluded(n, 0);
  if (n == 0) return excluded;
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    const auto r = mat.row(i);
    if (detail::popcount(r) != n - 1) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (!detail::test_bit(r, v)) {
        excluded[v] = 1;
        break;
      }
  }
  return excluded;
}

// Lowest vertex minimizing (or maximizing) its facet count among vertices
// accepted by `allowed`.
template <class Allowed>
std::size_t extreme_vertex(const std::vector<std::uint32_t>& counts, bool want_max, Allowed allowed) {
  std::size_t best = npos;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (!allowed(v)) continue;
    if (best == npos || (want_max ? counts[v] > counts[best] : counts[v] < counts[best])) best = v;
  }
  return best;
}

std::vector<Word> complement_of_vertex(std::size_t n, std::size_t e) {
  std::vector<Word> sigma(detail::words_for(n), ~Word{0});
  if (!sigma.empty()) sigma.back() &= detail::tail_mask(n);
  detail::clear_bit(sigma, e);
  return sigma;
}

// BCRT pivots. A vertex e with V \ {e} not a facet always exists once the
// base cases have been tried: if every V \ {e} were a facet the complex
// would be the boundary of the simplex, whose facets are pairwise
// co-disjoint.
std::vector<Word> pivot_bcrt(const RowMatrix& mat, PivotStrategy strategy, PivotRng& rng) {
  const std::size_t n = mat.cols();
  const auto counts = detail::column_counts(mat);
  const auto excluded = complement_is_facet(mat);
  auto candidate = [&](std::size_t v) { return !excluded[v]; };

  auto by_vertex = [&](bool want_max) {
    const std::size_t e = extreme_vertex(counts, want_max, candidate);
    if (e == npos) throw InternalError("BCRT pivot: no vertex e with V \\ {e} outside the facets");
    return complement_of_vertex(n, e);
  };

  switch (strategy) {
    case PivotStrategy::PopVar:
      return by_vertex(false);
    case PivotStrategy::RareVar:
      return by_vertex(true);
    case PivotStrategy::Random: {
      std::vector<std::size_t> cands;
      for (std::size_t v = 0; v < n; ++v)
        if (candidate(v)) cands.push_back(v);
      if (cands.empty()) throw InternalError("BCRT pivot: no candidate vertex");
      return complement_of_vertex(n, cands[rng.uniform(cands.size())]);
    }
    case PivotStrategy::PopGcd: {
      const std::size_t e = extreme_vertex(counts, false, [](std::size_t) { return true; });
      std::vector<std::size_t> avoiding;
      if (e != npos)
        for (std::size_t i = 0; i < mat.rows(); ++i)
          if (!detail::test_bit(mat.row(i), e)) avoiding.push_back(i);
      std::vector<Word> sigma(mat.stride(), 0);
      const std::size_t take = std::min<std::size_t>(3, avoiding.size());
      for (std::size_t k = 0; k < take; ++k) {
        const std::size_t j = k + rng.uniform(avoiding.size() - k);
        std::swap(avoiding[k], avoiding[j]);
        const auto r = mat.row(avoiding[k]);
        for (std::size_t w = 0; w < sigma.size(); ++w) sigma[w] |= r[w];
      }
      const bool is_all = detail::popcount(sigma) == n;
      if (take == 0 || is_all || detail::contained_in_some_row(mat, sigma)) return by_vertex(false);
      return sigma;
    }
    default:
      throw InputError("pivot strategy " + std::string(to_string(strategy)) + " is not a BCRT strategy");
  }
}

std::size_t first_row_lacking(const RowMatrix& mat, std::size_t e) {
  for (std::size_t i = 0; i < mat.rows(); ++i)
    if (!detail::test_bit(mat.row(i), e)) return i;
  return npos;
}

std::size_t pivot_dbms(const RowMatrix& mat, PivotStrategy strategy, PivotRng& rng) {
  const std::size_t m = mat.rows();
  if (m == 0) throw InternalError("DBMS pivot on the void complex");
  const auto counts = detail::column_counts(mat);

  auto row_size = [&](std::size_t i) { return detail::popcount(mat.row(i)); };
  auto smallest_or_largest = [&](bool want_max) {
    std::size_t best = 0;
    std::size_t best_size = row_size(0);
    for (std::size_t i = 1; i < m; ++i) {
      const std::size_t s = row_size(i);
      if (want_max ? s > best_size : s < best_size) {
        best = i;
        best_size = s;
      }
    }
    return best;
  };

  std::vector<char> excluded;
  auto popular_candidate = [&](std::size_t v) { return counts[v] < m && !excluded[v]; };
  auto popular_vertex = [&] {
    if (excluded.empty()) excluded = complement_is_facet(mat);
    return extreme_vertex(counts, true, popular_candidate);
  };

  switch (strategy) {
    case PivotStrategy::RareVar: {
      const std::size_t e = popular_vertex();
      return e == npos ? 0 : first_row_lacking(mat, e);
    }
    case PivotStrategy::PopVar: {
      const std::size_t e = extreme_vertex(counts, false, [&](std::size_t v) { return counts[v] < m; });
      return e == npos ? 0 : first_row_lacking(mat, e);
    }
    case PivotStrategy::MaxSupp:
      return smallest_or_largest(false);
    case PivotStrategy::MinSupp:
      return smallest_or_largest(true);
    case PivotStrategy::Random:
      return rng.uniform(m);
    case PivotStrategy::RareMax: {
      const std::size_t e = popular_vertex();
      if (e == npos) return smallest_or_largest(false);
      std::size_t best = npos;
      std::size_t best_size = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (detail::test_bit(mat.row(i), e)) continue;
        const std::size_t s = row_size(i);
        if (best == npos || s < best_size) {
          best = i;
          best_size = s;
        }
      }
      return best;
    }
    case PivotStrategy::Rarest: {
      excluded = complement_is_facet(mat);
      std::vector<std::uint32_t> levels;
      for (std::size_t v = 0; v < counts.size(); ++v)
        if (popular_candidate(v)) levels.push_back(counts[v]);
      std::sort(levels.begin(), levels.end(), std::greater<>());
      levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
      std::vector<std::size_t> alive(m);
      for (std::size_t i = 0; i < m; ++i) alive[i] = i;
      std::vector<Word> level_mask(mat.stride());
      for (std::uint32_t level : levels) {
        if (alive.size() == 1) break;
        std::fill(level_mask.begin(), level_mask.end(), 0);
        for (std::size_t v = 0; v < counts.size(); ++v)
          if (counts[v] == level && popular_candidate(v)) detail::set_bit(level_mask, v);
        std::vector<std::size_t> lacking(alive.size());
        std::size_t best = 0;
        for (std::size_t k = 0; k < alive.size(); ++k) {
          const auto r = mat.row(alive[k]);
          std::size_t c = 0;
          for (std::size_t w = 0; w < r.size(); ++w) c += static_cast<std::size_t>(std::popcount(level_mask[w] & ~r[w]));
          lacking[k] = c;
          best = std::max(best, c);
        }
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < alive.size(); ++k)
          if (lacking[k] == best) next.push_back(alive[k]);
        alive.swap(next);
      }
      return alive.front();
    }
    default:
      throw InputError("pivot strategy " + std::string(to_string(strategy)) + " is not a DBMS strategy");
  }
}

// ---------------------------------------------------------------------------
// Splits.

std::pair<RowMatrix, RowMatrix> bcrt_branches(const RowMatrix& mat, std::span<const Word> sigma) {
  // Delta minus comp(sigma): keep sigma's columns.
  std::vector<char> touched(mat.rows(), 0);
  for (std::size_t i = 0; i < mat.rows(); ++i) touched[i] = !detail::is_subset(mat.row(i), sigma);
  RowMatrix first = detail::compact_columns(mat, sigma);
  detail::keep_maximal(first, touched);

  // Delta union pows(sigma).
  RowMatrix second(mat.cols(), 0);
  second.reserve_rows(mat.rows() + 1);
  for (std::size_t i = 0; i < mat.rows(); ++i)
    if (touched[i]) second.push_row(mat.row(i));
  second.push_row(sigma);
  return {std::move(first), std::move(second)};
}

std::pair<RowMatrix, RowMatrix> dbms_branches(const RowMatrix& mat, std::size_t f) {
  return {without_row(mat, f), link_of_facet(mat, f)};
}

void check_bcrt_pivot(const RowMatrix& mat, std::span<const Word> sigma) {
  if (detail::popcount(sigma) == mat.cols()) throw InternalError("BCRT pivot equals the vertex set");
  if (detail::contained_in_some_row(mat, sigma)) throw InternalError("BCRT pivot is already a face");
}

// ---------------------------------------------------------------------------
// The engine proper.

class Engine {
public:
  explicit Engine(const EngineConfig& cfg) : cfg_(cfg) {}

  EulerValue run(RowMatrix root, bool is_root, std::uint64_t path) {
    struct Task {
      RowMatrix mat;
      EulerValue coeff;
      std::uint64_t path;
      bool root;
    };
    std::vector<Task> stack;
    stack.push_back({std::move(root), EulerValue(1), path, is_root});
    EulerValue total(0);

    while (!stack.empty()) {
      Task task = std::move(stack.back());
      stack.pop_back();
      ++stats.nodes_expanded;
      RowMatrix& mat = task.mat;

      if (simplify_matrix(mat, true, &stats.abundant_eliminations) < 0) task.coeff = -task.coeff;
      if (auto t = trivial_base_case(mat)) {
        record(t->kind);
        total += task.coeff * EulerValue(t->value);
        continue;
      }

      const bool try_independence =
          task.root ? cfg_.use_independence_at_root : cfg_.use_independence_interior;
      if (try_independence && mat.rows() >= 2) {
        const Complex psi(mat, true);
        if (auto pair = find_independent_pair(psi)) {
          ++stats.independence_splits;
          auto [left, right] = split_independent(psi, *pair);
          const EulerValue left_value = run(left.matrix(), false, child_path(task.path, 2));
          if (left_value != EulerValue(0))
            stack.push_back({right.matrix(), task.coeff * left_value, child_path(task.path, 3), false});
          continue;
        }
      }

      if (cfg_.use_nerve && wants_nerve(mat)) {
        const std::size_t before = sensitive_size(mat);
        mat = nerve(Complex(std::move(mat), true)).matrix();
        ++stats.nerve_applications;
        if (cfg_.verify_measures && sensitive_size(mat) >= before)
          throw InternalError("nerve did not reduce the sensitive dimension");
        if (simplify_matrix(mat, true, &stats.abundant_eliminations) < 0) task.coeff = -task.coeff;
      }

      const auto counts = detail::column_counts(mat);
      if (auto b = base_case(mat, counts)) {
        record(b->kind);
        total += task.coeff * EulerValue(b->value);
        continue;
      }

      PivotRng rng(task.path);
      if (cfg_.algorithm == Algorithm::Dbms) {
        const std::size_t f = pivot_dbms(mat, cfg_.pivot, rng);
        auto [first, second] = dbms_branches(mat, f);
        if (cfg_.verify_measures && (first.rows() >= mat.rows() || second.rows() >= mat.rows()))
          throw InternalError("DBMS split did not reduce the facet count");
        stack.push_back({std::move(second), -task.coeff, child_path(task.path, 1), false});
        stack.push_back({std::move(first), task.coeff, child_path(task.path, 0), false});
      } else {
        const auto sigma = pivot_bcrt(mat, cfg_.pivot, rng);
        if (cfg_.verify_measures) check_bcrt_pivot(mat, sigma);
        auto [first, second] = bcrt_branches(mat, sigma);
        if (cfg_.verify_measures) {
          // The second branch adds the non-face sigma and keeps every face.
          for (std::size_t i = 0; i < mat.rows(); ++i)
            if (!detail::contained_in_some_row(second, mat.row(i)))
              throw InternalError("BCRT split lost a face");
          if (first.cols() >= mat.cols()) throw InternalError("BCRT split did not drop a vertex");
        }
        stack.push_back({std::move(second), task.coeff, child_path(task.path, 1), false});
        stack.push_back({std::move(first), task.coeff, child_path(task.path, 0), false});
      }
    }
    return total;
  }

  EngineStats stats;

private:
  bool wants_nerve(const RowMatrix& mat) const {
    return cfg_.algorithm == Algorithm::Dbms ? mat.rows() > mat.cols() : mat.cols() > mat.rows();
  }
  std::size_t sensitive_size(const RowMatrix& mat) const {
    return cfg_.algorithm == Algorithm::Dbms ? mat.rows() : mat.cols();
  }

  void record(BaseKind kind) {
    auto& b = stats.base_cases;
    switch (kind) {
      case BaseKind::Void: ++b.void_complex; break;
      case BaseKind::EmptyFace: ++b.empty_face; break;
      case BaseKind::Cone: ++b.cone; break;
      case BaseKind::Codisjoint: ++b.codisjoint; break;
      case BaseKind::Two: ++b.two_facets; break;
      case BaseKind::Three: ++b.three_facets; break;
      case BaseKind::Four: ++b.four_facets; break;
    }
  }

  EngineConfig cfg_;
};

void check_face(const Complex& delta, const Face& f) {
  if (f.universe() != delta.universe()) throw InputError("pivot over a different universe");
}

}  // namespace

std::string_view to_string(Algorithm a) { return a == Algorithm::Bcrt ? "bcrt" : "dbms"; }

std::string_view to_string(PivotStrategy p) {
  for (const auto& np : kPivotNames)
    if (np.strategy == p) return np.name;
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s == "bcrt") return Algorithm::Bcrt;
  if (s == "dbms") return Algorithm::Dbms;
  return std::nullopt;
}

std::optional<PivotStrategy> parse_pivot(std::string_view s) {
  for (const auto& np : kPivotNames)
    if (np.name == s) return np.strategy;
  return std::nullopt;
}

bool strategy_supported(Algorithm a, PivotStrategy p) {
  switch (p) {
    case PivotStrategy::PopVar:
    case PivotStrategy::RareVar:
    case PivotStrategy::Random:
      return true;
    case PivotStrategy::PopGcd:
      return a == Algorithm::Bcrt;
    case PivotStrategy::MaxSupp:
    case PivotStrategy::MinSupp:
    case PivotStrategy::Rarest:
    case PivotStrategy::RareMax:
      return a == Algorithm::Dbms;
  }
  return false;
}

PivotStrategy default_pivot(Algorithm a) {
  return a == Algorithm::Bcrt ? PivotStrategy::PopVar : PivotStrategy::RareMax;
}

EulerResult euler(const Complex& delta, const EngineConfig& cfg) {
  if (!strategy_supported(cfg.algorithm, cfg.pivot))
    throw InputError("pivot strategy " + std::string(to_string(cfg.pivot)) + " is not available for " +
                     std::string(to_string(cfg.algorithm)));
  const auto start = std::chrono::steady_clock::now();
  Engine engine(cfg);
  EulerResult result;
  result.value = engine.run(delta.matrix(), true, splitmix64(cfg.seed));
  result.stats = engine.stats;
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::optional<Simplified> simplify_step(const Complex& delta) {
  RowMatrix mat = delta.matrix();
  const bool dropped = drop_unused(mat);
  bool eliminated = false;
  if (mat.rows() >= 2) eliminated = eliminate_abundant(mat, detail::column_counts(mat));
  if (!dropped && !eliminated) return std::nullopt;
  return Simplified{Complex(std::move(mat), true), eliminated ? -1 : 1};
}

Simplified simplify(const Complex& delta) {
  RowMatrix mat = delta.matrix();
  const int sign = simplify_matrix(mat, false, nullptr);
  return {Complex(std::move(mat), true), sign};
}

std::optional<EulerValue> try_base_case(const Complex& delta) {
  const auto counts = detail::column_counts(delta.matrix());
  if (auto b = base_case(delta.matrix(), counts)) return EulerValue(b->value);
  return std::nullopt;
}

Face select_pivot_bcrt(const Complex& delta, PivotStrategy strategy, PivotRng& rng) {
  if (!strategy_supported(Algorithm::Bcrt, strategy))
    throw InputError("pivot strategy " + std::string(to_string(strategy)) + " is not a BCRT strategy");
  const auto sigma = pivot_bcrt(delta.matrix(), strategy, rng);
  return Face::from_words(delta.universe(), sigma);
}

std::size_t select_pivot_dbms(const Complex& delta, PivotStrategy strategy, PivotRng& rng) {
  if (!strategy_supported(Algorithm::Dbms, strategy))
    throw InputError("pivot strategy " + std::string(to_string(strategy)) + " is not a DBMS strategy");
  return pivot_dbms(delta.matrix(), strategy, rng);
}

std::pair<Complex, Complex> split_bcrt(const Complex& delta, const Face& sigma) {
  check_face(delta, sigma);
  check_bcrt_pivot(delta.matrix(), sigma.words());
  auto [first, second] = bcrt_branches(delta.matrix(), sigma.words());
  return {Complex(std::move(first), true), Complex(std::move(second), true)};
}

std::pair<Complex, Complex> split_dbms(const Complex& delta, std::size_t facet) {
  if (delta.num_facets() < 2) throw InternalError("DBMS split needs at least two facets");
  if (facet >= delta.num_facets()) throw InputError("DBMS pivot index out of range");
  auto [first, second] = dbms_branches(delta.matrix(), facet);
  return {Complex(std::move(first), true), Complex(std::move(second), true)};
}

}  // namespace eulerchar
