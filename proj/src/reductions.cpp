#include "eulerchar/reductions.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <sstream>

#include "eulerchar/errors.hpp"

namespace eulerchar::reductions {

using detail::RowMatrix;

void CnfFormula::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    if (clauses[j].empty()) throw InputError("clause " + std::to_string(j + 1) + " is empty");
    for (const Literal& lit : clauses[j])
      if (lit.var >= num_vars)
        throw InputError("clause " + std::to_string(j + 1) + " uses variable " + std::to_string(lit.var + 1) +
                         " beyond the declared " + std::to_string(num_vars));
  }
}

Graph sat_to_graph(const CnfFormula& f) {
  f.validate();
  Graph g;
  const std::size_t n = f.num_vars;
  g.num_vertices = 3 * n + f.clauses.size();
  for (std::size_t i = 0; i < n; ++i) {
    g.edges.emplace_back(3 * i, 3 * i + 1);
    g.edges.emplace_back(3 * i, 3 * i + 2);
    g.edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (const Literal& lit : f.clauses[j]) g.edges.emplace_back(3 * lit.var + (lit.positive ? 0 : 1), 3 * n + j);
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

Complex graph_to_complex(const Graph& g) {
  if (g.edges.empty()) throw InputError("graph_to_complex: graph has no edges");
  RowMatrix mat(g.num_vertices, 0);
  mat.reserve_rows(g.edges.size());
  const Face all = Face::full(g.num_vertices);
  for (const auto& [u, v] : g.edges) {
    if (u == v || u >= g.num_vertices || v >= g.num_vertices) throw InputError("graph_to_complex: bad edge");
    Face f = all;
    f.erase(u);
    f.erase(v);
    mat.push_row(f.words());
  }
  // Distinct edges give distinct, equal-size facets: already an antichain.
  return Complex(std::move(mat), true);
}

std::uint64_t count_sat_bruteforce(const CnfFormula& f) {
  f.validate();
  if (f.num_vars > kMaxBruteForceVars)
    throw CapacityError("brute-force #SAT limited to " + std::to_string(kMaxBruteForceVars) + " variables");
  std::uint64_t count = 0;
  const std::uint64_t assignments = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    const bool sat = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(),
                         [&](const Literal& lit) { return (((a >> lit.var) & 1) != 0) == lit.positive; });
    });
    if (sat) ++count;
  }
  return count;
}

SatComplex sat_to_complex(const CnfFormula& f) {
  const Graph g = sat_to_graph(f);
  // #sat = (-1)^vars * P(indep) and P(indep) = (-1)^|V| * chi with
  // |V| = 3 * vars + clauses, so the sign is (-1)^clauses.
  const int sign = (f.clauses.size() % 2 == 0) ? 1 : -1;
  return {graph_to_complex(g), sign};
}

std::int64_t independent_set_parity(const Graph& g) {
  const std::size_t n = g.num_vertices;
  if (n > 25) throw CapacityError("independent_set_parity limited to 25 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::int64_t p = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool independent = true;
    for (std::uint32_t rest = s; rest && independent; rest &= rest - 1)
      independent = (adj[static_cast<std::size_t>(std::countr_zero(rest))] & s) == 0;
    if (independent) p += (std::popcount(s) % 2 == 0) ? 1 : -1;
  }
  return p;
}

namespace {

Complex points(std::size_t count) {
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t i = 0; i < count; ++i) faces.push_back({i});
  return make_complex(count, faces);
}

Complex triangle_boundary() { return make_complex(3, {{0, 1}, {0, 2}, {1, 2}}); }

// Join of n copies of three points; chi = 2^n.
Complex power_of_two(std::size_t n) {
  Complex psi = points(3);
  for (std::size_t i = 1; i < n; ++i) psi = join(psi, points(3));
  return psi;
}

}  // namespace

Complex negate_euler(const Complex& delta) {
  if (delta.is_void()) throw InputError("negate_euler: void complex");
  return join(delta, triangle_boundary());
}

Complex complex_with_euler(std::int64_t k) {
  if (k == std::numeric_limits<std::int64_t>::min()) throw InputError("complex_with_euler: |k| must be below 2^63");
  if (k < 0) return negate_euler(complex_with_euler(-k));
  if (k == 0) return Complex::void_complex(0);
  if (k == 1) return points(2);

  // Disjoint union of one summand per set bit; each of the w summands is
  // non-void, so chi(union) = k + (w - 1). The correction Phi has
  // chi = -w and brings the total back to k.
  std::vector<Complex> parts;
  const auto uk = static_cast<std::uint64_t>(k);
  for (std::size_t bit = 0; bit < 64; ++bit) {
    if (!((uk >> bit) & 1)) continue;
    parts.push_back(bit == 0 ? points(2) : power_of_two(bit));
  }
  const std::size_t w = parts.size();
  Complex result = parts.front();
  for (std::size_t i = 1; i < w; ++i) result = disjoint_union(result, parts[i]);
  const Complex phi = join(points(w + 1), triangle_boundary());
  return disjoint_union(result, phi);
}

std::uint64_t construction_bound(std::int64_t k) {
  if (k == 0) return 7;
  const std::uint64_t a = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  const std::uint64_t l = static_cast<std::uint64_t>(std::bit_width(a - 1));
  return 2 * l * l + 3 * l + 7;
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (have_header || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
        throw InputError("DIMACS line " + std::to_string(line_no) + ": bad problem line");
      f.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw InputError("DIMACS line " + std::to_string(line_no) + ": clause before 'p cnf' header");
    ls.clear();
    ls.str(line);
    long long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        if (current.empty()) throw InputError("DIMACS line " + std::to_string(line_no) + ": empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > static_cast<long long>(f.num_vars))
        throw InputError("DIMACS line " + std::to_string(line_no) + ": variable " + std::to_string(var) +
                         " out of range");
      current.push_back({static_cast<std::size_t>(var - 1), lit > 0});
    }
    if (!ls.eof()) throw InputError("DIMACS line " + std::to_string(line_no) + ": unexpected token");
  }
  if (!have_header) throw InputError("DIMACS: missing 'p cnf' header");
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (f.clauses.size() != declared_clauses)
    throw InputError("DIMACS: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  return f;
}

std::string format_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (const Literal& lit : clause) os << (lit.positive ? "" : "-") << lit.var + 1 << ' ';
    os << "0\n";
  }
  return os.str();
}

}  // namespace eulerchar::reductions
