#include "eulerchar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerchar/engine.hpp"
#include "eulerchar/errors.hpp"
#include "eulerchar/generators.hpp"
#include "eulerchar/io.hpp"
#include "eulerchar/oracle.hpp"
#include "eulerchar/reductions.hpp"
#include "eulerchar/translation.hpp"

namespace eulerchar::cli {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Reads a file argument; "-" is standard input.
std::string slurp(const std::string& path, const Streams& s) {
  std::ostringstream buf;
  if (path == "-") {
    buf << s.in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

io::Document read_doc(const std::string& path, const Streams& s) {
  std::istringstream text(slurp(path, s));
  return io::is_json_path(path) ? io::read_json_document(text) : io::read_document(text);
}

Complex read_as_complex(const std::string& path, const Streams& s) {
  io::Document doc = read_doc(path, s);
  if (auto* c = std::get_if<Complex>(&doc)) return std::move(*c);
  return ideal_to_complex(std::get<SquareFreeIdeal>(doc));
}

void emit(const std::string& path, const Streams& s, const io::Document& doc,
          const std::vector<std::string>& comments = {}) {
  std::ostringstream text;
  if (io::is_json_path(path))
    io::write_json_document(text, doc);
  else
    io::write_document(text, doc, comments);
  if (path == "-") {
    s.out << text.str();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text.str();
}

struct EulerOptions {
  std::string file;
  std::string algorithm = "dbms";
  std::string pivot;
  std::string nerve = "on";
  std::string independence = "root";
  std::uint64_t seed = 0;
  bool stats = false;
  unsigned repeat = 1;
};

nlohmann::ordered_json stats_json(const EngineConfig& cfg, const EngineStats& st) {
  nlohmann::ordered_json j;
  j["algorithm"] = to_string(cfg.algorithm);
  j["pivot"] = to_string(cfg.pivot);
  j["nodes_expanded"] = st.nodes_expanded;
  const auto& b = st.base_cases;
  j["base_cases"] = {{"void", b.void_complex},    {"empty_face", b.empty_face},     {"cone", b.cone},
                     {"codisjoint", b.codisjoint}, {"two_facets", b.two_facets},     {"three_facets", b.three_facets},
                     {"four_facets", b.four_facets}, {"total", b.total()}};
  j["nerve_applications"] = st.nerve_applications;
  j["abundant_eliminations"] = st.abundant_eliminations;
  j["independence_splits"] = st.independence_splits;
  return j;
}

int cmd_euler(const EulerOptions& o, const Streams& s) {
  const Complex delta = read_as_complex(o.file, s);

  std::optional<EngineConfig> cfg;
  if (o.algorithm == "bcrt" || o.algorithm == "dbms") {
    cfg = EngineConfig::for_algorithm(*parse_algorithm(o.algorithm));
    if (!o.pivot.empty()) {
      const auto p = parse_pivot(o.pivot);
      if (!p) throw InputError("unknown pivot strategy '" + o.pivot + "'");
      cfg->pivot = *p;
    }
    cfg->use_nerve = o.nerve == "on";
    cfg->use_independence_at_root = o.independence != "off";
    cfg->use_independence_interior = o.independence == "all";
    cfg->seed = o.seed;
  }

  std::optional<EulerValue> value;
  EngineStats stats;
  std::vector<double> times_ms;
  for (unsigned r = 0; r < o.repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    EulerResult res;
    if (cfg)
      res = euler(delta, *cfg);
    else if (o.algorithm == "oracle-subsets")
      res.value = oracle::euler_by_subsets(delta);
    else
      res.value = oracle::euler_by_inclusion_exclusion(delta);
    times_ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    if (value && (*value != res.value || !stats.same_counters(res.stats)))
      throw InternalError("repeated runs disagree");
    value = res.value;
    stats = res.stats;
  }

  s.out << *value << '\n';
  if (o.stats) {
    if (cfg)
      s.out << stats_json(*cfg, stats).dump() << '\n';
    else
      s.out << nlohmann::ordered_json{{"algorithm", o.algorithm}}.dump() << '\n';
    std::nth_element(times_ms.begin(), times_ms.begin() + times_ms.size() / 2, times_ms.end());
    s.err << "elapsed_ms " << std::fixed << std::setprecision(3) << times_ms[times_ms.size() / 2];
    if (o.repeat > 1) s.err << " (median of " << o.repeat << ")";
    s.err << '\n';
  }
  return 0;
}

int cmd_reduce(const std::string& file, bool verify, const std::string& output, const Streams& s) {
  std::istringstream text(slurp(file, s));
  const reductions::CnfFormula f = reductions::parse_dimacs(text);
  const reductions::SatComplex sc = reductions::sat_to_complex(f);
  emit(output, s, sc.complex, {"sign " + std::to_string(sc.sign)});
  if (!verify) return 0;
  if (f.num_vars > 20) {
    s.err << "verify skipped: more than 20 variables\n";
    return 0;
  }
  const auto count = reductions::count_sat_bruteforce(f);
  const EulerValue chi = euler(sc.complex).value;
  if (chi * EulerValue(sc.sign) != EulerValue(static_cast<std::int64_t>(count))) {
    s.err << "verify failed: sign * chi = " << chi * EulerValue(sc.sign) << ", satisfying assignments = " << count
          << '\n';
    return 1;
  }
  s.err << "verified: " << count << " satisfying assignments\n";
  return 0;
}

int cmd_fvector(const std::string& file, std::uint64_t limit, const Streams& s) {
  const oracle::FVector fv = oracle::f_vector(read_as_complex(file, s), limit);
  std::size_t len = fv.entries.size();
  while (len > 1 && fv.entries[len - 1] == 0) --len;
  s.out << "f-vector";
  for (std::size_t i = 0; i < len; ++i) s.out << ' ' << fv.entries[i];
  s.out << "\nfaces " << fv.total() << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Streams s{in, out, err};
  CLI::App app{"Reduced Euler characteristic of simplicial complexes", "eulerchar"};
  app.require_subcommand(1);

  std::function<int()> action;

  EulerOptions eo;
  auto* euler_cmd = app.add_subcommand("euler", "Compute the reduced Euler characteristic");
  euler_cmd->add_option("file", eo.file, "Complex or ideal document, '-' for stdin")->required();
  euler_cmd->add_option("--algorithm", eo.algorithm)
      ->check(CLI::IsMember({"bcrt", "dbms", "oracle-subsets", "oracle-ie"}));
  euler_cmd->add_option("--pivot", eo.pivot, "Pivot strategy (default depends on algorithm)");
  euler_cmd->add_option("--nerve", eo.nerve)->check(CLI::IsMember({"on", "off"}));
  euler_cmd->add_option("--independence", eo.independence)->check(CLI::IsMember({"root", "all", "off"}));
  euler_cmd->add_option("--seed", eo.seed);
  euler_cmd->add_flag("--stats", eo.stats, "Print counters as a JSON line; elapsed time goes to stderr");
  euler_cmd->add_option("--repeat", eo.repeat, "Run k times and report the median time")->check(CLI::PositiveNumber);
  euler_cmd->callback([&] { action = [&] { return cmd_euler(eo, s); }; });

  std::string gen_spec, output = "-";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark complex");
  gen_cmd->add_option("spec", gen_spec, "rook:a,b | match:a | nicgraph:a,b | random:n,m[,seed=s]")->required();
  gen_cmd->add_option("-o,--output", output);
  gen_cmd->callback([&] {
    action = [&] {
      const auto spec = generators::parse_spec(gen_spec);
      emit(output, s, generators::generate(spec), {generators::format_spec(spec)});
      return 0;
    };
  });

  std::string file;
  bool verify = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the complex counting satisfying assignments of a CNF");
  reduce_cmd->add_option("cnf", file, "DIMACS file, '-' for stdin")->required();
  reduce_cmd->add_flag("--verify", verify, "Cross-check against brute force (at most 20 variables)");
  reduce_cmd->add_option("-o,--output", output);
  reduce_cmd->callback([&] { action = [&] { return cmd_reduce(file, verify, output, s); }; });

  std::int64_t k = 0;
  auto* construct_cmd = app.add_subcommand("construct-euler", "Emit a complex with the given reduced Euler characteristic");
  construct_cmd->add_option("k", k)->required()->allow_extra_args(false);
  construct_cmd->add_option("-o,--output", output);
  construct_cmd->callback([&] {
    action = [&] {
      emit(output, s, reductions::complex_with_euler(k));
      return 0;
    };
  });

  auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a complex");
  nerve_cmd->add_option("file", file)->required();
  nerve_cmd->add_option("-o,--output", output);
  nerve_cmd->callback([&] {
    action = [&] {
      emit(output, s, nerve(read_as_complex(file, s)));
      return 0;
    };
  });

  auto* transpose_cmd = app.add_subcommand("transpose", "Transpose of an ideal (a complex is read as its ideal)");
  transpose_cmd->add_option("file", file)->required();
  transpose_cmd->add_option("-o,--output", output);
  transpose_cmd->callback([&] {
    action = [&] {
      io::Document doc = read_doc(file, s);
      const SquareFreeIdeal ideal = std::holds_alternative<Complex>(doc) ? complex_to_ideal(std::get<Complex>(doc))
                                                                         : std::get<SquareFreeIdeal>(doc);
      emit(output, s, transpose_ideal(ideal));
      return 0;
    };
  });

  auto* translate_cmd = app.add_subcommand("translate", "Convert a complex to its ideal or back");
  translate_cmd->add_option("file", file)->required();
  translate_cmd->add_option("-o,--output", output);
  translate_cmd->callback([&] {
    action = [&] {
      io::Document doc = read_doc(file, s);
      if (const auto* c = std::get_if<Complex>(&doc))
        emit(output, s, complex_to_ideal(*c));
      else
        emit(output, s, ideal_to_complex(std::get<SquareFreeIdeal>(doc)));
      return 0;
    };
  });

  std::uint64_t face_limit = oracle::kDefaultFaceLimit;
  auto* fvector_cmd = app.add_subcommand("fvector", "Face counts by dimension");
  fvector_cmd->add_option("file", file)->required();
  fvector_cmd->add_option("--limit", face_limit, "Maximum number of faces to enumerate");
  fvector_cmd->callback([&] { action = [&] { return cmd_fvector(file, face_limit, s); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return 2;
  }
}

int run(const std::vector<std::string>& args) { return run(args, std::cin, std::cout, std::cerr); }

}  // namespace eulerchar::cli
