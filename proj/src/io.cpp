#include "eulerchar/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "eulerchar/errors.hpp"

namespace eulerchar::io {

using detail::RowMatrix;

namespace {

struct Header {
  std::string keyword;
  std::size_t size = 0;
};

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a comment.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + what);
  }

private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::size_t parse_index(const std::string& tok, const LineReader& reader) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) reader.fail("expected a non-negative integer, got '" + tok + "'");
  return v;
}

Header parse_header(const std::string& line, const LineReader& reader) {
  std::istringstream ls(line);
  Header h;
  std::string count, extra;
  if (!(ls >> h.keyword >> count) || (ls >> extra)) reader.fail("expected '<keyword> <count>' header");
  h.size = parse_index(count, reader);
  return h;
}

// Reads rows until end of input into a matrix with `cols` columns.
RowMatrix read_rows(LineReader& reader, std::size_t cols) {
  RowMatrix mat(cols, 0);
  while (auto line = reader.next()) {
    std::istringstream ls(*line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    auto row = mat.push_zero_row();
    if (toks.size() == 1 && toks[0] == "empty") continue;
    for (const auto& t : toks) {
      const std::size_t v = parse_index(t, reader);
      if (v >= cols)
        reader.fail("index " + std::to_string(v) + " out of range for " + std::to_string(cols) + " vertices");
      detail::set_bit(row, v);
    }
  }
  return mat;
}

Document read_text(std::istream& in) {
  LineReader reader(in);
  const auto first = reader.next();
  if (!first) throw InputError("empty document");
  const Header h = parse_header(*first, reader);
  if (h.keyword == "vertices") return Complex(read_rows(reader, h.size));
  if (h.keyword == "vars") return minimalize(read_rows(reader, h.size));
  reader.fail("unknown header keyword '" + h.keyword + "' (expected 'vertices' or 'vars')");
}

void write_rows(std::ostream& out, const RowMatrix& mat) {
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    bool first = true;
    detail::for_each_bit(mat.row(i), [&](std::size_t v) {
      if (!first) out << ' ';
      out << v;
      first = false;
    });
    if (first) out << "empty";
    out << '\n';
  }
}

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
}

RowMatrix json_rows(const nlohmann::json& rows, std::size_t cols) {
  if (!rows.is_array()) throw InputError("JSON: expected an array of index arrays");
  RowMatrix mat(cols, 0);
  for (const auto& r : rows) {
    if (!r.is_array()) throw InputError("JSON: expected an array of indices");
    auto row = mat.push_zero_row();
    for (const auto& v : r) {
      if (!v.is_number_unsigned()) throw InputError("JSON: indices must be non-negative integers");
      const auto idx = v.get<std::size_t>();
      if (idx >= cols) throw InputError("JSON: index " + std::to_string(idx) + " out of range");
      detail::set_bit(row, idx);
    }
  }
  return mat;
}

nlohmann::json rows_json(const RowMatrix& mat) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    auto r = nlohmann::json::array();
    detail::for_each_bit(mat.row(i), [&](std::size_t v) { r.push_back(v); });
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Complex read_complex(std::istream& in) {
  Document doc = read_text(in);
  if (auto* c = std::get_if<Complex>(&doc)) return std::move(*c);
  throw InputError("expected a complex document ('vertices' header)");
}

SquareFreeIdeal read_ideal(std::istream& in) {
  Document doc = read_text(in);
  if (auto* i = std::get_if<SquareFreeIdeal>(&doc)) return std::move(*i);
  throw InputError("expected an ideal document ('vars' header)");
}

Document read_document(std::istream& in) { return read_text(in); }

void write_complex(std::ostream& out, const Complex& delta, const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << "vertices " << delta.universe() << '\n';
  write_rows(out, delta.matrix());
}

void write_ideal(std::ostream& out, const SquareFreeIdeal& ideal, const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << "vars " << ideal.num_vars() << '\n';
  write_rows(out, ideal.matrix());
}

void write_document(std::ostream& out, const Document& doc, const std::vector<std::string>& comments) {
  if (const auto* c = std::get_if<Complex>(&doc))
    write_complex(out, *c, comments);
  else
    write_ideal(out, std::get<SquareFreeIdeal>(doc), comments);
}

Document read_json_document(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("JSON: expected an object");
  auto size_of = [&](const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) throw InputError(std::string("JSON: '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
  };
  if (j.contains("vertices")) {
    const std::size_t n = size_of("vertices");
    return Complex(json_rows(j.contains("facets") ? j.at("facets") : nlohmann::json::array(), n));
  }
  if (j.contains("vars")) {
    const std::size_t n = size_of("vars");
    return minimalize(json_rows(j.contains("generators") ? j.at("generators") : nlohmann::json::array(), n));
  }
  throw InputError("JSON: expected a 'vertices' or 'vars' key");
}

void write_json_document(std::ostream& out, const Document& doc) {
  nlohmann::json j;
  if (const auto* c = std::get_if<Complex>(&doc)) {
    j["vertices"] = c->universe();
    j["facets"] = rows_json(c->matrix());
  } else {
    const auto& ideal = std::get<SquareFreeIdeal>(doc);
    j["vars"] = ideal.num_vars();
    j["generators"] = rows_json(ideal.matrix());
  }
  out << j.dump() << '\n';
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace eulerchar::io
