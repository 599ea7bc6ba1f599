#pragma once

// Text and JSON documents.
//
// Complex text format:
//   # optional comment lines
//   vertices <n>
//   <one facet per line, ascending space-separated indices; `empty` is {}>
// Zero facet lines is the void complex. Faces are reduced to their maximal
// elements on input.
//
// Ideal text format:
//   vars <n>
//   <one generator per line, space-separated variable indices; `empty` is 1>
// Generators are minimalized on input.
//
// JSON: {"vertices": n, "facets": [[...], ...]} and
//       {"vars": n, "generators": [[...], ...]}.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "eulerchar/complex.hpp"
#include "eulerchar/translation.hpp"

namespace eulerchar::io {

using Document = std::variant<Complex, SquareFreeIdeal>;

Complex read_complex(std::istream& in);
void write_complex(std::ostream& out, const Complex& delta, const std::vector<std::string>& comments = {});

SquareFreeIdeal read_ideal(std::istream& in);
void write_ideal(std::ostream& out, const SquareFreeIdeal& ideal, const std::vector<std::string>& comments = {});

/// Reads either kind, dispatching on the header keyword.
Document read_document(std::istream& in);
void write_document(std::ostream& out, const Document& doc, const std::vector<std::string>& comments = {});

Document read_json_document(std::istream& in);
void write_json_document(std::ostream& out, const Document& doc);

/// True if the path names a JSON document (by extension).
bool is_json_path(const std::string& path);

}  // namespace eulerchar::io
