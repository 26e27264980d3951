#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pcpkg/rdf/Graph.h"

namespace pcpkg::rdf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token,
             const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

// Parses the supported Turtle subset: @prefix/@base (and the SPARQL-style
// PREFIX/BASE), IRIs, prefixed names, `a`, predicate lists (;), object lists
// (,), string literals with language tag or datatype, numeric and boolean
// literals, and labelled blank nodes. N-Triples is a subset and parses too.
// Collections, anonymous blank nodes and quoted triples are rejected.
Graph parseTurtle(std::string_view text,
                  const std::optional<std::string>& base = std::nullopt);

Graph parseTurtleFile(const std::filesystem::path& path);

// Resolves `reference` against the absolute IRI `base` (RFC 3986, section 5.2).
std::string resolveIri(std::string_view base, std::string_view reference);

}  // namespace pcpkg::rdf
