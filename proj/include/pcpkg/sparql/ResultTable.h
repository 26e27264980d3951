#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcpkg/rdf/Graph.h"
#include "pcpkg/rdf/Term.h"

namespace pcpkg::sparql {

using Row = std::vector<std::optional<rdf::Term>>;

// Tabular query result. Every row has exactly header.size() cells; an
// unbound cell is std::nullopt.
struct ResultTable {
  std::vector<std::string> header;
  std::vector<Row> rows;

  std::size_t columnIndex(const std::string& variable) const;
};

// Aligned plain-text table with Turtle-style cells, followed by a row count.
std::string renderText(const ResultTable& table, const rdf::PrefixMap& prefixes = {});

// RFC 4180 CSV: CRLF line ends, fields quoted when they contain a comma,
// quote or line break. Cells hold the IRI, the lexical form or _:label.
std::string renderCsv(const ResultTable& table);

// CSV field quoting shared by the other CSV writers.
std::string csvField(const std::string& value);

}  // namespace pcpkg::sparql
