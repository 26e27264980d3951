#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "pcpkg/rdf/Graph.h"
#include "pcpkg/sparql/Query.h"
#include "pcpkg/sparql/ResultTable.h"

namespace pcpkg::sparql {

// Evaluates `query` over the union of `graphs`.
//
// Triple patterns are joined left to right, each probe answered by the graph
// indexes. BIND(YEAR(...)) drops the solutions whose argument has no leading
// four-digit year. Solutions are a bag until grouping; COUNT counts the
// bound values of its variable per group, and an aggregate query without
// GROUP BY forms a single group only when there is at least one solution.
// ORDER BY keys are followed by the canonical form of the whole row as a
// final tie-breaker, so the output order is fully determined.
ResultTable evaluate(const Query& query, std::span<const rdf::Graph> graphs);
ResultTable evaluate(const Query& query, const rdf::Graph& graph);

// Leading year of a date-like literal: xsd:date, xsd:dateTime, xsd:gYear,
// xsd:gYearMonth or a plain literal of the form YYYY, YYYY-MM or YYYY-MM-DD
// (optionally followed by a time and zone for the dateTime shape).
std::optional<int> extractYear(const rdf::Term& term);

// SPARQL-style ordering of terms: unbound < blank < IRI < literal; numeric
// literals compare by value, other literals by lexical form, datatype, tag.
int compareTerms(const std::optional<rdf::Term>& a, const std::optional<rdf::Term>& b);

}  // namespace pcpkg::sparql
