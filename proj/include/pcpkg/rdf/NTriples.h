#pragma once

#include <filesystem>
#include <string>

#include "pcpkg/rdf/Graph.h"

namespace pcpkg::rdf {

// Canonical N-Triples: blank nodes relabelled _:b0, _:b1, ... from their
// sorted neighbourhood signatures, one triple per line, lines sorted by byte
// value, LF endings. Two graphs with the same triples produce identical text
// regardless of insertion order.
std::string serializeCanonical(const Graph& graph);

// Copy of `graph` with blank nodes relabelled b0, b1, ... as in
// serializeCanonical. Applying it twice gives the same graph.
Graph canonicalize(const Graph& graph);

// N-Triples lines sorted by byte value, blank-node labels kept as they are.
std::string serializeSorted(const Graph& graph);

void writeCanonical(const Graph& graph, const std::filesystem::path& path);

// Equality up to blank-node renaming, decided on canonical serializations.
// Exact for graphs without blank-node-only cycles.
bool isomorphic(const Graph& a, const Graph& b);

// Compacts an IRI to prefix:local using the longest matching namespace, or
// returns <iri> when no prefix applies or the local part is not a plain name.
std::string compactIri(const std::string& iri, const PrefixMap& prefixes);

// Turtle-style rendering of a term for human-readable output: prefixed
// names, bare integers, "lex"@lang and "lex"^^prefix:type.
std::string renderTerm(const Term& term, const PrefixMap& prefixes);

}  // namespace pcpkg::rdf
