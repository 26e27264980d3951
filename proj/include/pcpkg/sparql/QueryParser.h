#pragma once

#include <string_view>

#include "pcpkg/sparql/Query.h"

namespace pcpkg::sparql {

// Parses SELECT queries of the supported subset:
//
//   PREFIX/BASE declarations
//   SELECT * | SELECT (?var | (COUNT(?var) AS ?alias))+
//   WHERE { triple patterns (with `a`, `;` and `,`) and BIND(YEAR(?v) AS ?y) }
//   GROUP BY ?var+   ORDER BY (ASC(?v) | DESC(?v) | ?v)+   LIMIT n
//
// `defaultPrefixes` are visible unless the query redeclares them. `SELECT *`
// expands to the in-scope variables in order of first appearance. Throws
// SyntaxError, UnsupportedFeature or QueryError (for a structurally invalid
// query such as an ungrouped projected variable).
Query parseQuery(std::string_view text,
                 const rdf::PrefixMap& defaultPrefixes = {});

}  // namespace pcpkg::sparql
