#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcpkg/rdf/Graph.h"

namespace pcpkg::fusion {

struct Vocabulary {
  std::set<std::string> properties;
  std::set<std::string> classes;
};

// Properties are every predicate in use plus subjects typed rdf:Property or
// owl:{Object,Datatype,Annotation}Property. Classes are every rdf:type object
// plus subjects typed rdfs:Class or owl:Class. The meta-types themselves are
// not counted as classes.
Vocabulary extractVocabulary(const rdf::Graph& graph);

// Part of the IRI after the last '#' or '/'; the whole IRI if neither occurs.
std::string localName(std::string_view iri);

// True for IRIs in the rdf, rdfs, owl and xsd namespaces.
bool isBuiltinIri(std::string_view iri);

struct OverlapStats {
  std::size_t joint = 0;
  std::size_t disjointA = 0;
  std::size_t disjointB = 0;
  std::size_t unionA = 0;
  std::size_t unionB = 0;

  friend bool operator==(const OverlapStats&, const OverlapStats&) = default;
};

// Compares two term sets by case-sensitive local name. Each side is first
// reduced to its set of local names, so unionA is the number of distinct
// local names in `a`.
OverlapStats computeOverlap(const std::set<std::string>& a, const std::set<std::string>& b);

struct SubsetCounts {
  std::string name;
  std::size_t properties = 0;
  std::size_t classes = 0;
};

// One row per input graph followed by a row named "total" for the union of
// all inputs, deduplicated by full IRI. The total can be smaller than the
// column sums whenever subsets share terms.
std::vector<SubsetCounts> vocabularyStatistics(std::span<const rdf::Graph> graphs);

}  // namespace pcpkg::fusion
