#include "pcpkg/fusion/Vocabulary.h"

#include <algorithm>

namespace pcpkg::fusion {

namespace {

bool isPropertyType(const std::string& iri) {
  return iri == rdf::vocab::kRdfProperty || iri == rdf::vocab::kOwlObjectProperty ||
         iri == rdf::vocab::kOwlDatatypeProperty || iri == rdf::vocab::kOwlAnnotationProperty;
}

bool isClassType(const std::string& iri) {
  return iri == rdf::vocab::kRdfsClass || iri == rdf::vocab::kOwlClass;
}

std::set<std::string> localNames(const std::set<std::string>& iris) {
  std::set<std::string> out;
  for (const auto& iri : iris) out.insert(localName(iri));
  return out;
}

}  // namespace

std::string localName(std::string_view iri) {
  auto cut = iri.find_last_of("#/");
  if (cut == std::string_view::npos) return std::string(iri);
  return std::string(iri.substr(cut + 1));
}

bool isBuiltinIri(std::string_view iri) {
  for (std::string_view ns : {rdf::vocab::kRdf, rdf::vocab::kRdfs, rdf::vocab::kOwl,
                              rdf::vocab::kXsd}) {
    if (iri.starts_with(ns)) return true;
  }
  return false;
}

Vocabulary extractVocabulary(const rdf::Graph& graph) {
  Vocabulary v;
  for (const rdf::Triple& t : graph.triples()) {
    v.properties.insert(t.predicate.value());
    if (t.predicate.value() != rdf::vocab::kRdfType || !t.object.isIri()) continue;
    const std::string& type = t.object.value();
    if (isPropertyType(type)) {
      if (t.subject.isIri()) v.properties.insert(t.subject.value());
    } else if (isClassType(type)) {
      if (t.subject.isIri()) v.classes.insert(t.subject.value());
    } else {
      v.classes.insert(type);
    }
  }
  return v;
}

OverlapStats computeOverlap(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> na = localNames(a);
  std::set<std::string> nb = localNames(b);
  std::vector<std::string> shared;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(shared));
  OverlapStats s;
  s.joint = shared.size();
  s.unionA = na.size();
  s.unionB = nb.size();
  s.disjointA = s.unionA - s.joint;
  s.disjointB = s.unionB - s.joint;
  return s;
}

std::vector<SubsetCounts> vocabularyStatistics(std::span<const rdf::Graph> graphs) {
  std::vector<SubsetCounts> rows;
  Vocabulary all;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Vocabulary v = extractVocabulary(graphs[i]);
    rows.push_back({graphs[i].name().value_or("graph" + std::to_string(i + 1)),
                    v.properties.size(), v.classes.size()});
    all.properties.merge(v.properties);
    all.classes.merge(v.classes);
  }
  rows.push_back({"total", all.properties.size(), all.classes.size()});
  return rows;
}

}  // namespace pcpkg::fusion
