#pragma once

// Two catalogues of invented persons drawn from small name pools, so that
// many cross pairs share one or more tokens.

#include <random>
#include <string>
#include <vector>

#include "pcpkg/rdf/Graph.h"

namespace pcpkg::testkit {

inline const std::string kLeipzigNs = "http://uni-leipzig.de/unikat/ontology#";
inline const std::string kHelmstedtNs = "http://uni-helmstedt.hab.de/ontology#";

struct PersonCatalogues {
  rdf::Graph leipzig;
  rdf::Graph helmstedt;
};

inline PersonCatalogues syntheticPersons(std::size_t perSide, unsigned seed) {
  static const std::vector<std::string> forenames = {
      "Heinrich", "Matthias", "Andreas", "Johann", "Georg", "Christian", "Friedrich", "Jacob"};
  static const std::vector<std::string> surnames = {
      "Heinrichs", "Matthias", "Schmidt", "Meier", "von Hagen", "Calixt", "Conring", "Meibom"};
  std::mt19937 rng(seed);
  auto pick = [&](const std::vector<std::string>& pool) { return pool[rng() % pool.size()]; };
  auto forename = [&] {
    std::string f = pick(forenames);
    if (rng() % 2) f += (rng() % 3 ? " " : "-") + pick(forenames);
    return f;
  };
  const auto label = rdf::Term::iri(rdf::vocab::kRdfsLabel);
  const auto type = rdf::Term::iri(rdf::vocab::kRdfType);

  PersonCatalogues out;
  for (std::size_t i = 0; i < perSide; ++i) {
    for (int side = 0; side < 2; ++side) {
      const std::string& ns = side == 0 ? kLeipzigNs : kHelmstedtNs;
      rdf::Graph& g = side == 0 ? out.leipzig : out.helmstedt;
      auto person = rdf::Term::iri(ns + "person" + std::to_string(i));
      std::string fn = forename();
      std::string sn = pick(surnames);
      g.insert(rdf::Triple(person, type, rdf::Term::iri(ns + "Person")));
      if (rng() % 5) g.insert(rdf::Triple(person, rdf::Term::iri(ns + "forename"), rdf::Term::literal(fn)));
      if (rng() % 5) g.insert(rdf::Triple(person, rdf::Term::iri(ns + "surname"), rdf::Term::literal(sn)));
      if (rng() % 4) {
        std::string text = rng() % 3 ? fn + " " + sn : sn + ", " + fn;
        g.insert(rdf::Triple(person, label, rdf::Term::literal(text)));
      }
      if (rng() % 6 == 0) {
        g.insert(rdf::Triple(person, label, rdf::Term::langLiteral(pick(surnames), "la")));
      }
    }
  }
  return out;
}

}  // namespace pcpkg::testkit
