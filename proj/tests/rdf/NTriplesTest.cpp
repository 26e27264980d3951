#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pcpkg/rdf/NTriples.h"
#include "pcpkg/rdf/Turtle.h"
#include "support/Fixtures.h"
#include "support/RandomGraph.h"

using namespace pcpkg::rdf;

TEST(NTriplesTest, EmptyGraphSerializesToEmptyDocument) {
  EXPECT_EQ(serializeCanonical(Graph{}), "");
}

TEST(NTriplesTest, HelmstedtListingIsExpandedAndSorted) {
  Graph g = parseTurtleFile(pcpkg::testkit::fixture("listing3_helmstedt.ttl"));
  EXPECT_EQ(serializeCanonical(g),
            "<http://uni-helmstedt.hab.de/ontology#13084> "
            "<http://uni-helmstedt.hab.de/ontology#forename> \"Andreas Heinrich\" .\n"
            "<http://uni-helmstedt.hab.de/ontology#13084> "
            "<http://uni-helmstedt.hab.de/ontology#surname> \"Matthias\" .\n"
            "<http://uni-helmstedt.hab.de/ontology#13084> "
            "<http://www.w3.org/2000/01/rdf-schema#label> \"Andreas Heinrich Matthias\" .\n");
}

TEST(NTriplesTest, InsertionOrderDoesNotMatter) {
  std::mt19937 rng(7);
  auto pools = pcpkg::testkit::makePools(6, 3, 6);
  for (int round = 0; round < 50; ++round) {
    Graph g = pcpkg::testkit::randomGraph(pools, 40, rng);
    auto triples = g.triples();
    std::shuffle(triples.begin(), triples.end(), rng);
    Graph permuted;
    for (const Triple& t : triples) permuted.insert(t);
    ASSERT_EQ(serializeCanonical(g), serializeCanonical(permuted));
  }
}

TEST(NTriplesTest, BlankNodeLabelsAreCanonical) {
  Graph a = parseTurtle(
      "<http://x/s> <http://x/p> _:one . _:one <http://x/q> \"1\" .\n"
      "<http://x/s> <http://x/p> _:two . _:two <http://x/q> \"2\" .");
  Graph b = parseTurtle(
      "<http://x/s> <http://x/p> _:zz . _:zz <http://x/q> \"2\" .\n"
      "<http://x/s> <http://x/p> _:aa . _:aa <http://x/q> \"1\" .");
  EXPECT_NE(a, b);
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_EQ(serializeCanonical(a), serializeCanonical(b));
  EXPECT_NE(serializeCanonical(a).find("_:b0"), std::string::npos);
}

TEST(NTriplesTest, RoundTripOverFixtureCorpus) {
  for (const auto& path : pcpkg::testkit::fixtureCorpus()) {
    SCOPED_TRACE(path.string());
    Graph g = parseTurtleFile(path);
    std::string canonical = serializeCanonical(g);
    Graph back = parseTurtle(canonical);
    EXPECT_TRUE(isomorphic(g, back));
    EXPECT_EQ(serializeCanonical(back), canonical);
    if (canonical.find("_:") == std::string::npos) {
      EXPECT_EQ(g, back);
    }
  }
}

TEST(NTriplesTest, RenderTermCompactsWithPrefixes) {
  PrefixMap prefixes{{"pcp", "http://purl.org/pcp-on-web/ontology#"},
                     {"xsd", "http://www.w3.org/2001/XMLSchema#"}};
  EXPECT_EQ(renderTerm(Term::iri("http://purl.org/pcp-on-web/ontology#Professor"), prefixes),
            "pcp:Professor");
  EXPECT_EQ(renderTerm(Term::iri("http://other.org/x"), prefixes), "<http://other.org/x>");
  EXPECT_EQ(renderTerm(Term::typedLiteral("1650", vocab::kXsdInteger), prefixes), "1650");
  EXPECT_EQ(renderTerm(Term::typedLiteral("1650-01-01", vocab::kXsdDate), prefixes),
            "\"1650-01-01\"^^xsd:date");
}

TEST(NTriplesTest, CanonicalizeIsIdempotent) {
  // Fourteen interchangeable blank nodes force the label tie-break.
  Graph g;
  for (int i = 0; i < 14; ++i) {
    g.insert(Triple(Term::blank("n" + std::to_string(i)), Term::iri("http://e/p"),
                    Term::literal("same")));
  }
  g.insert(Triple(Term::blank("n3"), Term::iri("http://e/q"), Term::blank("n12")));
  Graph once = canonicalize(g);
  EXPECT_EQ(canonicalize(once), once);
  EXPECT_EQ(serializeSorted(once), serializeCanonical(g));
  EXPECT_TRUE(isomorphic(once, g));
}

TEST(NTriplesTest, SerializeSortedKeepsLabels) {
  Graph g;
  g.insert(Triple(Term::blank("zz"), Term::iri("http://e/p"), Term::literal("x")));
  EXPECT_EQ(serializeSorted(g), "_:zz <http://e/p> \"x\" .\n");
}
