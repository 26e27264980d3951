#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pcpkg/rdf/Graph.h"
#include "pcpkg/rdf/Turtle.h"
#include "support/Fixtures.h"
#include "support/RandomGraph.h"

using namespace pcpkg::rdf;

namespace {
const std::string kHelmstedt = "http://uni-helmstedt.hab.de/ontology#";

std::vector<Triple> linearScan(const Graph& g, const std::optional<Term>& s,
                               const std::optional<Term>& p,
                               const std::optional<Term>& o) {
  std::vector<Triple> out;
  for (const Triple& t : g.triples()) {
    if ((!s || t.subject == *s) && (!p || t.predicate == *p) &&
        (!o || t.object == *o)) {
      out.push_back(t);
    }
  }
  return out;
}
}  // namespace

TEST(GraphTest, MatchOnEmptyGraph) {
  Graph g;
  EXPECT_TRUE(g.match(std::nullopt, std::nullopt, std::nullopt).empty());
}

TEST(GraphTest, MatchSubjectAndPredicate) {
  Graph g = parseTurtleFile(pcpkg::testkit::fixture("listing3_helmstedt.ttl"));
  auto hits = g.match(Term::iri(kHelmstedt + "13084"), Term::iri(vocab::kRdfsLabel),
                      std::nullopt);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].object, Term::literal("Andreas Heinrich Matthias"));
}

TEST(GraphTest, InsertIsIdempotent) {
  Graph g;
  Triple t(Term::iri("http://x/s"), Term::iri("http://x/p"), Term::literal("o"));
  EXPECT_TRUE(g.insert(t));
  EXPECT_FALSE(g.insert(t));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.erase(t));
  EXPECT_FALSE(g.erase(t));
  EXPECT_TRUE(g.empty());
  EXPECT_TRUE(g.match(std::nullopt, std::nullopt, std::nullopt).empty());
}

TEST(GraphTest, PrefixRebindingKeepsOneNamespace) {
  Graph g;
  g.setPrefix("ex", "http://a/");
  g.setPrefix("ex", "http://b/");
  EXPECT_EQ(g.prefixes().size(), 1u);
  EXPECT_EQ(g.prefixes().at("ex"), "http://b/");
}

TEST(GraphTest, EqualityIsTripleSetEquality) {
  Graph a("http://x/g1");
  Graph b("http://x/g2");
  Triple t1(Term::iri("http://x/s"), Term::iri("http://x/p"), Term::literal("1"));
  Triple t2(Term::iri("http://x/s"), Term::iri("http://x/p"), Term::literal("2"));
  a.insert(t1);
  a.insert(t2);
  b.insert(t2);
  EXPECT_NE(a, b);
  b.insert(t1);
  EXPECT_EQ(a, b);
}

// Every combination of bound positions, on random graphs, agrees with a
// linear filter over the triple set.
TEST(GraphTest, MatchEqualsLinearScan) {
  std::mt19937 rng(20240611);
  auto pools = pcpkg::testkit::makePools(8, 4, 6);
  for (int round = 0; round < 200; ++round) {
    Graph g = pcpkg::testkit::randomGraph(pools, 60, rng);
    for (int q = 0; q < 16; ++q) {
      Triple probe = pcpkg::testkit::randomTriple(pools, rng);
      int mask = q % 8;
      std::optional<Term> s, p, o;
      if (mask & 1) s = probe.subject;
      if (mask & 2) p = probe.predicate;
      if (mask & 4) o = probe.object;
      ASSERT_EQ(g.match(s, p, o), linearScan(g, s, p, o)) << "mask " << mask;
    }
  }
}

TEST(GraphTest, UnionOfGraphs) {
  Graph a = parseTurtleFile(pcpkg::testkit::fixture("listing2_leipzig.ttl"));
  Graph b = parseTurtleFile(pcpkg::testkit::fixture("listing3_helmstedt.ttl"));
  std::vector<Graph> both{a, b, a};
  Graph u = unionOf(both);
  EXPECT_EQ(u.size(), 6u);
  EXPECT_EQ(u.prefixes().count("leipzig"), 1u);
  EXPECT_EQ(u.prefixes().count("helmstedt"), 1u);
}
