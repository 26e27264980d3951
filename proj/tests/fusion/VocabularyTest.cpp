#include <gtest/gtest.h>

#include <random>

#include "pcpkg/fusion/Vocabulary.h"
#include "pcpkg/rdf/Turtle.h"
#include "support/Fixtures.h"

namespace pcpkg::fusion {
namespace {

using rdf::Term;
using rdf::Triple;

const std::string kLeipzig = "http://uni-leipzig.de/unikat/ontology#";
const std::string kHelmstedt = "http://uni-helmstedt.hab.de/ontology#";

// Straight from the definition: strip everything up to the last '#' or '/',
// then count names by pairwise comparison.
OverlapStats bruteOverlap(const std::set<std::string>& a, const std::set<std::string>& b) {
  auto strip = [](const std::string& iri) {
    std::size_t cut = 0;
    for (std::size_t i = 0; i < iri.size(); ++i) {
      if (iri[i] == '#' || iri[i] == '/') cut = i + 1;
    }
    return iri.substr(cut);
  };
  auto names = [&](const std::set<std::string>& s) {
    std::vector<std::string> out;
    for (const auto& iri : s) {
      std::string n = strip(iri);
      bool seen = false;
      for (const auto& o : out) seen = seen || o == n;
      if (!seen) out.push_back(n);
    }
    return out;
  };
  auto na = names(a), nb = names(b);
  OverlapStats s;
  for (const auto& x : na) {
    bool inB = false;
    for (const auto& y : nb) inB = inB || x == y;
    (inB ? s.joint : s.disjointA)++;
  }
  s.disjointB = nb.size() - s.joint;
  s.unionA = na.size();
  s.unionB = nb.size();
  return s;
}

TEST(VocabularyTest, EmptyGraph) {
  Vocabulary v = extractVocabulary(rdf::Graph());
  EXPECT_TRUE(v.properties.empty());
  EXPECT_TRUE(v.classes.empty());
}

TEST(VocabularyTest, ListingTwoPredicates) {
  Vocabulary v = extractVocabulary(rdf::parseTurtleFile(testkit::fixture("listing2_leipzig.ttl")));
  EXPECT_EQ(v.properties, (std::set<std::string>{kLeipzig + "surname", kLeipzig + "forename",
                                                  rdf::vocab::kRdfsLabel}));
  EXPECT_TRUE(v.classes.empty());
}

TEST(VocabularyTest, DeclaredTermsCountWithoutUse) {
  rdf::Graph g;
  auto type = Term::iri(rdf::vocab::kRdfType);
  g.insert(Triple(Term::iri("http://x/p"), type, Term::iri(rdf::vocab::kOwlObjectProperty)));
  g.insert(Triple(Term::iri("http://x/C"), type, Term::iri(rdf::vocab::kOwlClass)));
  g.insert(Triple(Term::iri("http://x/i"), type, Term::iri("http://x/D")));
  Vocabulary v = extractVocabulary(g);
  EXPECT_EQ(v.properties, (std::set<std::string>{"http://x/p", rdf::vocab::kRdfType}));
  EXPECT_EQ(v.classes, (std::set<std::string>{"http://x/C", "http://x/D"}));
}

TEST(VocabularyTest, FixtureCounts) {
  Vocabulary a = extractVocabulary(rdf::parseTurtleFile(testkit::fixture("leipzig_vocabulary.ttl")));
  Vocabulary b =
      extractVocabulary(rdf::parseTurtleFile(testkit::fixture("helmstedt_vocabulary.ttl")));
  EXPECT_EQ(a.properties.size(), 72u);
  EXPECT_EQ(a.classes.size(), 39u);
  EXPECT_EQ(b.properties.size(), 56u);
  EXPECT_EQ(b.classes.size(), 21u);
}

TEST(VocabularyTest, FixtureOverlapMatchesTables) {
  Vocabulary a = extractVocabulary(rdf::parseTurtleFile(testkit::fixture("leipzig_vocabulary.ttl")));
  Vocabulary b =
      extractVocabulary(rdf::parseTurtleFile(testkit::fixture("helmstedt_vocabulary.ttl")));
  EXPECT_EQ(computeOverlap(a.properties, b.properties), (OverlapStats{21, 51, 35, 72, 56}));
  EXPECT_EQ(computeOverlap(a.classes, b.classes), (OverlapStats{16, 23, 5, 39, 21}));
}

TEST(VocabularyTest, IdenticalSets) {
  std::set<std::string> s = {"http://a/x", "http://a/y", "http://a#z"};
  EXPECT_EQ(computeOverlap(s, s), (OverlapStats{3, 0, 0, 3, 3}));
  EXPECT_EQ(computeOverlap({}, {}), OverlapStats{});
}

TEST(VocabularyTest, LocalNameComparisonIsCaseSensitive) {
  auto s = computeOverlap({"http://a#Name"}, {"http://b/name"});
  EXPECT_EQ(s.joint, 0u);
}

TEST(VocabularyTest, LocalName) {
  EXPECT_EQ(localName("http://a/b#c"), "c");
  EXPECT_EQ(localName("http://a/b/c"), "c");
  EXPECT_EQ(localName("urn:x"), "urn:x");
}

TEST(VocabularyTest, RandomOverlapAgreesWithOracleAndIsSymmetric) {
  std::mt19937 rng(20240611);
  const std::vector<std::string> namespaces = {"http://a.org/ns#", "http://b.org/onto/",
                                               "http://c.org#"};
  for (int round = 0; round < 1500; ++round) {
    auto draw = [&] {
      std::set<std::string> s;
      std::size_t n = rng() % 30;
      for (std::size_t i = 0; i < n; ++i) {
        s.insert(namespaces[rng() % namespaces.size()] + "t" + std::to_string(rng() % 25));
      }
      return s;
    };
    auto a = draw(), b = draw();
    OverlapStats ab = computeOverlap(a, b);
    OverlapStats ba = computeOverlap(b, a);
    ASSERT_EQ(ab, bruteOverlap(a, b)) << "round " << round;
    ASSERT_EQ(ab.unionA, ab.joint + ab.disjointA);
    ASSERT_EQ(ab.unionB, ab.joint + ab.disjointB);
    ASSERT_EQ(ba.joint, ab.joint);
    ASSERT_EQ(ba.disjointA, ab.disjointB);
    ASSERT_EQ(ba.disjointB, ab.disjointA);
  }
}

TEST(VocabularyTest, StatisticsReportSubsetsAndDedupedTotal) {
  std::vector<rdf::Graph> graphs;
  graphs.push_back(rdf::parseTurtleFile(testkit::fixture("leipzig_vocabulary.ttl")));
  graphs.back().setName("leipzig");
  graphs.push_back(rdf::parseTurtleFile(testkit::fixture("helmstedt_vocabulary.ttl")));
  graphs.back().setName("helmstedt");
  auto rows = vocabularyStatistics(graphs);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].name, "leipzig");
  EXPECT_EQ(rows[0].properties, 72u);
  EXPECT_EQ(rows[1].classes, 21u);
  EXPECT_EQ(rows[2].name, "total");
  // rdf:type, rdfs:label and rdfs:comment are shared by IRI; the catalogue
  // terms live in different namespaces.
  EXPECT_EQ(rows[2].properties, 72u + 56u - 3u);
  EXPECT_EQ(rows[2].classes, 39u + 21u);
}

}  // namespace
}  // namespace pcpkg::fusion
