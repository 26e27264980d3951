#include <gtest/gtest.h>

#include "pcpkg/sparql/QueryParser.h"
#include "support/Queries.h"

using namespace pcpkg::sparql;
using pcpkg::rdf::Term;

namespace {
const std::string kPcp = "http://purl.org/pcp-on-web/ontology#";

std::string varName(const PatternTerm& t) { return std::get<Variable>(t).name; }
}  // namespace

TEST(QueryParserTest, SelectStarExpandsInFirstAppearanceOrder) {
  Query q = parseQuery("Select * where {?s ?p ?o}");
  ASSERT_EQ(q.patterns.size(), 1u);
  EXPECT_TRUE(q.selectAll);
  EXPECT_EQ(q.header(), (std::vector<std::string>{"s", "p", "o"}));

  Query q2 = parseQuery("SELECT * { ?b <http://x/p> ?a . ?a <http://x/q> ?c }");
  EXPECT_EQ(q2.header(), (std::vector<std::string>{"b", "a", "c"}));
}

TEST(QueryParserTest, QualificationDocumentQuery) {
  Query q = parseQuery(pcpkg::testkit::bundledQuery("qualification_documents_by_year.rq"),
                       pcpkg::testkit::defaultPrefixes());
  ASSERT_EQ(q.patterns.size(), 5u);
  EXPECT_EQ(varName(q.patterns[0].subject), "doc");
  EXPECT_EQ(std::get<Term>(q.patterns[0].predicate), Term::iri(kPcp + "praeses"));
  EXPECT_EQ(std::get<Term>(q.patterns[1].predicate),
            Term::iri(pcpkg::rdf::vocab::kRdfType));
  EXPECT_EQ(std::get<Term>(q.patterns[2].object), Term::iri(kPcp + "Professor"));

  ASSERT_EQ(q.binds.size(), 1u);
  EXPECT_EQ(q.binds[0].argument, "docDate");
  EXPECT_EQ(q.binds[0].target, "year");
  EXPECT_EQ(q.binds[0].position, 5u);

  ASSERT_EQ(q.projection.size(), 3u);
  const auto& count = std::get<CountAggregate>(q.projection[0]);
  EXPECT_EQ(count.variable, "doc");
  EXPECT_EQ(count.alias, "docN");
  EXPECT_EQ(q.header(), (std::vector<std::string>{"docN", "faculty", "year"}));
  EXPECT_EQ(q.groupBy, (std::vector<std::string>{"faculty", "year"}));
  ASSERT_EQ(q.orderBy.size(), 2u);
  EXPECT_EQ(q.orderBy[0].variable, "year");
  EXPECT_FALSE(q.orderBy[0].descending);
  EXPECT_EQ(q.orderBy[1].variable, "faculty");
  EXPECT_FALSE(q.orderBy[1].descending);
}

TEST(QueryParserTest, EmptyBasicGraphPatternIsRejected) {
  EXPECT_THROW(parseQuery("select ?x where {}"), SyntaxError);
}

TEST(QueryParserTest, UnsupportedConstructsAreNamed) {
  auto construct = [](const std::string& text) {
    try {
      parseQuery(text);
    } catch (const UnsupportedFeature& e) {
      return e.construct();
    }
    return std::string("<accepted>");
  };
  EXPECT_EQ(construct("select * where { ?s ?p ?o OPTIONAL { ?s ?q ?r } }"), "OPTIONAL");
  EXPECT_EQ(construct("select * where { ?s ?p ?o . FILTER(?o > 3) }"), "FILTER");
  EXPECT_EQ(construct("select distinct ?s where { ?s ?p ?o }"), "DISTINCT");
  EXPECT_EQ(construct("select * where { ?s <http://x/a>/<http://x/b> ?o }"), "property path");
  EXPECT_EQ(construct("select * where { { ?s ?p ?o } }"), "nested group pattern");
  EXPECT_EQ(construct("select (sum(?o) as ?n) where { ?s ?p ?o }"), "SUM");
  EXPECT_EQ(construct("select * where { ?s ?p ?o . bind(str(?o) as ?x) }"),
            "BIND expression other than YEAR()");
  EXPECT_EQ(construct("construct { ?s ?p ?o } where { ?s ?p ?o }"), "CONSTRUCT");
}

TEST(QueryParserTest, SyntaxErrorsReportPosition) {
  try {
    parseQuery("select ?s\nwhere { ?s ?p }");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 15u);
  }
  EXPECT_THROW(parseQuery("select ?s where { ?s ex:p ?o }"), SyntaxError);
  EXPECT_THROW(parseQuery("select ?s where { ?s \"lit\" ?o }"), SyntaxError);
  EXPECT_THROW(parseQuery("select ?s where { ?s ?p ?o } limit -1"), SyntaxError);
  EXPECT_THROW(parseQuery("select where { ?s ?p ?o }"), SyntaxError);
}

TEST(QueryParserTest, StructuralChecks) {
  EXPECT_THROW(parseQuery("select ?s ?o where { ?s ?p ?o } group by ?s"), QueryError);
  EXPECT_THROW(parseQuery("select (count(?s) as ?n) ?o where { ?s ?p ?o }"), QueryError);
  EXPECT_THROW(parseQuery("select ?s where { ?s ?p ?o } order by ?o"), QueryError);
  EXPECT_THROW(parseQuery("select * where { ?s ?p ?o . bind(year(?o) as ?s) }"), SyntaxError);
  EXPECT_THROW(parseQuery("select (count(?s) as ?o) where { ?s ?p ?o }"), QueryError);
  EXPECT_NO_THROW(parseQuery("select ?s where { ?s ?p ?o } group by ?s ?o order by ?o"));
}

TEST(QueryParserTest, TermsAndModifiers) {
  Query q = parseQuery(
      "PREFIX ex: <http://x/>\n"
      "select ?s where { ?s ex:p \"a\\\"b\"@DE ; ex:q 12, 1.5 , true ; a ex:C . "
      "?s ex:r \"1650\"^^<http://www.w3.org/2001/XMLSchema#gYear> } "
      "order by desc(?s) limit 3");
  ASSERT_EQ(q.patterns.size(), 6u);
  EXPECT_EQ(std::get<Term>(q.patterns[0].object), Term::langLiteral("a\"b", "de"));
  EXPECT_EQ(std::get<Term>(q.patterns[1].object),
            Term::typedLiteral("12", pcpkg::rdf::vocab::kXsdInteger));
  EXPECT_EQ(std::get<Term>(q.patterns[2].object),
            Term::typedLiteral("1.5", pcpkg::rdf::vocab::kXsdDecimal));
  EXPECT_EQ(std::get<Term>(q.patterns[3].object),
            Term::typedLiteral("true", pcpkg::rdf::vocab::kXsdBoolean));
  EXPECT_EQ(std::get<Term>(q.patterns[4].object), Term::iri("http://x/C"));
  EXPECT_TRUE(q.orderBy[0].descending);
  EXPECT_EQ(q.limit, 3u);
}
