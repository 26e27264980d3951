#include <gtest/gtest.h>

#include <fstream>

#include "pcpkg/enrich/Extractor.h"
#include "pcpkg/rdf/NTriples.h"
#include "pcpkg/rdf/Turtle.h"
#include "support/Fixtures.h"
#include "support/TempDir.h"

namespace pcpkg::enrich {
namespace {

using std::chrono::milliseconds;

const std::vector<GndId> kGnds = {GndId("118755951"), GndId("116213108"), GndId("11851825X")};

std::filesystem::path recording(const std::string& name) {
  return testkit::dataDir() / "recordings" / name;
}

// Reads the recorded bodies straight from disk, keyed by the URL column of
// the index.
std::map<std::string, rdf::Graph> recordedGraphs(const std::string& name) {
  std::map<std::string, rdf::Graph> out;
  std::ifstream index(recording(name) / "index.tsv");
  std::string key, status, url;
  while (std::getline(index, key, '\t') && std::getline(index, status, '\t') &&
         std::getline(index, url)) {
    out[url] = rdf::parseTurtleFile(recording(name) / (key + ".body"));
  }
  return out;
}

struct SleepLog {
  std::vector<milliseconds> calls;
  Sleeper sleeper() {
    return [this](milliseconds d) { calls.push_back(d); };
  }
};

EndpointSpec dnb() {
  EndpointSpec e = builtinEndpoint("dnb");
  e.maxRetries = 2;
  return e;
}

TEST(ExtractorTest, EmptyInput) {
  RecordedTransport transport(recording("dnb"));
  SleepLog sleeps;
  auto result = lazyExtract({}, dnb(), transport, sleeps.sleeper());
  EXPECT_TRUE(result.graph.empty());
  EXPECT_TRUE(result.report.items.empty());
  EXPECT_TRUE(transport.requests().empty());
  EXPECT_TRUE(sleeps.calls.empty());
}

TEST(ExtractorTest, ThreeRecordedGndsInOrder) {
  RecordedTransport transport(recording("dnb"));
  SleepLog sleeps;
  auto result = lazyExtract(kGnds, dnb(), transport, sleeps.sleeper());

  ASSERT_EQ(transport.requests().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(transport.requests()[i].url, dnbDocumentUrl(kGnds[i]));
    EXPECT_EQ(result.report.items[i].gnd, kGnds[i]);
    EXPECT_EQ(result.report.items[i].status, ItemStatus::Ok);
    EXPECT_EQ(result.report.items[i].attempts, 1);
    EXPECT_EQ(result.report.items[i].subjects, std::vector<std::string>{gndIri(kGnds[i])});
  }
  EXPECT_EQ(sleeps.calls, (std::vector<milliseconds>{milliseconds(1000), milliseconds(1000)}));

  rdf::Graph manual;
  for (const auto& [url, g] : recordedGraphs("dnb")) manual.merge(g);
  EXPECT_EQ(result.graph, manual);
  EXPECT_EQ(result.graph.name(), "http://purl.org/pcp-on-web/dnb");
  EXPECT_EQ(result.report.items[0].triples, 4u);
}

TEST(ExtractorTest, FailureInItemTwoLeavesOthersUnchanged) {
  RecordedTransport good(recording("dnb"));
  RecordedTransport faulty(recording("dnb_faulty"));
  auto clean = lazyExtract(kGnds, dnb(), good, [](milliseconds) {});
  auto broken = lazyExtract(kGnds, dnb(), faulty, [](milliseconds) {});

  ASSERT_EQ(faulty.requests().size(), 3u);
  EXPECT_EQ(broken.report.items[1].status, ItemStatus::Failed);
  EXPECT_EQ(broken.report.items[1].failure, FailureKind::ParseError);
  EXPECT_TRUE(broken.itemGraphs[1].empty());
  EXPECT_EQ(broken.itemGraphs[0], clean.itemGraphs[0]);
  EXPECT_EQ(broken.itemGraphs[2], clean.itemGraphs[2]);
  rdf::Graph others = clean.itemGraphs[0];
  others.merge(clean.itemGraphs[2]);
  EXPECT_EQ(broken.graph, others);
}

TEST(ExtractorTest, WikidataRecording) {
  RecordedTransport transport(recording("wikidata"));
  auto result = lazyExtract(kGnds, builtinEndpoint("wikidata"), transport, [](milliseconds) {});
  ASSERT_EQ(result.report.items.size(), 3u);
  EXPECT_EQ(result.report.items[0].status, ItemStatus::Ok);
  EXPECT_EQ(result.report.items[0].subjects,
            std::vector<std::string>{"http://www.wikidata.org/entity/Q1000001"});
  EXPECT_EQ(result.report.items[2].status, ItemStatus::NotFound);
  auto subjects = externalSubjects(result.report);
  EXPECT_EQ(subjects.size(), 2u);
  EXPECT_FALSE(subjects.contains(kGnds[2]));
}

class ScriptedTest : public ::testing::Test {
 protected:
  void script(std::size_t item, const std::string& status, const std::string& body = "") {
    RecordingTransport::record(dir.path(), buildRequest(dnb(), kGnds[item]), status, body);
  }
  ExtractionResult run() {
    RecordedTransport transport(dir.path());
    auto result = lazyExtract(kGnds, dnb(), transport, sleeps.sleeper());
    requests = transport.requests().size();
    return result;
  }
  testkit::TempDir dir;
  SleepLog sleeps;
  std::size_t requests = 0;
};

TEST_F(ScriptedTest, TimeoutsRetryWithDoublingDelay) {
  script(0, "timeout");
  script(1, "200", "<http://a> <http://b> <http://c> .\n");
  script(2, "503");
  auto result = run();
  EXPECT_EQ(result.report.items[0].status, ItemStatus::Failed);
  EXPECT_EQ(result.report.items[0].failure, FailureKind::Timeout);
  EXPECT_EQ(result.report.items[0].attempts, 3);
  EXPECT_EQ(result.report.items[1].status, ItemStatus::Ok);
  EXPECT_EQ(result.report.items[2].failure, FailureKind::HttpStatus);
  EXPECT_EQ(result.report.items[2].attempts, 3);
  EXPECT_EQ(requests, 7u);
  using ms = milliseconds;
  EXPECT_EQ(sleeps.calls, (std::vector<ms>{ms(1000), ms(2000),  // item 1 retries
                                           ms(1000),            // politeness
                                           ms(1000),            // politeness
                                           ms(1000), ms(2000)}));
}

TEST_F(ScriptedTest, ClientErrorsAreNotRetried) {
  script(0, "404");
  script(1, "403");
  script(2, "200", "");
  auto result = run();
  EXPECT_EQ(result.report.items[0].status, ItemStatus::NotFound);
  EXPECT_EQ(result.report.items[1].status, ItemStatus::Failed);
  EXPECT_EQ(result.report.items[1].failure, FailureKind::HttpStatus);
  EXPECT_EQ(result.report.items[2].status, ItemStatus::NotFound);
  EXPECT_EQ(requests, 3u);
}

TEST_F(ScriptedTest, MissingRecordingIsNotFound) {
  script(1, "200", "<http://a> <http://b> <http://c> .\n");
  auto result = run();
  EXPECT_EQ(result.report.items[0].status, ItemStatus::NotFound);
  EXPECT_EQ(result.report.items[1].status, ItemStatus::Ok);
  EXPECT_EQ(result.report.items[2].status, ItemStatus::NotFound);
}

// Corrupting any single response in any way changes only that item.
TEST(ExtractorTest, FailureIsolationForEveryItemAndFault) {
  RecordedTransport good(recording("dnb"));
  auto clean = lazyExtract(kGnds, dnb(), good, [](milliseconds) {});
  auto bodies = recordedGraphs("dnb");
  for (std::size_t victim = 0; victim < kGnds.size(); ++victim) {
    for (const std::string fault : {"timeout", "500", "403", "404", "garbage", "empty"}) {
      testkit::TempDir dir;
      for (std::size_t i = 0; i < kGnds.size(); ++i) {
        HttpRequest req = buildRequest(dnb(), kGnds[i]);
        std::string body = rdf::serializeCanonical(bodies.at(req.url));
        if (i != victim) {
          RecordingTransport::record(dir.path(), req, "200", body);
        } else if (fault == "garbage") {
          RecordingTransport::record(dir.path(), req, "200", "<unterminated");
        } else if (fault == "empty") {
          RecordingTransport::record(dir.path(), req, "200", "");
        } else {
          RecordingTransport::record(dir.path(), req, fault, "");
        }
      }
      RecordedTransport transport(dir.path());
      auto result = lazyExtract(kGnds, dnb(), transport, [](milliseconds) {});
      for (std::size_t i = 0; i < kGnds.size(); ++i) {
        if (i == victim) {
          EXPECT_NE(result.report.items[i].status, ItemStatus::Ok) << fault;
          EXPECT_TRUE(result.itemGraphs[i].empty());
        } else {
          EXPECT_EQ(result.itemGraphs[i], clean.itemGraphs[i]) << fault << " at " << victim;
          EXPECT_EQ(result.report.items[i].status, ItemStatus::Ok);
        }
      }
    }
  }
}

class FakeTransport : public Transport {
 public:
  HttpResponse get(const HttpRequest& request, milliseconds) override {
    if (request.url.find("116213108") != std::string::npos) throw TransportTimeout("slow");
    return {200, "<" + request.url + "> <http://p> \"x\" .\n"};
  }
};

TEST(ExtractorTest, RecordingThenReplayGivesSameResult) {
  testkit::TempDir dir;
  FakeTransport fake;
  RecordingTransport recorder(fake, dir.path());
  auto live = lazyExtract(kGnds, dnb(), recorder, [](milliseconds) {});
  RecordedTransport replay(dir.path());
  auto again = lazyExtract(kGnds, dnb(), replay, [](milliseconds) {});
  EXPECT_EQ(live.graph, again.graph);
  ASSERT_EQ(again.report.items.size(), 3u);
  EXPECT_EQ(again.report.items[1].failure, FailureKind::Timeout);
  EXPECT_EQ(live.report.requestOrder, again.report.requestOrder);
}

TEST(SameAsTest, EmptyMapGivesNothing) {
  rdf::Graph local = rdf::parseTurtle(
      "<http://l/p1> <http://purl.org/pcp-on-web/ontology#gnd> \"118755951\" .");
  auto links = emitSameAs(local, "http://purl.org/pcp-on-web/ontology#gnd", {});
  EXPECT_TRUE(links.triples.empty());
  EXPECT_TRUE(links.warnings.empty());
}

TEST(SameAsTest, OneProfessorOneLink) {
  rdf::Graph local = rdf::parseTurtle(
      "<http://l/p1> <http://purl.org/pcp-on-web/ontology#gnd> \"118755951\" .\n"
      "<http://l/p2> <http://purl.org/pcp-on-web/ontology#gnd> \"116213108\" .");
  auto links = emitSameAs(local, "http://purl.org/pcp-on-web/ontology#gnd",
                          {{GndId("118755951"), {"https://d-nb.info/gnd/118755951"}}});
  ASSERT_EQ(links.triples.size(), 1u);
  EXPECT_TRUE(links.triples.contains(rdf::Triple(rdf::Term::iri("http://l/p1"),
                                                 rdf::Term::iri(rdf::vocab::kOwlSameAs),
                                                 rdf::Term::iri("https://d-nb.info/gnd/118755951"))));
}

TEST(SameAsTest, SharedGndFansOutWithWarning) {
  rdf::Graph local = rdf::parseTurtle(
      "<http://l/p1> <http://e/gnd> \"118755951\" .\n"
      "<http://l/p2> <http://e/gnd> <https://d-nb.info/gnd/118755951> .\n"
      "<http://l/p3> <http://e/gnd> \"not a gnd\" .");
  auto links = emitSameAs(local, "http://e/gnd", {{GndId("118755951"), {"http://x/Q1"}}});
  EXPECT_EQ(links.triples.size(), 2u);
  ASSERT_EQ(links.warnings.size(), 2u);
  for (const auto& t : links.triples.triples()) {
    EXPECT_EQ(t.predicate.value(), rdf::vocab::kOwlSameAs);
  }
}

}  // namespace
}  // namespace pcpkg::enrich
