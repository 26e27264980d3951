#include "pcpkg/enrich/Extractor.h"

#include <algorithm>
#include <set>
#include <thread>

#include "pcpkg/rdf/Turtle.h"

namespace pcpkg::enrich {

namespace {

const std::string kP227 = "http://www.wikidata.org/prop/direct/P227";

std::vector<std::string> subjectsFor(const rdf::Graph& g, const GndId& gnd) {
  std::set<std::string> out;
  for (const std::string& iri : {gndIri(gnd), gndIriHttp(gnd)}) {
    auto node = rdf::Term::iri(iri);
    if (!g.match(node, std::nullopt, std::nullopt).empty()) out.insert(iri);
    for (const auto& t : g.match(std::nullopt, rdf::Term::iri(rdf::vocab::kOwlSameAs), node)) {
      if (t.subject.isIri()) out.insert(t.subject.value());
    }
  }
  for (const auto& t :
       g.match(std::nullopt, rdf::Term::iri(kP227), rdf::Term::literal(gnd.number()))) {
    if (t.subject.isIri()) out.insert(t.subject.value());
  }
  return {out.begin(), out.end()};
}

struct Fetch {
  std::optional<HttpResponse> response;
  std::optional<FailureKind> failure;
  std::string message;
};

}  // namespace

std::string_view itemStatusName(ItemStatus status) {
  switch (status) {
    case ItemStatus::Ok: return "ok";
    case ItemStatus::NotFound: return "not-found";
    case ItemStatus::Failed: return "failed";
  }
  return "failed";
}

std::string_view failureKindName(FailureKind kind) {
  switch (kind) {
    case FailureKind::Timeout: return "timeout";
    case FailureKind::HttpStatus: return "http-status";
    case FailureKind::ParseError: return "parse-error";
    case FailureKind::NotFound: return "not-found";
  }
  return "http-status";
}

void realSleep(std::chrono::milliseconds duration) { std::this_thread::sleep_for(duration); }

std::string endpointGraphName(const std::string& endpoint) {
  return "http://purl.org/pcp-on-web/" + endpoint;
}

ExtractionResult lazyExtract(const std::vector<GndId>& gnds, const EndpointSpec& endpoint,
                             Transport& transport, const Sleeper& sleep) {
  endpoint.validate();
  ExtractionResult result;
  result.graph.setName(endpointGraphName(endpoint.name));
  result.report.endpoint = endpoint.name;

  for (std::size_t i = 0; i < gnds.size(); ++i) {
    if (i > 0) sleep(endpoint.delay);
    const auto started = std::chrono::steady_clock::now();
    ItemReport item(gnds[i]);
    rdf::Graph itemGraph;
    HttpRequest request = buildRequest(endpoint, gnds[i]);

    Fetch fetch;
    auto backoff = endpoint.delay;
    for (int attempt = 0; attempt <= endpoint.maxRetries; ++attempt) {
      if (attempt > 0) {
        sleep(backoff);
        backoff *= 2;
      }
      ++item.attempts;
      result.report.requestOrder.push_back(request.url);
      fetch = {};
      try {
        HttpResponse r = transport.get(request, endpoint.timeout);
        if (r.status >= 500) {
          fetch.failure = FailureKind::HttpStatus;
          fetch.message = "HTTP " + std::to_string(r.status);
          continue;
        }
        fetch.response = std::move(r);
        break;
      } catch (const TransportTimeout& e) {
        fetch.failure = FailureKind::Timeout;
        fetch.message = e.what();
      } catch (const TransportError& e) {
        fetch.failure = FailureKind::Timeout;
        fetch.message = e.what();
      }
    }

    if (!fetch.response) {
      item.status = ItemStatus::Failed;
      item.failure = fetch.failure;
      item.message = fetch.message + " after " + std::to_string(item.attempts) + " attempt(s)";
    } else if (fetch.response->status == 404) {
      item.status = ItemStatus::NotFound;
      item.failure = FailureKind::NotFound;
      item.message = "HTTP 404";
    } else if (fetch.response->status < 200 || fetch.response->status >= 300) {
      item.status = ItemStatus::Failed;
      item.failure = FailureKind::HttpStatus;
      item.message = "HTTP " + std::to_string(fetch.response->status);
    } else {
      try {
        itemGraph = rdf::parseTurtle(fetch.response->body, request.url);
        if (itemGraph.empty()) {
          item.status = ItemStatus::NotFound;
          item.failure = FailureKind::NotFound;
          item.message = "no triples";
        } else {
          item.status = ItemStatus::Ok;
          item.triples = itemGraph.size();
          item.subjects = subjectsFor(itemGraph, gnds[i]);
        }
      } catch (const std::exception& e) {
        itemGraph = rdf::Graph();
        item.status = ItemStatus::Failed;
        item.failure = FailureKind::ParseError;
        item.message = e.what();
      }
    }
    item.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    result.graph.merge(itemGraph);
    result.itemGraphs.push_back(std::move(itemGraph));
    result.report.items.push_back(std::move(item));
  }
  return result;
}

std::map<GndId, std::vector<std::string>> externalSubjects(const ExtractionReport& report) {
  std::map<GndId, std::vector<std::string>> out;
  for (const auto& item : report.items) {
    if (item.subjects.empty()) continue;
    auto& list = out[item.gnd];
    for (const auto& s : item.subjects) {
      if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
    }
  }
  return out;
}

SameAsLinks emitSameAs(const rdf::Graph& local, const std::string& gndProperty,
                       const std::map<GndId, std::vector<std::string>>& external) {
  SameAsLinks out;
  std::map<GndId, std::set<std::string>> holders;
  for (const auto& t : local.match(std::nullopt, rdf::Term::iri(gndProperty), std::nullopt)) {
    if (!t.subject.isIri()) continue;
    try {
      holders[normalizeGnd(t.object.value())].insert(t.subject.value());
    } catch (const GndError& e) {
      out.warnings.push_back(t.subject.value() + ": " + e.what());
    }
  }
  const auto sameAs = rdf::Term::iri(rdf::vocab::kOwlSameAs);
  for (const auto& [gnd, subjects] : holders) {
    auto ext = external.find(gnd);
    if (ext == external.end()) continue;
    if (subjects.size() > 1) {
      out.warnings.push_back("GND " + gnd.number() + " is shared by " +
                             std::to_string(subjects.size()) + " local instances");
    }
    for (const auto& s : subjects) {
      for (const auto& target : ext->second) {
        out.triples.insert(rdf::Triple(rdf::Term::iri(s), sameAs, rdf::Term::iri(target)));
      }
    }
  }
  return out;
}

}  // namespace pcpkg::enrich
