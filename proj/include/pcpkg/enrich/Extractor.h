#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcpkg/enrich/Endpoint.h"
#include "pcpkg/enrich/Gnd.h"
#include "pcpkg/enrich/Transport.h"
#include "pcpkg/rdf/Graph.h"

namespace pcpkg::enrich {

enum class ItemStatus { Ok, NotFound, Failed };
enum class FailureKind { Timeout, HttpStatus, ParseError, NotFound };

std::string_view itemStatusName(ItemStatus status);
std::string_view failureKindName(FailureKind kind);

struct ItemReport {
  explicit ItemReport(GndId id) : gnd(std::move(id)) {}

  GndId gnd;
  ItemStatus status = ItemStatus::Failed;
  std::optional<FailureKind> failure;
  std::size_t triples = 0;
  int attempts = 0;
  std::chrono::milliseconds elapsed{0};
  std::string message;
  // Resources in the response that stand for this GND: the GND IRI itself,
  // subjects with a wdt:P227 value equal to the number, and subjects with an
  // owl:sameAs link to the GND IRI.
  std::vector<std::string> subjects;
};

struct ExtractionReport {
  std::string endpoint;
  std::vector<ItemReport> items;
  // URLs in the order the transport saw them, retries included.
  std::vector<std::string> requestOrder;
};

struct ExtractionResult {
  // Named http://purl.org/pcp-on-web/{endpoint}.
  rdf::Graph graph;
  std::vector<rdf::Graph> itemGraphs;
  ExtractionReport report;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

void realSleep(std::chrono::milliseconds duration);

std::string endpointGraphName(const std::string& endpoint);

// Fetches each GND in turn, waiting endpoint.delay between GNDs. Timeouts,
// connection errors and 5xx responses are retried up to maxRetries times
// with a delay that starts at endpoint.delay and doubles. A 404, or a 200
// whose body holds no triples, is not-found; other statuses fail with
// http-status; an unparseable body fails with parse-error. No failure stops
// the batch.
ExtractionResult lazyExtract(const std::vector<GndId>& gnds, const EndpointSpec& endpoint,
                             Transport& transport, const Sleeper& sleep = realSleep);

// GND -> external resources, collected from the subjects of a report.
std::map<GndId, std::vector<std::string>> externalSubjects(const ExtractionReport& report);

struct SameAsLinks {
  rdf::Graph triples;
  std::vector<std::string> warnings;
};

// Links every local subject whose `gndProperty` value normalizes to a GND in
// `external` to each external resource of that GND. Values that are not GND
// numbers or URLs are skipped with a warning, as is every GND shared by more
// than one local subject (those are still linked).
SameAsLinks emitSameAs(const rdf::Graph& local, const std::string& gndProperty,
                       const std::map<GndId, std::vector<std::string>>& external);

}  // namespace pcpkg::enrich
