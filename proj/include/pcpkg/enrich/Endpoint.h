#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "pcpkg/enrich/Gnd.h"
#include "pcpkg/sparql/QueryTemplate.h"

namespace pcpkg::enrich {

class EndpointError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EndpointKind { SparqlEndpoint, LinkedDataDocument };

struct EndpointSpec {
  std::string name;
  EndpointKind kind = EndpointKind::LinkedDataDocument;
  std::string baseUrl;
  // Required for SparqlEndpoint; must contain a {gnd} placeholder.
  std::optional<sparql::QueryTemplate> lookupTemplate;
  std::chrono::milliseconds delay{1000};
  std::chrono::milliseconds timeout{30000};
  int maxRetries = 3;

  void validate() const;
};

struct HttpRequest {
  std::string url;
  std::string accept;

  friend bool operator==(const HttpRequest&, const HttpRequest&) = default;
};

// "dnb", "wikidata" or "dbpedia".
EndpointSpec builtinEndpoint(const std::string& name);
bool isBuiltinEndpoint(const std::string& name);

// INI file with one section per endpoint. Keys: kind (sparql | document),
// url, template or template_file (relative to `baseDir`), delay_ms,
// timeout_ms, retries. A section named after a built-in endpoint starts from
// that endpoint's settings.
std::map<std::string, EndpointSpec> parseEndpointConfig(const std::string& text,
                                                        const std::filesystem::path& baseDir);
std::map<std::string, EndpointSpec> loadEndpointConfig(const std::filesystem::path& path);

// The instantiated lookup query. Throws EndpointError for document endpoints.
std::string buildLookupQuery(const EndpointSpec& endpoint, const GndId& gnd);

// GET request for one GND: the DNB document URL for document endpoints, the
// SPARQL protocol URL with an encoded query parameter otherwise.
HttpRequest buildRequest(const EndpointSpec& endpoint, const GndId& gnd);

// application/x-www-form-urlencoded component encoding.
std::string urlEncode(const std::string& text);

}  // namespace pcpkg::enrich
