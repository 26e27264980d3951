#include "pcpkg/enrich/Endpoint.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace pcpkg::enrich {

namespace pt = boost::property_tree;

namespace {

constexpr const char* kRdfAccept = "application/n-triples, text/turtle;q=0.9";

const char* kWikidataTemplate =
    "PREFIX wdt: <http://www.wikidata.org/prop/direct/>\n"
    "CONSTRUCT { ?item ?p ?o }\n"
    "WHERE { ?item wdt:P227 \"{gnd}\" . ?item ?p ?o }\n";

const char* kDbpediaTemplate =
    "PREFIX owl: <http://www.w3.org/2002/07/owl#>\n"
    "CONSTRUCT { ?s ?p ?o }\n"
    "WHERE {\n"
    "  VALUES ?gnd { <https://d-nb.info/gnd/{gnd}> <http://d-nb.info/gnd/{gnd}> }\n"
    "  ?s owl:sameAs ?gnd .\n"
    "  ?s ?p ?o\n"
    "}\n";

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EndpointError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long positiveNumber(const std::string& section, const std::string& key, const std::string& text) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw EndpointError("[" + section + "] " + key + ": expected a non-negative integer, got '" +
                        text + "'");
  }
  return value;
}

}  // namespace

void EndpointSpec::validate() const {
  if (name.empty()) throw EndpointError("endpoint without a name");
  if (kind == EndpointKind::SparqlEndpoint) {
    if (baseUrl.empty()) throw EndpointError(name + ": sparql endpoint needs a url");
    if (!lookupTemplate) throw EndpointError(name + ": sparql endpoint needs a lookup template");
    if (!lookupTemplate->placeholders().contains("gnd")) {
      throw EndpointError(name + ": template must reference {gnd}");
    }
    if (lookupTemplate->placeholders().size() != 1) {
      throw EndpointError(name + ": template may only use the {gnd} placeholder");
    }
  }
  if (delay.count() <= 0 || timeout.count() <= 0) {
    throw EndpointError(name + ": delay and timeout must be positive");
  }
  if (maxRetries < 0) throw EndpointError(name + ": retries must not be negative");
}

bool isBuiltinEndpoint(const std::string& name) {
  return name == "dnb" || name == "wikidata" || name == "dbpedia";
}

EndpointSpec builtinEndpoint(const std::string& name) {
  EndpointSpec e;
  e.name = name;
  if (name == "dnb") {
    e.kind = EndpointKind::LinkedDataDocument;
    e.baseUrl = std::string(kGndNamespace);
  } else if (name == "wikidata") {
    e.kind = EndpointKind::SparqlEndpoint;
    e.baseUrl = "https://query.wikidata.org/sparql";
    e.lookupTemplate.emplace(kWikidataTemplate);
  } else if (name == "dbpedia") {
    e.kind = EndpointKind::SparqlEndpoint;
    e.baseUrl = "https://dbpedia.org/sparql";
    e.lookupTemplate.emplace(kDbpediaTemplate);
  } else {
    throw EndpointError("unknown endpoint '" + name + "' (built-in: dnb, wikidata, dbpedia)");
  }
  return e;
}

std::map<std::string, EndpointSpec> parseEndpointConfig(const std::string& text,
                                                        const std::filesystem::path& baseDir) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw EndpointError("line " + std::to_string(e.line()) + ": " + e.message());
  }
  static const std::set<std::string> kKeys = {"kind",     "url",        "template", "template_file",
                                              "delay_ms", "timeout_ms", "retries"};
  std::map<std::string, EndpointSpec> out;
  for (const auto& [name, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw EndpointError("key '" + name + "' outside of a section");
    }
    EndpointSpec e;
    if (isBuiltinEndpoint(name)) {
      e = builtinEndpoint(name);
    } else {
      e.name = name;
    }
    for (const auto& [key, value] : body) {
      if (!kKeys.contains(key)) throw EndpointError("[" + name + "] unknown key '" + key + "'");
    }
    if (auto kind = body.get_optional<std::string>("kind")) {
      if (*kind == "sparql") {
        e.kind = EndpointKind::SparqlEndpoint;
      } else if (*kind == "document") {
        e.kind = EndpointKind::LinkedDataDocument;
      } else {
        throw EndpointError("[" + name + "] kind must be 'sparql' or 'document'");
      }
    }
    if (auto url = body.get_optional<std::string>("url")) e.baseUrl = *url;
    auto inline_ = body.get_optional<std::string>("template");
    auto file = body.get_optional<std::string>("template_file");
    if (inline_ && file) throw EndpointError("[" + name + "] give template or template_file, not both");
    if (inline_) e.lookupTemplate.emplace(*inline_);
    if (file) e.lookupTemplate.emplace(readFile(baseDir / *file));
    if (auto v = body.get_optional<std::string>("delay_ms")) {
      e.delay = std::chrono::milliseconds(positiveNumber(name, "delay_ms", *v));
    }
    if (auto v = body.get_optional<std::string>("timeout_ms")) {
      e.timeout = std::chrono::milliseconds(positiveNumber(name, "timeout_ms", *v));
    }
    if (auto v = body.get_optional<std::string>("retries")) {
      e.maxRetries = static_cast<int>(positiveNumber(name, "retries", *v));
    }
    e.validate();
    out.emplace(name, std::move(e));
  }
  return out;
}

std::map<std::string, EndpointSpec> loadEndpointConfig(const std::filesystem::path& path) {
  return parseEndpointConfig(readFile(path), path.parent_path());
}

std::string buildLookupQuery(const EndpointSpec& endpoint, const GndId& gnd) {
  if (endpoint.kind != EndpointKind::SparqlEndpoint || !endpoint.lookupTemplate) {
    throw EndpointError(endpoint.name + " is not a SPARQL endpoint");
  }
  return endpoint.lookupTemplate->instantiate({{"gnd", gnd.number()}});
}

std::string urlEncode(const std::string& text) {
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    }
  }
  return out;
}

HttpRequest buildRequest(const EndpointSpec& endpoint, const GndId& gnd) {
  if (endpoint.kind == EndpointKind::LinkedDataDocument) {
    std::string base = endpoint.baseUrl.empty() ? std::string(kGndNamespace) : endpoint.baseUrl;
    if (!base.ends_with('/')) base += '/';
    return {base + gnd.number() + "/about/lds", kRdfAccept};
  }
  return {endpoint.baseUrl + "?query=" + urlEncode(buildLookupQuery(endpoint, gnd)), kRdfAccept};
}

}  // namespace pcpkg::enrich
