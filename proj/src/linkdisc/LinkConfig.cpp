#include "pcpkg/linkdisc/LinkConfig.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pcpkg::linkdisc {

namespace pt = boost::property_tree;

namespace {

std::string expand(const std::string& term, const rdf::PrefixMap& prefixes) {
  if (term.size() > 2 && term.front() == '<' && term.back() == '>') {
    std::string iri = term.substr(1, term.size() - 2);
    if (!rdf::isAbsoluteIri(iri)) throw ConfigError("not an absolute IRI: " + term);
    return iri;
  }
  auto colon = term.find(':');
  if (colon == std::string::npos) throw ConfigError("expected <iri> or prefix:name, got '" + term + "'");
  auto ns = prefixes.find(term.substr(0, colon));
  if (ns == prefixes.end()) {
    throw ConfigError("unknown prefix '" + term.substr(0, colon) + "' in '" + term + "'");
  }
  return ns->second + term.substr(colon + 1);
}

double threshold(const pt::ptree& section, const std::string& key, double fallback) {
  auto text = section.get_optional<std::string>(key);
  if (!text) return fallback;
  double value = 0;
  const char* end = text->data() + text->size();
  auto [ptr, ec] = std::from_chars(text->data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("threshold '" + key + "' is not a number: " + *text);
  }
  return value;
}

void rejectUnknownKeys(const pt::ptree& tree, const std::string& section,
                       const std::set<std::string>& allowed) {
  for (const auto& [key, value] : tree) {
    if (!allowed.contains(key)) throw ConfigError("unknown key [" + section + "] " + key);
  }
}

}  // namespace

void LinkConfig::validate() const {
  if (properties.empty()) throw ConfigError("no property pairs configured");
  if (!(reviewThreshold >= 0.0 && reviewThreshold <= acceptThreshold && acceptThreshold <= 1.0)) {
    throw ConfigError("thresholds must satisfy 0 <= review <= accept <= 1");
  }
}

LinkConfig LinkConfig::swapped() const {
  LinkConfig out = *this;
  std::swap(out.sourceClass, out.targetClass);
  for (auto& p : out.properties) std::swap(p.source, p.target);
  return out;
}

LinkConfig parseLinkConfig(const std::string& text, const rdf::PrefixMap& defaults) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()) + ": " + e.message());
  }

  rdf::PrefixMap prefixes = defaults;
  LinkConfig cfg;
  for (const auto& [section, body] : tree) {
    if (section == "prefixes") {
      for (const auto& [name, value] : body) prefixes[name] = value.data();
    } else if (section != "classes" && section != "properties" && section != "thresholds" &&
               section != "blocking") {
      throw ConfigError("unknown section [" + section + "]");
    }
  }

  if (auto classes = tree.get_child_optional("classes")) {
    rejectUnknownKeys(*classes, "classes", {"source", "target"});
    if (auto s = classes->get_optional<std::string>("source")) cfg.sourceClass = expand(*s, prefixes);
    if (auto t = classes->get_optional<std::string>("target")) cfg.targetClass = expand(*t, prefixes);
  }
  if (auto props = tree.get_child_optional("properties")) {
    for (const auto& [name, value] : *props) {
      std::istringstream fields(value.data());
      std::string source, target, extra;
      if (!(fields >> source >> target) || (fields >> extra)) {
        throw ConfigError("[properties] " + name + ": expected '<source> <target>'");
      }
      cfg.properties.push_back({name, expand(source, prefixes), expand(target, prefixes)});
    }
  }
  if (auto th = tree.get_child_optional("thresholds")) {
    rejectUnknownKeys(*th, "thresholds", {"accept", "review"});
    cfg.acceptThreshold = threshold(*th, "accept", cfg.acceptThreshold);
    cfg.reviewThreshold = threshold(*th, "review", cfg.reviewThreshold);
  }
  if (auto blocking = tree.get_child_optional("blocking")) {
    rejectUnknownKeys(*blocking, "blocking", {"mode"});
    std::string mode = blocking->get<std::string>("mode", "none");
    if (mode != "none" && mode != "tokens") throw ConfigError("unknown blocking mode '" + mode + "'");
    cfg.tokenBlocking = mode == "tokens";
  }
  cfg.validate();
  return cfg;
}

LinkConfig loadLinkConfig(const std::filesystem::path& path, const rdf::PrefixMap& defaults) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseLinkConfig(buf.str(), defaults);
}

}  // namespace pcpkg::linkdisc
