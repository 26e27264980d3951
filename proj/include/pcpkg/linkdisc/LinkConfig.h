#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcpkg/rdf/Graph.h"

namespace pcpkg::linkdisc {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PropertyPair {
  std::string name;
  std::string source;
  std::string target;

  friend bool operator==(const PropertyPair&, const PropertyPair&) = default;
};

struct LinkConfig {
  // Without a class, every IRI subject carrying one of the compared
  // properties on its side is an instance.
  std::optional<std::string> sourceClass;
  std::optional<std::string> targetClass;
  std::vector<PropertyPair> properties;
  double acceptThreshold = 0.8;
  double reviewThreshold = 0.5;
  // Compare only pairs that share at least one token. Ignored when the
  // review threshold is 0, where token-less pairs must still be reported.
  bool tokenBlocking = false;

  // Throws ConfigError unless 0 <= review <= accept <= 1 and at least one
  // property pair is configured.
  void validate() const;

  // Source and target exchanged, including inside every property pair.
  LinkConfig swapped() const;
};

// INI text:
//
//   [prefixes]      name = namespace IRI
//   [classes]       source = ..., target = ...           (optional)
//   [properties]    <pair name> = <source prop> <target prop>
//   [thresholds]    accept = 0.8, review = 0.5
//   [blocking]      mode = none | tokens
//
// Terms are <absolute IRIs> or prefixed names resolved against [prefixes]
// and then `defaults`.
LinkConfig parseLinkConfig(const std::string& text, const rdf::PrefixMap& defaults = {});
LinkConfig loadLinkConfig(const std::filesystem::path& path, const rdf::PrefixMap& defaults = {});

}  // namespace pcpkg::linkdisc
