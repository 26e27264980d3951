#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcpkg/fusion/Vocabulary.h"
#include "pcpkg/rdf/Graph.h"

namespace pcpkg::fusion {

inline constexpr const char* kPcpOntology = "http://purl.org/pcp-on-web/ontology#";

// A malformed rename file. `line` is 1-based.
class MappingFileError : public std::invalid_argument {
 public:
  MappingFileError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidMapping : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by shiftNamespace with every uncovered vocabulary IRI at once.
class UncoveredTerms : public std::runtime_error {
 public:
  explicit UncoveredTerms(std::vector<std::string> iris);
  const std::vector<std::string>& iris() const { return iris_; }

 private:
  std::vector<std::string> iris_;
};

struct AlignmentMapping {
  std::string sourceNamespace;
  std::string targetNamespace;
  std::map<std::string, std::string> renames;
  std::set<std::string> autoShifted;
  OverlapStats stats;

  // Throws InvalidMapping when renames and autoShifted overlap, when a
  // rename target is itself renamed, or when two names map to one target.
  void validate() const;
};

// Reads `old<TAB>new` lines. Blank lines and lines starting with '#' are
// skipped; trailing '\r' is tolerated.
std::map<std::string, std::string> parseRenames(const std::string& text);
std::map<std::string, std::string> loadRenames(const std::filesystem::path& path);

// Covers every vocabulary term of `source` under `sourceNamespace`: names
// listed in `renames` are renamed, the rest are shifted unchanged. The stats
// compare the source vocabulary (properties and classes together) with
// `reference` when one is given.
AlignmentMapping buildMapping(const rdf::Graph& source, const std::string& sourceNamespace,
                              const std::string& targetNamespace,
                              std::map<std::string, std::string> renames = {},
                              const std::optional<Vocabulary>& reference = std::nullopt);

// Rewrites covered IRIs in every position. An IRI is covered when it lies in
// the source namespace and its local name is auto-shifted or renamed. Renames
// also apply to IRIs already in the target namespace, so a rename file can be
// run over aligned data. Literals and other IRIs are left alone.
// Throws UncoveredTerms, or InvalidMapping if two triples would become one.
rdf::Graph shiftNamespace(const rdf::Graph& graph, const AlignmentMapping& mapping);

}  // namespace pcpkg::fusion
