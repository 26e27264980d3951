#include "pcpkg/fusion/Alignment.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pcpkg::fusion {

namespace {

bool validLocalName(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '-' && c != '.') return false;
  }
  return true;
}

std::string joinLines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += "\n  " + s;
  return out;
}

}  // namespace

MappingFileError::MappingFileError(std::size_t line, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}

UncoveredTerms::UncoveredTerms(std::vector<std::string> iris)
    : std::runtime_error(std::to_string(iris.size()) +
                         " vocabulary term(s) not covered by the mapping:" + joinLines(iris)),
      iris_(std::move(iris)) {}

void AlignmentMapping::validate() const {
  if (!rdf::isAbsoluteIri(sourceNamespace) || !rdf::isAbsoluteIri(targetNamespace)) {
    throw InvalidMapping("namespaces must be absolute IRIs");
  }
  std::map<std::string, std::string> targets;
  for (const auto& [from, to] : renames) {
    if (autoShifted.contains(from)) {
      throw InvalidMapping("'" + from + "' is both renamed and auto-shifted");
    }
    if (renames.contains(to)) {
      throw InvalidMapping("rename chain: '" + from + "' -> '" + to + "' -> '" +
                           renames.at(to) + "'");
    }
    auto [it, inserted] = targets.emplace(to, from);
    if (!inserted) {
      throw InvalidMapping("'" + it->second + "' and '" + from + "' both rename to '" + to + "'");
    }
  }
}

std::map<std::string, std::string> parseRenames(const std::string& text) {
  std::map<std::string, std::string> renames;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw MappingFileError(number, "expected 'old<TAB>new'");
    }
    std::string from = line.substr(0, tab);
    std::string to = line.substr(tab + 1);
    if (!validLocalName(from)) throw MappingFileError(number, "bad local name '" + from + "'");
    if (!validLocalName(to)) throw MappingFileError(number, "bad local name '" + to + "'");
    if (from == to) throw MappingFileError(number, "'" + from + "' renamed to itself");
    if (!renames.emplace(from, to).second) {
      throw MappingFileError(number, "duplicate entry for '" + from + "'");
    }
  }
  return renames;
}

std::map<std::string, std::string> loadRenames(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseRenames(buf.str());
}

AlignmentMapping buildMapping(const rdf::Graph& source, const std::string& sourceNamespace,
                              const std::string& targetNamespace,
                              std::map<std::string, std::string> renames,
                              const std::optional<Vocabulary>& reference) {
  AlignmentMapping m;
  m.sourceNamespace = sourceNamespace;
  m.targetNamespace = targetNamespace;
  m.renames = std::move(renames);

  Vocabulary vocab = extractVocabulary(source);
  std::set<std::string> terms = vocab.properties;
  terms.insert(vocab.classes.begin(), vocab.classes.end());
  for (const auto& iri : terms) {
    if (!iri.starts_with(sourceNamespace)) continue;
    std::string local = iri.substr(sourceNamespace.size());
    if (!local.empty() && !m.renames.contains(local)) m.autoShifted.insert(local);
  }
  std::set<std::string> refTerms;
  if (reference) {
    refTerms = reference->properties;
    refTerms.insert(reference->classes.begin(), reference->classes.end());
  }
  m.stats = computeOverlap(terms, refTerms);
  m.validate();
  return m;
}

rdf::Graph shiftNamespace(const rdf::Graph& graph, const AlignmentMapping& mapping) {
  mapping.validate();
  const std::string& src = mapping.sourceNamespace;
  const std::string& dst = mapping.targetNamespace;

  Vocabulary vocab = extractVocabulary(graph);
  std::vector<std::string> uncovered;
  for (const auto* set : {&vocab.properties, &vocab.classes}) {
    for (const auto& iri : *set) {
      if (!iri.starts_with(src)) continue;
      std::string local = iri.substr(src.size());
      if (!mapping.autoShifted.contains(local) && !mapping.renames.contains(local)) {
        uncovered.push_back(iri);
      }
    }
  }
  if (!uncovered.empty()) {
    std::sort(uncovered.begin(), uncovered.end());
    uncovered.erase(std::unique(uncovered.begin(), uncovered.end()), uncovered.end());
    throw UncoveredTerms(std::move(uncovered));
  }

  auto rewrite = [&](const rdf::Term& t) -> rdf::Term {
    if (!t.isIri()) return t;
    const std::string& iri = t.value();
    if (iri.starts_with(src)) {
      std::string local = iri.substr(src.size());
      if (auto r = mapping.renames.find(local); r != mapping.renames.end()) {
        return rdf::Term::iri(dst + r->second);
      }
      if (mapping.autoShifted.contains(local)) return rdf::Term::iri(dst + local);
    }
    if (iri.starts_with(dst)) {
      auto r = mapping.renames.find(iri.substr(dst.size()));
      if (r != mapping.renames.end()) return rdf::Term::iri(dst + r->second);
    }
    return t;
  };

  rdf::Graph out;
  out.setName(graph.name());
  for (const auto& [prefix, ns] : graph.prefixes()) {
    out.setPrefix(prefix, ns);
  }
  for (const rdf::Triple& t : graph.triples()) {
    out.insert(rdf::Triple(rewrite(t.subject), rewrite(t.predicate), rewrite(t.object)));
  }
  if (out.size() != graph.size()) {
    throw InvalidMapping(std::to_string(graph.size() - out.size()) +
                         " triple(s) would collapse onto existing target-namespace triples");
  }
  return out;
}

}  // namespace pcpkg::fusion
