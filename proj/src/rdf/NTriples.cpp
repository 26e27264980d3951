#include "pcpkg/rdf/NTriples.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

namespace pcpkg::rdf {

namespace {

// Colour refinement over blank nodes: each round replaces a node's colour by
// the rank of (previous colour, sorted neighbourhood with neighbour colours).
// Ranks are plain integers so the labelling does not depend on hashing.
std::map<std::string, std::size_t> canonicalBlankLabels(
    const std::vector<Triple>& triples) {
  std::map<std::string, std::size_t> colour;
  for (const Triple& t : triples) {
    if (t.subject.isBlank()) colour[t.subject.value()] = 0;
    if (t.object.isBlank()) colour[t.object.value()] = 0;
  }
  if (colour.empty()) {
    return colour;
  }

  auto render = [&](const Term& term, const std::string& self) {
    if (!term.isBlank()) return term.toNTriples();
    if (term.value() == self) return std::string("_:@self");
    return "_:@" + std::to_string(colour.at(term.value()));
  };

  std::size_t distinct = 1;
  for (std::size_t round = 0; round <= colour.size(); ++round) {
    std::map<std::string, std::string> signature;
    for (const auto& [label, c] : colour) {
      signature[label] = std::to_string(c) + "\n";
    }
    std::map<std::string, std::vector<std::string>> edges;
    for (const Triple& t : triples) {
      if (t.subject.isBlank()) {
        edges[t.subject.value()].push_back(
            "out " + t.predicate.toNTriples() + " " + render(t.object, t.subject.value()));
      }
      if (t.object.isBlank()) {
        edges[t.object.value()].push_back(
            "in " + render(t.subject, t.object.value()) + " " + t.predicate.toNTriples());
      }
    }
    for (auto& [label, list] : edges) {
      std::sort(list.begin(), list.end());
      for (const std::string& e : list) signature[label] += e + "\n";
    }
    std::vector<std::string> sorted;
    for (const auto& [label, sig] : signature) sorted.push_back(sig);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& [label, c] : colour) {
      c = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), signature[label]) -
          sorted.begin());
    }
    if (sorted.size() == distinct && round > 0) break;
    distinct = sorted.size();
  }

  // Final ordering by colour; ties between indistinguishable nodes fall back
  // to their original labels, shorter first so that b2 sorts before b10 and
  // relabelling an already canonical graph is the identity.
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> order;
  for (const auto& [label, c] : colour) order.emplace_back(c, label.size(), label);
  std::sort(order.begin(), order.end());
  std::map<std::string, std::size_t> labels;
  for (std::size_t i = 0; i < order.size(); ++i) labels[std::get<2>(order[i])] = i;
  return labels;
}

}  // namespace

Graph canonicalize(const Graph& graph) {
  std::vector<Triple> triples = graph.triples();
  auto labels = canonicalBlankLabels(triples);
  auto relabel = [&](const Term& t) {
    if (!t.isBlank()) return t;
    return Term::blank("b" + std::to_string(labels.at(t.value())));
  };
  Graph out;
  out.setName(graph.name());
  for (const auto& [prefix, ns] : graph.prefixes()) out.setPrefix(prefix, ns);
  for (const Triple& t : triples) {
    out.insert(Triple(relabel(t.subject), t.predicate, relabel(t.object)));
  }
  return out;
}

std::string serializeSorted(const Graph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const Triple& t : graph.triples()) lines.push_back(t.toNTriples());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string serializeCanonical(const Graph& graph) { return serializeSorted(canonicalize(graph)); }

void writeCanonical(const Graph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << serializeCanonical(graph);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.size() == b.size() && serializeCanonical(a) == serializeCanonical(b);
}

std::string compactIri(const std::string& iri, const PrefixMap& prefixes) {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : prefixes) {
    if (iri.starts_with(entry.second) &&
        (!best || entry.second.size() > best->second.size())) {
      best = &entry;
    }
  }
  if (best) {
    std::string local = iri.substr(best->second.size());
    bool plain = std::all_of(local.begin(), local.end(), [](unsigned char c) {
      return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
    });
    if (plain) return best->first + ":" + local;
  }
  return "<" + iri + ">";
}

std::string renderTerm(const Term& term, const PrefixMap& prefixes) {
  if (term.isIri()) return compactIri(term.value(), prefixes);
  if (term.isBlank()) return "_:" + term.value();
  if (term.datatype() == vocab::kXsdInteger && !term.value().empty() &&
      std::all_of(term.value().begin(), term.value().end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    return term.value();
  }
  std::string out = "\"" + escapeLiteral(term.value()) + "\"";
  if (term.hasLanguage()) out += "@" + term.language();
  if (term.hasDatatype()) out += "^^" + compactIri(term.datatype(), prefixes);
  return out;
}

}  // namespace pcpkg::rdf
