#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcpkg/rdf/Term.h"

namespace pcpkg::rdf {

using PrefixMap = std::map<std::string, std::string>;

// An indexed set of triples. Terms are dictionary-encoded and every triple is
// kept in SPO, POS and OSP order so that any pattern with at least one bound
// position is answered by a range scan.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::string name) : name_(std::move(name)) {}

  const std::optional<std::string>& name() const { return name_; }
  void setName(std::optional<std::string> name) { name_ = std::move(name); }

  const PrefixMap& prefixes() const { return prefixes_; }
  // Binds `prefix` to `ns`, replacing an earlier binding of the same prefix.
  void setPrefix(std::string prefix, std::string ns);

  // Returns false if the triple was already present.
  bool insert(const Triple& triple);
  bool erase(const Triple& triple);
  bool contains(const Triple& triple) const;
  // Inserts every triple of `other` and adopts prefixes it defines.
  void merge(const Graph& other);

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  // All triples in canonical (Triple::operator<=>) order.
  std::vector<Triple> triples() const;

  // Triples agreeing with every bound position, in canonical order.
  std::vector<Triple> match(const std::optional<Term>& subject,
                            const std::optional<Term>& predicate,
                            const std::optional<Term>& object) const;

  // Set equality of the triples; names and prefixes are not compared.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  using Id = std::uint32_t;
  using Key = std::array<Id, 3>;

  std::optional<Id> lookup(const Term& term) const;
  Id intern(const Term& term);
  Triple decode(Id s, Id p, Id o) const;

  std::optional<std::string> name_;
  PrefixMap prefixes_;
  std::vector<Term> terms_;
  std::unordered_map<Term, Id, TermHash> ids_;
  std::set<Key> spo_;
  std::set<Key> pos_;
  std::set<Key> osp_;
};

// Union of several graphs as one unnamed graph.
Graph unionOf(std::span<const Graph> graphs);

}  // namespace pcpkg::rdf
