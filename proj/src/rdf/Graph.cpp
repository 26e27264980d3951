#include "pcpkg/rdf/Graph.h"

#include <algorithm>
#include <limits>

namespace pcpkg::rdf {

namespace {
constexpr std::uint32_t kMin = 0;
constexpr std::uint32_t kMax = std::numeric_limits<std::uint32_t>::max();
}  // namespace

void Graph::setPrefix(std::string prefix, std::string ns) {
  prefixes_[std::move(prefix)] = std::move(ns);
}

std::optional<Graph::Id> Graph::lookup(const Term& term) const {
  auto it = ids_.find(term);
  if (it == ids_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Graph::Id Graph::intern(const Term& term) {
  auto [it, inserted] = ids_.try_emplace(term, static_cast<Id>(terms_.size()));
  if (inserted) {
    terms_.push_back(term);
  }
  return it->second;
}

Triple Graph::decode(Id s, Id p, Id o) const {
  return Triple(terms_[s], terms_[p], terms_[o]);
}

bool Graph::insert(const Triple& triple) {
  Id s = intern(triple.subject);
  Id p = intern(triple.predicate);
  Id o = intern(triple.object);
  if (!spo_.insert({s, p, o}).second) {
    return false;
  }
  pos_.insert({p, o, s});
  osp_.insert({o, s, p});
  return true;
}

bool Graph::erase(const Triple& triple) {
  auto s = lookup(triple.subject);
  auto p = lookup(triple.predicate);
  auto o = lookup(triple.object);
  if (!s || !p || !o || spo_.erase({*s, *p, *o}) == 0) {
    return false;
  }
  pos_.erase({*p, *o, *s});
  osp_.erase({*o, *s, *p});
  return true;
}

bool Graph::contains(const Triple& triple) const {
  auto s = lookup(triple.subject);
  auto p = lookup(triple.predicate);
  auto o = lookup(triple.object);
  return s && p && o && spo_.contains({*s, *p, *o});
}

void Graph::merge(const Graph& other) {
  for (const auto& [prefix, ns] : other.prefixes_) {
    prefixes_[prefix] = ns;
  }
  for (const Key& k : other.spo_) {
    insert(other.decode(k[0], k[1], k[2]));
  }
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (const Key& k : spo_) {
    out.push_back(decode(k[0], k[1], k[2]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> Graph::match(const std::optional<Term>& subject,
                                 const std::optional<Term>& predicate,
                                 const std::optional<Term>& object) const {
  std::optional<Id> s, p, o;
  if (subject && !(s = lookup(*subject))) return {};
  if (predicate && !(p = lookup(*predicate))) return {};
  if (object && !(o = lookup(*object))) return {};

  std::vector<Triple> out;
  // Scans `index` over keys starting with the given bound prefix; `order`
  // maps key positions back to (s, p, o).
  auto scan = [&](const std::set<Key>& index, std::optional<Id> a,
                  std::optional<Id> b, std::optional<Id> c,
                  std::array<int, 3> order) {
    Key lo{a.value_or(kMin), a && b ? *b : kMin, a && b && c ? *c : kMin};
    Key hi{a.value_or(kMax), a && b ? *b : kMax, a && b && c ? *c : kMax};
    for (auto it = index.lower_bound(lo); it != index.end() && *it <= hi; ++it) {
      Key spo;
      for (int i = 0; i < 3; ++i) spo[order[i]] = (*it)[i];
      out.push_back(decode(spo[0], spo[1], spo[2]));
    }
  };

  if (s) {
    if (!p && o) {
      scan(osp_, o, s, std::nullopt, {2, 0, 1});
    } else {
      scan(spo_, s, p, o, {0, 1, 2});
    }
  } else if (p) {
    scan(pos_, p, o, std::nullopt, {1, 2, 0});
  } else if (o) {
    scan(osp_, o, std::nullopt, std::nullopt, {2, 0, 1});
  } else {
    scan(spo_, std::nullopt, std::nullopt, std::nullopt, {0, 1, 2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (const Graph::Key& k : a.spo_) {
    if (!b.contains(a.decode(k[0], k[1], k[2]))) {
      return false;
    }
  }
  return true;
}

Graph unionOf(std::span<const Graph> graphs) {
  Graph out;
  for (const Graph& g : graphs) {
    out.merge(g);
  }
  return out;
}

}  // namespace pcpkg::rdf
