#pragma once

// Reference evaluator for the query subset: enumerates every assignment of
// the pattern variables over the terms of the graph and keeps those under
// which all instantiated patterns are triples of the graph. Exponential in
// the number of variables; only meant for small random graphs.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcpkg/rdf/Graph.h"
#include "pcpkg/sparql/Query.h"

namespace pcpkg::testkit {

// Leading year per the documented rule, written without regex.
inline std::optional<std::string> naiveYear(const rdf::Term& t) {
  if (!t.isLiteral() || t.hasLanguage()) return std::nullopt;
  const std::string x = std::string(rdf::vocab::kXsd);
  const std::string& dt = t.datatype();
  if (!dt.empty() && dt != x + "date" && dt != x + "dateTime" && dt != x + "gYear" &&
      dt != x + "gYearMonth") {
    return std::nullopt;
  }
  const std::string& v = t.value();
  auto digits = [&](std::size_t from, std::size_t n) {
    if (v.size() < from + n) return false;
    for (std::size_t i = from; i < from + n; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    }
    return true;
  };
  if (!digits(0, 4)) return std::nullopt;
  std::size_t pos = 4;
  if (pos < v.size() && v[pos] == '-') {
    if (!digits(pos + 1, 2)) return std::nullopt;
    int month = std::stoi(v.substr(pos + 1, 2));
    if (month < 1 || month > 12) return std::nullopt;
    pos += 3;
    if (pos < v.size() && v[pos] == '-') {
      if (!digits(pos + 1, 2)) return std::nullopt;
      int day = std::stoi(v.substr(pos + 1, 2));
      if (day < 1 || day > 31) return std::nullopt;
      pos += 3;
    }
  }
  // The random corpora only contain the shapes above; anything trailing is
  // treated as a failure here.
  if (pos != v.size()) return std::nullopt;
  return std::to_string(std::stoi(v.substr(0, 4)));
}

// Rows as canonical strings ("\t"-joined N-Triples cells), sorted.
inline std::vector<std::string> naiveEvaluate(const sparql::Query& q, const rdf::Graph& g) {
  std::set<rdf::Term> domainSet;
  for (const auto& t : g.triples()) {
    domainSet.insert(t.subject);
    domainSet.insert(t.predicate);
    domainSet.insert(t.object);
  }
  std::vector<rdf::Term> domain(domainSet.begin(), domainSet.end());

  std::vector<std::string> vars;
  for (const auto& p : q.patterns) {
    for (const sparql::PatternTerm* pt : {&p.subject, &p.predicate, &p.object}) {
      if (auto* v = std::get_if<sparql::Variable>(pt)) {
        if (std::find(vars.begin(), vars.end(), v->name) == vars.end()) vars.push_back(v->name);
      }
    }
  }

  using Assignment = std::map<std::string, rdf::Term>;
  std::vector<Assignment> solutions;
  Assignment current;
  auto resolve = [&](const sparql::PatternTerm& pt) {
    if (auto* v = std::get_if<sparql::Variable>(&pt)) return current.at(v->name);
    return std::get<rdf::Term>(pt);
  };
  std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
    if (i == vars.size()) {
      for (const auto& p : q.patterns) {
        rdf::Term s = resolve(p.subject), pr = resolve(p.predicate), o = resolve(p.object);
        if (s.isLiteral() || !pr.isIri()) return;
        if (!g.contains(rdf::Triple(s, pr, o))) return;
      }
      solutions.push_back(current);
      return;
    }
    for (const auto& term : domain) {
      current[vars[i]] = term;
      enumerate(i + 1);
    }
    current.erase(vars[i]);
  };
  if (!domain.empty() || vars.empty()) enumerate(0);

  std::vector<Assignment> extended;
  for (auto s : solutions) {
    bool keep = true;
    for (const auto& b : q.binds) {
      auto it = s.find(b.argument);
      std::optional<std::string> year;
      if (it != s.end()) year = naiveYear(it->second);
      if (!year) {
        keep = false;
        break;
      }
      s[b.target] = rdf::Term::typedLiteral(*year, rdf::vocab::kXsdInteger);
    }
    if (keep) extended.push_back(std::move(s));
  }

  auto cell = [](const Assignment& a, const std::string& v) {
    auto it = a.find(v);
    return it == a.end() ? std::string() : it->second.toNTriples();
  };
  std::vector<std::string> rows;
  if (q.hasAggregates() || !q.groupBy.empty()) {
    std::map<std::vector<std::string>, std::vector<const Assignment*>> groups;
    for (const auto& s : extended) {
      std::vector<std::string> key;
      for (const auto& v : q.groupBy) key.push_back(cell(s, v));
      groups[key].push_back(&s);
    }
    for (const auto& [key, members] : groups) {
      std::string row;
      for (const auto& item : q.projection) {
        if (auto* v = std::get_if<sparql::Variable>(&item)) {
          row += cell(*members.front(), v->name);
        } else {
          const auto& agg = std::get<sparql::CountAggregate>(item);
          std::size_t n = std::count_if(members.begin(), members.end(), [&](const Assignment* a) {
            return a->contains(agg.variable);
          });
          row += rdf::Term::typedLiteral(std::to_string(n), rdf::vocab::kXsdInteger).toNTriples();
        }
        row += '\t';
      }
      rows.push_back(row);
    }
  } else {
    for (const auto& s : extended) {
      std::string row;
      for (const auto& item : q.projection) {
        row += cell(s, std::get<sparql::Variable>(item).name);
        row += '\t';
      }
      rows.push_back(row);
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace pcpkg::testkit
