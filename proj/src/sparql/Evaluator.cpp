#include "pcpkg/sparql/Evaluator.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <regex>
#include <unordered_map>

namespace pcpkg::sparql {

namespace {

using Binding = std::vector<std::optional<rdf::Term>>;

class VariableSlots {
 public:
  std::size_t slot(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, index_.size());
    return it->second;
  }
  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

bool isNumericDatatype(const std::string& dt) {
  return dt == rdf::vocab::kXsdInteger || dt == rdf::vocab::kXsdDecimal ||
         dt == rdf::vocab::kXsdDouble ||
         dt == std::string(rdf::vocab::kXsd) + "float" ||
         dt == std::string(rdf::vocab::kXsd) + "int" ||
         dt == std::string(rdf::vocab::kXsd) + "long";
}

std::string canonicalRow(const Row& row) {
  std::string out;
  for (const auto& cell : row) {
    if (cell) out += cell->toNTriples();
    out += '\t';
  }
  return out;
}

// Probes the graph for one pattern under `binding` and appends the extended
// bindings to `out`.
void extend(const rdf::Graph& graph, const TriplePattern& pattern,
            const std::array<std::optional<std::size_t>, 3>& slots, const Binding& binding,
            std::vector<Binding>& out) {
  const PatternTerm* parts[3] = {&pattern.subject, &pattern.predicate, &pattern.object};
  std::optional<rdf::Term> bound[3];
  for (int i = 0; i < 3; ++i) {
    if (auto* term = std::get_if<rdf::Term>(parts[i])) {
      bound[i] = *term;
    } else if (binding[*slots[i]]) {
      bound[i] = binding[*slots[i]];
    }
  }
  if (bound[1] && !bound[1]->isIri()) return;
  if (bound[0] && bound[0]->isLiteral()) return;
  for (const rdf::Triple& t : graph.match(bound[0], bound[1], bound[2])) {
    const rdf::Term* values[3] = {&t.subject, &t.predicate, &t.object};
    Binding next = binding;
    bool consistent = true;
    for (int i = 0; i < 3 && consistent; ++i) {
      if (!slots[i] || bound[i]) continue;
      auto& cell = next[*slots[i]];
      if (cell && *cell != *values[i]) {
        consistent = false;  // same variable twice in one pattern
      } else {
        cell = *values[i];
      }
    }
    if (consistent) out.push_back(std::move(next));
  }
}

}  // namespace

std::optional<int> extractYear(const rdf::Term& term) {
  if (!term.isLiteral() || term.hasLanguage()) return std::nullopt;
  const std::string& dt = term.datatype();
  static const std::string kGYear = std::string(rdf::vocab::kXsd) + "gYear";
  static const std::string kGYearMonth = std::string(rdf::vocab::kXsd) + "gYearMonth";
  if (!dt.empty() && dt != rdf::vocab::kXsdDate && dt != rdf::vocab::kXsdDateTime &&
      dt != kGYear && dt != kGYearMonth) {
    return std::nullopt;
  }
  static const std::regex kShape(
      R"(^(\d{4})(?:-(\d{2})(?:-(\d{2})(?:T\d{2}:\d{2}(?::\d{2}(?:\.\d+)?)?)?)?)?(?:Z|[+-]\d{2}:\d{2})?$)");
  std::smatch m;
  if (!std::regex_match(term.value(), m, kShape)) return std::nullopt;
  if (m[2].matched) {
    int month = std::stoi(m[2].str());
    if (month < 1 || month > 12) return std::nullopt;
  }
  if (m[3].matched) {
    int day = std::stoi(m[3].str());
    if (day < 1 || day > 31) return std::nullopt;
  }
  return std::stoi(m[1].str());
}

int compareTerms(const std::optional<rdf::Term>& a, const std::optional<rdf::Term>& b) {
  if (!a || !b) return static_cast<int>(a.has_value()) - static_cast<int>(b.has_value());
  auto rank = [](const rdf::Term& t) {
    switch (t.kind()) {
      case rdf::Term::Kind::Blank: return 0;
      case rdf::Term::Kind::Iri: return 1;
      case rdf::Term::Kind::Literal: return 2;
    }
    return 3;
  };
  if (rank(*a) != rank(*b)) return rank(*a) < rank(*b) ? -1 : 1;
  if (a->isLiteral() && isNumericDatatype(a->datatype()) && isNumericDatatype(b->datatype())) {
    double x = std::strtod(a->value().c_str(), nullptr);
    double y = std::strtod(b->value().c_str(), nullptr);
    if (x != y) return x < y ? -1 : 1;
  }
  auto cmp = [](const std::string& x, const std::string& y) { return x.compare(y); };
  if (int c = cmp(a->value(), b->value())) return c < 0 ? -1 : 1;
  if (int c = cmp(a->datatype(), b->datatype())) return c < 0 ? -1 : 1;
  if (int c = cmp(a->language(), b->language())) return c < 0 ? -1 : 1;
  return 0;
}

ResultTable evaluate(const Query& query, const rdf::Graph& graph) {
  return evaluate(query, std::span<const rdf::Graph>(&graph, 1));
}

ResultTable evaluate(const Query& query, std::span<const rdf::Graph> graphs) {
  if (graphs.empty()) {
    throw EvaluationError("no graphs to query");
  }
  rdf::Graph merged;
  const rdf::Graph* data = &graphs.front();
  if (graphs.size() > 1) {
    merged = rdf::unionOf(graphs);
    data = &merged;
  }

  VariableSlots slots;
  std::vector<std::array<std::optional<std::size_t>, 3>> patternSlots;
  for (const auto& p : query.patterns) {
    std::array<std::optional<std::size_t>, 3> s;
    const PatternTerm* parts[3] = {&p.subject, &p.predicate, &p.object};
    for (int i = 0; i < 3; ++i) {
      if (auto* v = std::get_if<Variable>(parts[i])) s[i] = slots.slot(v->name);
    }
    patternSlots.push_back(s);
  }
  for (const auto& b : query.binds) {
    slots.slot(b.argument);
    slots.slot(b.target);
  }
  for (const auto& item : query.projection) {
    if (auto* v = std::get_if<Variable>(&item)) slots.slot(v->name);
    if (auto* c = std::get_if<CountAggregate>(&item)) slots.slot(c->variable);
  }
  for (const auto& g : query.groupBy) slots.slot(g);
  for (const auto& k : query.orderBy) slots.slot(k.variable);
  // Aggregate aliases live only in the output rows.

  std::vector<Binding> solutions{Binding(slots.size())};
  std::size_t nextBind = 0;
  auto applyBinds = [&](std::size_t position) {
    while (nextBind < query.binds.size() && query.binds[nextBind].position == position) {
      const YearBind& bind = query.binds[nextBind++];
      std::size_t from = *slots.find(bind.argument);
      std::size_t to = *slots.find(bind.target);
      std::vector<Binding> kept;
      for (auto& s : solutions) {
        if (!s[from]) continue;
        auto year = extractYear(*s[from]);
        if (!year) continue;
        s[to] = rdf::Term::typedLiteral(std::to_string(*year), rdf::vocab::kXsdInteger);
        kept.push_back(std::move(s));
      }
      solutions = std::move(kept);
    }
  };
  for (std::size_t i = 0; i < query.patterns.size(); ++i) {
    applyBinds(i);
    std::vector<Binding> next;
    for (const auto& s : solutions) {
      extend(*data, query.patterns[i], patternSlots[i], s, next);
    }
    solutions = std::move(next);
  }
  applyBinds(query.patterns.size());

  ResultTable table;
  table.header = query.header();

  // Each output row carries the values of its ORDER BY keys alongside.
  struct Output {
    Row row;
    Row keys;
  };
  std::vector<Output> outputs;
  auto orderKeys = [&](const Binding& b, const Row& row) {
    Row keys;
    for (const auto& k : query.orderBy) {
      auto col = std::find(table.header.begin(), table.header.end(), k.variable);
      keys.push_back(col != table.header.end()
                         ? row[static_cast<std::size_t>(col - table.header.begin())]
                         : b[*slots.find(k.variable)]);
    }
    return keys;
  };

  if (query.hasAggregates() || !query.groupBy.empty()) {
    std::vector<std::size_t> keySlots;
    for (const auto& g : query.groupBy) keySlots.push_back(*slots.find(g));
    std::map<std::string, std::pair<Binding, std::vector<std::size_t>>> groups;
    std::vector<std::size_t> countSlots;
    for (const auto& item : query.projection) {
      if (auto* c = std::get_if<CountAggregate>(&item)) {
        countSlots.push_back(*slots.find(c->variable));
      }
    }
    for (const auto& s : solutions) {
      Row key;
      for (std::size_t k : keySlots) key.push_back(s[k]);
      auto [it, inserted] = groups.try_emplace(
          canonicalRow(key), s, std::vector<std::size_t>(countSlots.size(), 0));
      for (std::size_t c = 0; c < countSlots.size(); ++c) {
        if (s[countSlots[c]]) ++it->second.second[c];
      }
    }
    for (const auto& [key, group] : groups) {
      const auto& [representative, counts] = group;
      Row row;
      std::size_t c = 0;
      for (const auto& item : query.projection) {
        if (auto* v = std::get_if<Variable>(&item)) {
          row.push_back(representative[*slots.find(v->name)]);
        } else {
          row.push_back(rdf::Term::typedLiteral(std::to_string(counts[c++]),
                                                rdf::vocab::kXsdInteger));
        }
      }
      Row keys = orderKeys(representative, row);
      outputs.push_back({std::move(row), std::move(keys)});
    }
  } else {
    for (const auto& s : solutions) {
      Row row;
      for (const auto& item : query.projection) {
        row.push_back(s[*slots.find(std::get<Variable>(item).name)]);
      }
      Row keys = orderKeys(s, row);
      outputs.push_back({std::move(row), std::move(keys)});
    }
  }

  if (!query.orderBy.empty()) {
    std::vector<std::string> canonical;
    std::vector<std::size_t> order(outputs.size());
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      order[i] = i;
      canonical.push_back(canonicalRow(outputs[i].row));
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      for (std::size_t k = 0; k < query.orderBy.size(); ++k) {
        int c = compareTerms(outputs[x].keys[k], outputs[y].keys[k]);
        if (c != 0) return query.orderBy[k].descending ? c > 0 : c < 0;
      }
      return canonical[x] < canonical[y];
    });
    for (std::size_t i : order) table.rows.push_back(std::move(outputs[i].row));
  } else {
    for (auto& o : outputs) table.rows.push_back(std::move(o.row));
  }

  if (query.limit && table.rows.size() > *query.limit) {
    table.rows.resize(*query.limit);
  }
  return table;
}

}  // namespace pcpkg::sparql
