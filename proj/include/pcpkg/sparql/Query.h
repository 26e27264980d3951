#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pcpkg/rdf/Graph.h"
#include "pcpkg/rdf/Term.h"

namespace pcpkg::sparql {

// Base class of every query error; `offset` is a byte position in the query
// text, with 1-based line/column derived from it (all zero when the error is
// not tied to a position).
class QueryError : public std::runtime_error {
 public:
  QueryError(const std::string& message, std::size_t offset = 0,
             std::size_t line = 0, std::size_t column = 0);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

class SyntaxError : public QueryError {
 public:
  using QueryError::QueryError;
};

// A construct outside the supported subset (OPTIONAL, FILTER, ...).
class UnsupportedFeature : public QueryError {
 public:
  UnsupportedFeature(const std::string& construct, std::size_t offset,
                     std::size_t line, std::size_t column);
  const std::string& construct() const { return construct_; }

 private:
  std::string construct_;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Variable {
  std::string name;  // without the leading '?'
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<rdf::Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

struct CountAggregate {
  std::string variable;
  std::string alias;
};

using ProjectionItem = std::variant<Variable, CountAggregate>;

// BIND(year(?argument) AS ?target), placed after the first `position`
// triple patterns.
struct YearBind {
  std::string argument;
  std::string target;
  std::size_t position = 0;
};

struct OrderKey {
  std::string variable;
  bool descending = false;
};

struct Query {
  std::vector<ProjectionItem> projection;
  bool selectAll = false;
  std::vector<TriplePattern> patterns;
  std::vector<YearBind> binds;
  std::vector<std::string> groupBy;
  std::vector<OrderKey> orderBy;
  std::optional<std::size_t> limit;
  rdf::PrefixMap prefixes;

  bool hasAggregates() const;
  // Output column names in projection order.
  std::vector<std::string> header() const;
};

}  // namespace pcpkg::sparql
