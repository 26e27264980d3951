#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcpkg::sparql {

class TemplateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// SPARQL text with `{name}` placeholders. A placeholder's context decides how
// its value is escaped on instantiation:
//   inside a "..." string   backslash-escaped as a string literal
//   inside <...>            characters not allowed in an IRI percent-encoded
//   anywhere else           must already be a plain token ([A-Za-z0-9_.:-])
// Braces that do not enclose a bare identifier (e.g. `{ ?s ?p ?o }`) are
// ordinary query text.
class QueryTemplate {
 public:
  enum class Context { Literal, Iri, Bare };

  explicit QueryTemplate(std::string text);

  const std::string& text() const { return text_; }
  const std::set<std::string>& placeholders() const { return names_; }

  // Throws TemplateError on a missing or unused binding, or on a value that
  // cannot be represented in its context.
  std::string instantiate(const std::map<std::string, std::string>& bindings) const;

 private:
  struct Slot {
    std::size_t begin;  // offset of '{'
    std::size_t end;    // one past '}'
    std::string name;
    Context context;
  };

  std::string text_;
  std::vector<Slot> slots_;
  std::set<std::string> names_;
};

}  // namespace pcpkg::sparql
