#include "pcpkg/sparql/QueryParser.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "pcpkg/rdf/Turtle.h"

namespace pcpkg::sparql {

namespace {

// Unsupported carries the name of the construct a stray character implies;
// it is reported only if the parser reaches it.
enum class Tok { Var, IriRef, PName, String, LangTag, DoubleCaret, Number, Word, Punct, Unsupported, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // var name, IRI, prefixed name, unescaped string, ...
  std::size_t offset = 0;
};

const std::set<std::string> kUnsupported = {
    "OPTIONAL", "FILTER",  "UNION",     "MINUS",     "SERVICE", "GRAPH",
    "VALUES",   "CONSTRUCT", "ASK",     "DESCRIBE",  "INSERT",  "DELETE",
    "DISTINCT", "REDUCED", "OFFSET",    "HAVING",    "FROM",    "SUM",
    "AVG",      "MIN",     "MAX",       "SAMPLE",    "GROUP_CONCAT", "EXISTS",
    "LOAD",     "CLEAR",   "DROP",      "CREATE",    "WITH"};

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool nameChar(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

class Parser {
 public:
  Parser(std::string_view text, const rdf::PrefixMap& defaults) : text_(text) {
    query_.prefixes = defaults;
    tokenize();
  }

  Query run() {
    prologue();
    selectClause();
    whereClause();
    modifiers();
    if (peek().kind != Tok::End) {
      unexpected(peek(), "end of query");
    }
    finish();
    return std::move(query_);
  }

 private:
  // --- diagnostics -------------------------------------------------------
  std::pair<std::size_t, std::size_t> lineColumn(std::size_t offset) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  [[noreturn]] void syntax(const std::string& message, std::size_t offset) const {
    auto [line, column] = lineColumn(offset);
    throw SyntaxError(message, offset, line, column);
  }

  [[noreturn]] void unsupported(const std::string& construct, std::size_t offset) const {
    auto [line, column] = lineColumn(offset);
    throw UnsupportedFeature(construct, offset, line, column);
  }

  [[noreturn]] void unexpected(const Token& t, const std::string& wanted) const {
    if (t.kind == Tok::End) syntax("expected " + wanted + ", found end of query", t.offset);
    if (t.kind == Tok::Unsupported) unsupported(t.text, t.offset);
    if (t.kind == Tok::Word && kUnsupported.contains(upper(t.text))) {
      unsupported(upper(t.text), t.offset);
    }
    syntax("expected " + wanted + ", found '" + std::string(text_.substr(t.offset, 16)) + "'",
           t.offset);
  }

  // --- tokenizer ---------------------------------------------------------
  void tokenize() {
    std::size_t i = 0;
    auto at = [&](std::size_t k) { return k < text_.size() ? text_[k] : '\0'; };
    while (true) {
      while (i < text_.size()) {
        if (std::isspace(static_cast<unsigned char>(text_[i]))) {
          ++i;
        } else if (text_[i] == '#') {
          while (i < text_.size() && text_[i] != '\n') ++i;
        } else {
          break;
        }
      }
      if (i >= text_.size()) {
        tokens_.push_back({Tok::End, "", text_.size()});
        return;
      }
      std::size_t start = i;
      char c = text_[i];
      if (c == '?' || c == '$') {
        ++i;
        while (nameChar(static_cast<unsigned char>(at(i)))) ++i;
        if (i == start + 1) {
          tokens_.push_back({Tok::Unsupported, "property path", start});
          continue;
        }
        tokens_.push_back({Tok::Var, std::string(text_.substr(start + 1, i - start - 1)), start});
      } else if (c == '<') {
        std::size_t close = text_.find('>', i);
        std::size_t space = text_.find_first_of(" \t\r\n", i);
        if (close == std::string_view::npos || (space != std::string_view::npos && space < close)) {
          ++i;
          tokens_.push_back({Tok::Unsupported, "comparison operator", start});
          continue;
        }
        tokens_.push_back({Tok::IriRef, std::string(text_.substr(i + 1, close - i - 1)), start});
        i = close + 1;
      } else if (c == '"' || c == '\'') {
        tokens_.push_back({Tok::String, readString(i), start});
      } else if (c == '@') {
        ++i;
        while (std::isalnum(static_cast<unsigned char>(at(i))) || at(i) == '-') ++i;
        if (i == start + 1) syntax("empty language tag", start);
        tokens_.push_back({Tok::LangTag, std::string(text_.substr(start + 1, i - start - 1)), start});
      } else if (c == '^' && at(i + 1) == '^') {
        i += 2;
        tokens_.push_back({Tok::DoubleCaret, "^^", start});
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(at(i + 1))))) {
        ++i;
        while (std::isdigit(static_cast<unsigned char>(at(i))) ||
               (at(i) == '.' && std::isdigit(static_cast<unsigned char>(at(i + 1))))) {
          ++i;
        }
        tokens_.push_back({Tok::Number, std::string(text_.substr(start, i - start)), start});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
                 static_cast<unsigned char>(c) >= 0x80) {
        while (nameChar(static_cast<unsigned char>(at(i))) ||
               (at(i) == '.' && nameChar(static_cast<unsigned char>(at(i + 1))))) {
          ++i;
        }
        if (at(i) == ':') {
          ++i;
          while (nameChar(static_cast<unsigned char>(at(i))) || at(i) == ':' ||
                 (at(i) == '.' && nameChar(static_cast<unsigned char>(at(i + 1))))) {
            ++i;
          }
          tokens_.push_back({Tok::PName, std::string(text_.substr(start, i - start)), start});
        } else {
          tokens_.push_back({Tok::Word, std::string(text_.substr(start, i - start)), start});
        }
      } else if (std::string_view("{}().;,*").find(c) != std::string_view::npos) {
        ++i;
        tokens_.push_back({Tok::Punct, std::string(1, c), start});
      } else if (c == '[') {
        ++i;
        tokens_.push_back({Tok::Unsupported, "blank node property list", start});
      } else if (std::string_view("/|^+!").find(c) != std::string_view::npos) {
        ++i;
        tokens_.push_back({Tok::Unsupported, "property path", start});
      } else if (std::string_view("=<>&").find(c) != std::string_view::npos) {
        ++i;
        tokens_.push_back({Tok::Unsupported, "comparison operator", start});
      } else {
        syntax(std::string("unexpected character '") + c + "'", start);
      }
    }
  }

  std::string readString(std::size_t& i) {
    std::size_t start = i;
    char quote = text_[i];
    bool longForm = i + 2 < text_.size() && text_[i + 1] == quote && text_[i + 2] == quote;
    i += longForm ? 3 : 1;
    std::string out;
    while (true) {
      if (i >= text_.size()) syntax("unterminated string", start);
      char c = text_[i];
      if (longForm ? (c == quote && i + 2 < text_.size() && text_[i + 1] == quote &&
                      text_[i + 2] == quote)
                   : c == quote) {
        i += longForm ? 3 : 1;
        return out;
      }
      if (!longForm && (c == '\n' || c == '\r')) syntax("line break in string", i);
      if (c == '\\') {
        char e = i + 1 < text_.size() ? text_[i + 1] : '\0';
        switch (e) {
          case 't': out += '\t'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'b': out += '\b'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          default: syntax("invalid escape in string", i);
        }
        i += 2;
        continue;
      }
      out += c;
      ++i;
    }
  }

  // --- token helpers -----------------------------------------------------
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool isWord(const Token& t, std::string_view kw) const {
    return t.kind == Tok::Word && upper(t.text) == kw;
  }
  bool isPunct(const Token& t, char c) const {
    return t.kind == Tok::Punct && t.text[0] == c;
  }
  bool acceptWord(std::string_view kw) {
    if (!isWord(peek(), kw)) return false;
    next();
    return true;
  }
  bool acceptPunct(char c) {
    if (!isPunct(peek(), c)) return false;
    next();
    return true;
  }
  void expectWord(std::string_view kw) {
    if (!acceptWord(kw)) unexpected(peek(), std::string(kw));
  }
  void expectPunct(char c) {
    if (!acceptPunct(c)) unexpected(peek(), std::string("'") + c + "'");
  }
  std::string expectVar() {
    if (peek().kind != Tok::Var) unexpected(peek(), "a variable");
    return next().text;
  }

  // --- grammar -----------------------------------------------------------
  void prologue() {
    while (true) {
      if (acceptWord("PREFIX")) {
        const Token& name = next();
        if (name.kind != Tok::PName || name.text.back() != ':') {
          unexpected(name, "prefix name");
        }
        const Token& iri = next();
        if (iri.kind != Tok::IriRef) unexpected(iri, "namespace IRI");
        query_.prefixes[name.text.substr(0, name.text.size() - 1)] = resolve(iri);
      } else if (acceptWord("BASE")) {
        const Token& iri = next();
        if (iri.kind != Tok::IriRef) unexpected(iri, "base IRI");
        base_ = resolve(iri);
      } else {
        return;
      }
    }
  }

  void selectClause() {
    if (!acceptWord("SELECT")) unexpected(peek(), "SELECT");
    if (acceptPunct('*')) {
      query_.selectAll = true;
      return;
    }
    while (true) {
      if (peek().kind == Tok::Var) {
        query_.projection.push_back(Variable{next().text});
      } else if (isPunct(peek(), '(')) {
        std::size_t at = next().offset;
        const Token& fn = next();
        if (!isWord(fn, "COUNT")) {
          if (fn.kind == Tok::Word && kUnsupported.contains(upper(fn.text))) {
            unsupported(upper(fn.text), fn.offset);
          }
          unsupported("projection expression", at);
        }
        expectPunct('(');
        if (isPunct(peek(), '*')) unsupported("COUNT(*)", peek().offset);
        if (isWord(peek(), "DISTINCT")) unsupported("COUNT(DISTINCT)", peek().offset);
        std::string var = expectVar();
        expectPunct(')');
        expectWord("AS");
        std::string alias = expectVar();
        expectPunct(')');
        query_.projection.push_back(CountAggregate{var, alias});
      } else {
        break;
      }
    }
    if (query_.projection.empty()) unexpected(peek(), "projection");
  }

  void whereClause() {
    acceptWord("WHERE");
    std::size_t open = peek().offset;
    expectPunct('{');
    while (!isPunct(peek(), '}')) {
      const Token& t = peek();
      if (t.kind == Tok::End) syntax("unterminated group pattern", open);
      if (isPunct(t, '{')) unsupported("nested group pattern", t.offset);
      if (isWord(t, "BIND")) {
        bindClause();
        acceptPunct('.');
        continue;
      }
      if (t.kind == Tok::Word && kUnsupported.contains(upper(t.text))) {
        unsupported(upper(t.text), t.offset);
      }
      triplesSameSubject();
      if (!acceptPunct('.') && !isPunct(peek(), '}')) {
        unexpected(peek(), "'.' or '}'");
      }
    }
    next();
    if (query_.patterns.empty()) {
      syntax("empty basic graph pattern is not supported", open);
    }
  }

  void bindClause() {
    next();
    expectPunct('(');
    const Token& fn = next();
    if (!isWord(fn, "YEAR")) {
      unsupported("BIND expression other than YEAR()", fn.offset);
    }
    expectPunct('(');
    std::string argument = expectVar();
    expectPunct(')');
    expectWord("AS");
    std::size_t at = peek().offset;
    std::string target = expectVar();
    expectPunct(')');
    for (const auto& p : query_.patterns) {
      for (const PatternTerm* pt : {&p.subject, &p.predicate, &p.object}) {
        if (auto* v = std::get_if<Variable>(pt); v && v->name == target) {
          syntax("BIND target ?" + target + " is already bound", at);
        }
      }
    }
    for (const auto& b : query_.binds) {
      if (b.target == target) syntax("BIND target ?" + target + " is already bound", at);
    }
    query_.binds.push_back({argument, target, query_.patterns.size()});
  }

  void triplesSameSubject() {
    PatternTerm subject = patternTerm(Position::Subject);
    while (true) {
      PatternTerm predicate = patternTerm(Position::Predicate);
      while (true) {
        PatternTerm object = patternTerm(Position::Object);
        query_.patterns.push_back({subject, predicate, object});
        if (!acceptPunct(',')) break;
      }
      if (!acceptPunct(';')) break;
      while (acceptPunct(';')) {
      }
      if (isPunct(peek(), '.') || isPunct(peek(), '}')) break;
    }
  }

  enum class Position { Subject, Predicate, Object };

  PatternTerm patternTerm(Position position) {
    const Token& t = peek();
    if (t.kind == Tok::Var) return Variable{next().text};
    if (isPunct(t, '[')) unsupported("blank node property list", t.offset);
    if (isPunct(t, '(')) unsupported("collection", t.offset);
    if (position == Position::Predicate && isWord(t, "A")) {
      next();
      return rdf::Term::iri(rdf::vocab::kRdfType);
    }
    if (t.kind == Tok::IriRef) return rdf::Term::iri(resolve(next()));
    if (t.kind == Tok::PName) return rdf::Term::iri(expand(next()));
    if (position == Position::Predicate) unexpected(t, "an IRI or variable in predicate position");
    if (t.kind == Tok::PName && t.text.starts_with("_:")) {
      unsupported("blank node in query pattern", t.offset);
    }
    if (position == Position::Subject) unexpected(t, "an IRI or variable in subject position");
    if (t.kind == Tok::String) {
      std::string lexical = next().text;
      if (peek().kind == Tok::LangTag) return rdf::Term::langLiteral(lexical, next().text);
      if (peek().kind == Tok::DoubleCaret) {
        next();
        const Token& dt = next();
        if (dt.kind == Tok::IriRef) return rdf::Term::typedLiteral(lexical, resolve(dt));
        if (dt.kind == Tok::PName) return rdf::Term::typedLiteral(lexical, expand(dt));
        unexpected(dt, "datatype IRI");
      }
      return rdf::Term::literal(lexical);
    }
    if (t.kind == Tok::Number) {
      std::string lexical = next().text;
      bool decimal = lexical.find('.') != std::string::npos;
      return rdf::Term::typedLiteral(lexical, decimal ? rdf::vocab::kXsdDecimal
                                                      : rdf::vocab::kXsdInteger);
    }
    if (isWord(t, "TRUE") || isWord(t, "FALSE")) {
      std::string lexical = isWord(next(), "TRUE") ? "true" : "false";
      return rdf::Term::typedLiteral(lexical, rdf::vocab::kXsdBoolean);
    }
    unexpected(t, "an RDF term or variable");
  }

  std::string resolve(const Token& t) const {
    if (rdf::isAbsoluteIri(t.text)) return t.text;
    if (!base_) syntax("relative IRI <" + t.text + "> with no base", t.offset);
    return rdf::resolveIri(*base_, t.text);
  }

  std::string expand(const Token& t) const {
    if (t.text.starts_with("_:")) unsupported("blank node in query pattern", t.offset);
    auto colon = t.text.find(':');
    std::string prefix = t.text.substr(0, colon);
    auto it = query_.prefixes.find(prefix);
    if (it == query_.prefixes.end()) {
      syntax("undeclared prefix '" + prefix + ":'", t.offset);
    }
    return it->second + t.text.substr(colon + 1);
  }

  void modifiers() {
    if (acceptWord("GROUP")) {
      expectWord("BY");
      if (peek().kind != Tok::Var) unexpected(peek(), "a grouping variable");
      while (peek().kind == Tok::Var) query_.groupBy.push_back(next().text);
    }
    if (isWord(peek(), "HAVING")) unsupported("HAVING", peek().offset);
    if (acceptWord("ORDER")) {
      expectWord("BY");
      while (true) {
        if (peek().kind == Tok::Var) {
          query_.orderBy.push_back({next().text, false});
        } else if (isWord(peek(), "ASC") || isWord(peek(), "DESC")) {
          bool descending = isWord(next(), "DESC");
          expectPunct('(');
          std::string var = expectVar();
          expectPunct(')');
          query_.orderBy.push_back({var, descending});
        } else {
          break;
        }
      }
      if (query_.orderBy.empty()) unexpected(peek(), "an ordering key");
    }
    if (acceptWord("LIMIT")) {
      const Token& n = next();
      if (n.kind != Tok::Number || n.text.find_first_not_of("0123456789") != std::string::npos) {
        unexpected(n, "a non-negative integer");
      }
      query_.limit = std::stoull(n.text);
    }
    if (isWord(peek(), "OFFSET")) unsupported("OFFSET", peek().offset);
  }

  // Structural checks and SELECT * expansion.
  void finish() {
    std::vector<std::string> inScope;
    auto note = [&](const std::string& v) {
      if (std::find(inScope.begin(), inScope.end(), v) == inScope.end()) inScope.push_back(v);
    };
    std::size_t bind = 0;
    for (std::size_t i = 0; i <= query_.patterns.size(); ++i) {
      while (bind < query_.binds.size() && query_.binds[bind].position == i) {
        note(query_.binds[bind++].target);
      }
      if (i == query_.patterns.size()) break;
      const auto& p = query_.patterns[i];
      for (const PatternTerm* pt : {&p.subject, &p.predicate, &p.object}) {
        if (auto* v = std::get_if<Variable>(pt)) note(v->name);
      }
    }
    if (query_.selectAll) {
      if (!query_.groupBy.empty()) {
        throw QueryError("SELECT * cannot be combined with GROUP BY");
      }
      for (const auto& v : inScope) query_.projection.push_back(Variable{v});
    }

    auto grouped = [&](const std::string& v) {
      return std::find(query_.groupBy.begin(), query_.groupBy.end(), v) != query_.groupBy.end();
    };
    std::vector<std::string> projected;
    for (const auto& item : query_.projection) {
      std::string name;
      if (auto* v = std::get_if<Variable>(&item)) {
        name = v->name;
        if ((query_.hasAggregates() || !query_.groupBy.empty()) && !grouped(name)) {
          throw QueryError("projected variable ?" + name + " is not in GROUP BY");
        }
      } else {
        const auto& agg = std::get<CountAggregate>(item);
        name = agg.alias;
        if (std::find(inScope.begin(), inScope.end(), name) != inScope.end()) {
          throw QueryError("aggregate alias ?" + name + " is already bound in the pattern");
        }
      }
      if (std::find(projected.begin(), projected.end(), name) != projected.end()) {
        throw QueryError("variable ?" + name + " is projected twice");
      }
      projected.push_back(name);
    }
    for (const auto& key : query_.orderBy) {
      if (std::find(projected.begin(), projected.end(), key.variable) == projected.end() &&
          !grouped(key.variable)) {
        throw QueryError("ORDER BY variable ?" + key.variable + " is neither projected nor grouped");
      }
    }
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<std::string> base_;
  Query query_;
};

}  // namespace

QueryError::QueryError(const std::string& message, std::size_t offset,
                       std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
      offset_(offset),
      line_(line),
      column_(column) {}

UnsupportedFeature::UnsupportedFeature(const std::string& construct, std::size_t offset,
                                       std::size_t line, std::size_t column)
    : QueryError("unsupported feature: " + construct, offset, line, column),
      construct_(construct) {}

bool Query::hasAggregates() const {
  return std::any_of(projection.begin(), projection.end(), [](const ProjectionItem& p) {
    return std::holds_alternative<CountAggregate>(p);
  });
}

std::vector<std::string> Query::header() const {
  std::vector<std::string> out;
  for (const auto& item : projection) {
    if (auto* v = std::get_if<Variable>(&item)) {
      out.push_back(v->name);
    } else {
      out.push_back(std::get<CountAggregate>(item).alias);
    }
  }
  return out;
}

Query parseQuery(std::string_view text, const rdf::PrefixMap& defaultPrefixes) {
  return Parser(text, defaultPrefixes).run();
}

}  // namespace pcpkg::sparql
