#include "pcpkg/rdf/Turtle.h"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pcpkg::rdf {

ParseError::ParseError(std::size_t line, std::size_t column, std::string token,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message +
                         (token.empty() ? "" : " near '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

std::string removeDotSegments(std::string_view path) {
  std::string input(path);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      auto slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      auto next = input.find('/', input[0] == '/' ? 1 : 0);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

bool isNameStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool isNameChar(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

void appendUtf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, std::optional<std::string> base)
      : text_(text), base_(std::move(base)) {}

  Graph run() {
    skipWs();
    while (!atEnd()) {
      statement();
      skipWs();
    }
    return std::move(graph_);
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::size_t end = at;
    while (end < text_.size() && end - at < 24 &&
           !std::isspace(static_cast<unsigned char>(text_[end]))) {
      ++end;
    }
    std::string token(text_.substr(at, end - at));
    if (at >= text_.size()) token = "<end of input>";
    throw ParseError(line, column, token, message);
  }
  [[noreturn]] void fail(const std::string& message) const {
    fail(message, pos_);
  }

  void skipWs() {
    while (!atEnd()) {
      char c = peek();
      if (c == '#') {
        while (!atEnd() && peek() != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skipWs();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool matchKeyword(std::string_view kw, bool caseInsensitive) {
    if (pos_ + kw.size() > text_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (caseInsensitive ? std::toupper(static_cast<unsigned char>(a)) != b
                          : a != b) {
        return false;
      }
    }
    unsigned char after =
        static_cast<unsigned char>(pos_ + kw.size() < text_.size()
                                       ? text_[pos_ + kw.size()]
                                       : ' ');
    if (isNameChar(after) || after == ':') return false;
    pos_ += kw.size();
    return true;
  }

  void statement() {
    if (peek() == '@') {
      if (matchKeyword("@prefix", false)) {
        prefixDirective();
        expect('.');
        return;
      }
      if (matchKeyword("@base", false)) {
        baseDirective();
        expect('.');
        return;
      }
      fail("unknown directive");
    }
    if (matchKeyword("PREFIX", true)) {
      prefixDirective();
      return;
    }
    if (matchKeyword("BASE", true)) {
      baseDirective();
      return;
    }
    triples();
    expect('.');
  }

  void prefixDirective() {
    skipWs();
    std::size_t start = pos_;
    std::string prefix;
    while (!atEnd() && peek() != ':') {
      unsigned char c = static_cast<unsigned char>(peek());
      if (!isNameChar(c) && c != '.') fail("invalid prefix name", start);
      prefix += peek();
      ++pos_;
    }
    if (atEnd()) fail("expected ':' in prefix declaration", start);
    ++pos_;
    skipWs();
    if (peek() != '<') fail("expected namespace IRI");
    std::string ns = iriRef();
    graph_.setPrefix(std::move(prefix), std::move(ns));
  }

  void baseDirective() {
    skipWs();
    if (peek() != '<') fail("expected base IRI");
    base_ = iriRef();
  }

  void triples() {
    skipWs();
    Term subject = subjectTerm();
    predicateObjectList(subject);
  }

  void predicateObjectList(const Term& subject) {
    while (true) {
      skipWs();
      Term predicate = verb();
      while (true) {
        skipWs();
        std::size_t at = pos_;
        Term object = objectTerm();
        try {
          graph_.insert(Triple(subject, predicate, object));
        } catch (const TermError& e) {
          fail(e.what(), at);
        }
        skipWs();
        if (peek() != ',') break;
        ++pos_;
      }
      skipWs();
      if (peek() != ';') break;
      while (peek() == ';') {
        ++pos_;
        skipWs();
      }
      if (peek() == '.' || atEnd()) break;
    }
  }

  void rejectUnsupported() {
    char c = peek();
    if (c == '[') fail("unsupported Turtle syntax: blank node property list");
    if (c == '(') fail("unsupported Turtle syntax: collection");
    if (c == '<' && peek(1) == '<') fail("unsupported Turtle syntax: quoted triple");
  }

  Term subjectTerm() {
    rejectUnsupported();
    char c = peek();
    if (c == '<') return iriTerm(iriRef());
    if (c == '_' && peek(1) == ':') return blankNode();
    if (c == '"' || c == '\'') fail("literal not allowed as subject");
    return iriTerm(prefixedName());
  }

  Term verb() {
    if (peek() == 'a') {
      unsigned char next = static_cast<unsigned char>(peek(1));
      if (!isNameChar(next) && next != ':' && next != '.') {
        ++pos_;
        return Term::iri(vocab::kRdfType);
      }
    }
    rejectUnsupported();
    if (peek() == '<') return iriTerm(iriRef());
    if (peek() == '_' || peek() == '"' || peek() == '\'') {
      fail("predicate must be an IRI");
    }
    return iriTerm(prefixedName());
  }

  Term objectTerm() {
    rejectUnsupported();
    char c = peek();
    if (c == '<') return iriTerm(iriRef());
    if (c == '_' && peek(1) == ':') return blankNode();
    if (c == '"' || c == '\'') return literal();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return number();
    }
    if (matchKeyword("true", false)) return Term::typedLiteral("true", vocab::kXsdBoolean);
    if (matchKeyword("false", false)) return Term::typedLiteral("false", vocab::kXsdBoolean);
    return iriTerm(prefixedName());
  }

  Term iriTerm(std::string iri) {
    if (!isAbsoluteIri(iri)) {
      fail("IRI is not absolute: <" + iri + ">");
    }
    return Term::iri(std::move(iri));
  }

  unsigned long hexCodepoint(int digits) {
    unsigned long cp = 0;
    for (int i = 0; i < digits; ++i) {
      char h = peek();
      if (!std::isxdigit(static_cast<unsigned char>(h))) fail("invalid \\u escape");
      cp = cp * 16 + static_cast<unsigned long>(
                         std::isdigit(static_cast<unsigned char>(h))
                             ? h - '0'
                             : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
      ++pos_;
    }
    return cp;
  }

  // Reads <...> and resolves it against the current base.
  std::string iriRef() {
    std::size_t start = pos_;
    ++pos_;
    std::string iri;
    while (true) {
      if (atEnd()) fail("unterminated IRI", start);
      char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        char kind = peek();
        ++pos_;
        if (kind == 'u') {
          appendUtf8(iri, hexCodepoint(4));
        } else if (kind == 'U') {
          appendUtf8(iri, hexCodepoint(8));
        } else {
          fail("invalid escape in IRI", pos_ - 2);
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`' || c == '<') {
        fail("invalid character in IRI", pos_);
      }
      iri += c;
      ++pos_;
    }
    if (isAbsoluteIri(iri)) return iri;
    if (!base_) fail("relative IRI <" + iri + "> with no base", start);
    return resolveIri(*base_, iri);
  }

  std::string prefixedName() {
    std::size_t start = pos_;
    std::string prefix;
    if (!atEnd() && isNameStart(static_cast<unsigned char>(peek()))) {
      while (!atEnd() && (isNameChar(static_cast<unsigned char>(peek())) ||
                          (peek() == '.' && peek(1) != ':' &&
                           isNameChar(static_cast<unsigned char>(peek(1)))))) {
        prefix += peek();
        ++pos_;
      }
    }
    if (peek() != ':') {
      pos_ = start;
      fail("expected IRI, prefixed name or literal");
    }
    ++pos_;
    std::string local;
    while (!atEnd()) {
      unsigned char c = static_cast<unsigned char>(peek());
      if (isNameChar(c) || c == ':' || c == '%') {
        local += peek();
        ++pos_;
      } else if (c == '.' && (isNameChar(static_cast<unsigned char>(peek(1))) ||
                              peek(1) == ':' || peek(1) == '%')) {
        local += '.';
        ++pos_;
      } else if (c == '\\' && pos_ + 1 < text_.size()) {
        local += peek(1);
        pos_ += 2;
      } else {
        break;
      }
    }
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end()) {
      fail("undeclared prefix '" + prefix + ":'", start);
    }
    return it->second + local;
  }

  Term blankNode() {
    pos_ += 2;
    std::size_t start = pos_;
    std::string label;
    while (!atEnd() && (isNameChar(static_cast<unsigned char>(peek())) ||
                        (peek() == '.' && isNameChar(static_cast<unsigned char>(peek(1)))))) {
      label += peek();
      ++pos_;
    }
    if (label.empty()) fail("empty blank node label", start);
    return Term::blank(std::move(label));
  }

  Term literal() {
    std::size_t start = pos_;
    char quote = peek();
    bool longForm = peek(1) == quote && peek(2) == quote;
    pos_ += longForm ? 3 : 1;
    std::string lexical;
    while (true) {
      if (atEnd()) fail("unterminated string literal", start);
      char c = peek();
      if (longForm) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          break;
        }
      } else {
        if (c == quote) {
          ++pos_;
          break;
        }
        if (c == '\n' || c == '\r') fail("line break in short string literal");
      }
      if (c == '\\') {
        ++pos_;
        char e = peek();
        ++pos_;
        switch (e) {
          case 't': lexical += '\t'; break;
          case 'b': lexical += '\b'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case 'f': lexical += '\f'; break;
          case '"': lexical += '"'; break;
          case '\'': lexical += '\''; break;
          case '\\': lexical += '\\'; break;
          case 'u': appendUtf8(lexical, hexCodepoint(4)); break;
          case 'U': appendUtf8(lexical, hexCodepoint(8)); break;
          default: fail("invalid escape sequence in string", pos_ - 2);
        }
        continue;
      }
      lexical += c;
      ++pos_;
    }
    if (peek() == '@') {
      ++pos_;
      std::string lang;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '-')) {
        lang += peek();
        ++pos_;
      }
      if (lang.empty()) fail("empty language tag");
      return Term::langLiteral(std::move(lexical), std::move(lang));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      std::string datatype = peek() == '<' ? iriRef() : prefixedName();
      return Term::typedLiteral(std::move(lexical), std::move(datatype));
    }
    return Term::literal(std::move(lexical));
  }

  Term number() {
    std::size_t start = pos_;
    std::string lexical;
    if (peek() == '+' || peek() == '-') {
      lexical += peek();
      ++pos_;
    }
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        lexical += peek();
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t intDigits = digits();
    bool decimal = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      lexical += '.';
      ++pos_;
      digits();
      decimal = true;
    }
    if (peek() == 'e' || peek() == 'E') {
      lexical += peek();
      ++pos_;
      if (peek() == '+' || peek() == '-') {
        lexical += peek();
        ++pos_;
      }
      if (digits() == 0) fail("malformed exponent", start);
      return Term::typedLiteral(std::move(lexical), vocab::kXsdDouble);
    }
    if (intDigits == 0 && !decimal) fail("malformed number", start);
    return Term::typedLiteral(std::move(lexical),
                              decimal ? vocab::kXsdDecimal : vocab::kXsdInteger);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::string> base_;
  Graph graph_;
};

}  // namespace

std::string resolveIri(std::string_view base, std::string_view reference) {
  if (isAbsoluteIri(reference)) {
    return std::string(reference);
  }
  auto colon = base.find(':');
  std::string_view scheme = base.substr(0, colon + 1);
  std::string_view rest = base.substr(colon + 1);
  std::string_view authority;
  std::string_view path = rest;
  if (rest.starts_with("//")) {
    auto slash = rest.find_first_of("/?#", 2);
    authority = rest.substr(0, slash);
    path = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash);
  }
  auto cut = path.find_first_of("?#");
  std::string_view basePath = path.substr(0, cut);
  std::string_view baseQuery;
  if (cut != std::string_view::npos && path[cut] == '?') {
    baseQuery = path.substr(cut, path.find('#', cut) - cut);
  }

  if (reference.starts_with("//")) {
    return std::string(scheme) + std::string(reference);
  }
  if (reference.empty() || reference[0] == '#') {
    return std::string(scheme) + std::string(authority) + std::string(basePath) +
           std::string(baseQuery) + std::string(reference);
  }
  if (reference[0] == '?') {
    return std::string(scheme) + std::string(authority) + std::string(basePath) +
           std::string(reference);
  }
  auto tail = reference.find_first_of("?#");
  std::string refPath(reference.substr(0, tail));
  std::string refTail(tail == std::string_view::npos ? std::string_view{}
                                                     : reference.substr(tail));
  std::string merged;
  if (refPath.starts_with("/")) {
    merged = refPath;
  } else if (!authority.empty() && basePath.empty()) {
    merged = "/" + refPath;
  } else {
    auto slash = basePath.rfind('/');
    merged = std::string(slash == std::string_view::npos ? std::string_view{}
                                                         : basePath.substr(0, slash + 1)) +
             refPath;
  }
  return std::string(scheme) + std::string(authority) + removeDotSegments(merged) +
         refTail;
}

Graph parseTurtle(std::string_view text, const std::optional<std::string>& base) {
  return TurtleParser(text, base).run();
}

Graph parseTurtleFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseTurtle(buffer.str());
}

}  // namespace pcpkg::rdf
