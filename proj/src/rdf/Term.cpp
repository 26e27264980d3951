#include "pcpkg/rdf/Term.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>

namespace pcpkg::rdf {

bool isAbsoluteIri(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
    return false;
  }
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') {
      return true;
    }
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return false;
}

Term Term::iri(std::string value) {
  if (!isAbsoluteIri(value)) {
    throw TermError("IRI is not absolute: <" + value + ">");
  }
  return Term(Kind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (label.empty()) {
    throw TermError("blank node label must not be empty");
  }
  return Term(Kind::Blank, std::move(label), {}, {});
}

Term Term::literal(std::string lexical) {
  return Term(Kind::Literal, std::move(lexical), {}, {});
}

Term Term::langLiteral(std::string lexical, std::string language) {
  if (language.empty()) {
    return literal(std::move(lexical));
  }
  std::transform(language.begin(), language.end(), language.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return Term(Kind::Literal, std::move(lexical), std::move(language), {});
}

Term Term::typedLiteral(std::string lexical, std::string datatype) {
  if (datatype.empty() || datatype == vocab::kXsdString) {
    return literal(std::move(lexical));
  }
  if (!isAbsoluteIri(datatype)) {
    throw TermError("datatype IRI is not absolute: <" + datatype + ">");
  }
  return Term(Kind::Literal, std::move(lexical), {}, std::move(datatype));
}

std::string escapeLiteral(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (char c : lexical) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escapeIri(std::string_view iri) {
  std::string out;
  out.reserve(iri.size());
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04X", u);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

std::string Term::toNTriples() const {
  switch (kind_) {
    case Kind::Iri:
      return "<" + escapeIri(value_) + ">";
    case Kind::Blank:
      return "_:" + value_;
    case Kind::Literal: {
      std::string out = "\"" + escapeLiteral(value_) + "\"";
      if (!language_.empty()) {
        out += "@" + language_;
      } else if (!datatype_.empty()) {
        out += "^^<" + escapeIri(datatype_) + ">";
      }
      return out;
    }
  }
  return {};
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::hash<std::string> h;
  std::size_t seed = static_cast<std::size_t>(t.kind());
  for (const std::string* s : {&t.value(), &t.language(), &t.datatype()}) {
    seed ^= h(*s) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.isLiteral()) {
    throw TermError("triple subject must be an IRI or blank node, got " +
                    subject.toNTriples());
  }
  if (!predicate.isIri()) {
    throw TermError("triple predicate must be an IRI, got " +
                    predicate.toNTriples());
  }
}

std::string Triple::toNTriples() const {
  return subject.toNTriples() + " " + predicate.toNTriples() + " " +
         object.toNTriples() + " .";
}

}  // namespace pcpkg::rdf
