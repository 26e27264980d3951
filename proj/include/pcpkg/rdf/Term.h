#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcpkg::rdf {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline const std::string kRdfType = std::string(kRdf) + "type";
inline const std::string kRdfProperty = std::string(kRdf) + "Property";
inline const std::string kRdfsLabel = std::string(kRdfs) + "label";
inline const std::string kRdfsComment = std::string(kRdfs) + "comment";
inline const std::string kRdfsClass = std::string(kRdfs) + "Class";
inline const std::string kOwlSameAs = std::string(kOwl) + "sameAs";
inline const std::string kOwlClass = std::string(kOwl) + "Class";
inline const std::string kOwlObjectProperty = std::string(kOwl) + "ObjectProperty";
inline const std::string kOwlDatatypeProperty = std::string(kOwl) + "DatatypeProperty";
inline const std::string kOwlAnnotationProperty = std::string(kOwl) + "AnnotationProperty";
inline const std::string kXsdString = std::string(kXsd) + "string";
inline const std::string kXsdInteger = std::string(kXsd) + "integer";
inline const std::string kXsdDecimal = std::string(kXsd) + "decimal";
inline const std::string kXsdDouble = std::string(kXsd) + "double";
inline const std::string kXsdBoolean = std::string(kXsd) + "boolean";
inline const std::string kXsdDate = std::string(kXsd) + "date";
inline const std::string kXsdDateTime = std::string(kXsd) + "dateTime";
inline const std::string kRdfLangString = std::string(kRdf) + "langString";
}  // namespace vocab

class TermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// True if `iri` starts with a URI scheme followed by ':'.
bool isAbsoluteIri(std::string_view iri);

// An RDF term. Language tags are stored lowercased so that equality is
// case-insensitive on tags; an explicit xsd:string datatype is dropped since
// it denotes the same literal as the plain form.
class Term {
 public:
  enum class Kind : unsigned char { Iri = 0, Blank = 1, Literal = 2 };

  Term() = default;

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical);
  static Term langLiteral(std::string lexical, std::string language);
  static Term typedLiteral(std::string lexical, std::string datatype);

  Kind kind() const { return kind_; }
  bool isIri() const { return kind_ == Kind::Iri; }
  bool isBlank() const { return kind_ == Kind::Blank; }
  bool isLiteral() const { return kind_ == Kind::Literal; }

  // IRI string, blank-node label or literal lexical form, depending on kind.
  const std::string& value() const { return value_; }
  const std::string& language() const { return language_; }
  const std::string& datatype() const { return datatype_; }
  bool hasLanguage() const { return !language_.empty(); }
  bool hasDatatype() const { return !datatype_.empty(); }

  // N-Triples form: <iri>, _:label, "lex"@lang, "lex"^^<dt>.
  std::string toNTriples() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string value, std::string language, std::string datatype)
      : kind_(kind),
        value_(std::move(value)),
        language_(std::move(language)),
        datatype_(std::move(datatype)) {}

  Kind kind_ = Kind::Iri;
  std::string value_;
  std::string language_;
  std::string datatype_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

// A statement. Subject must be an IRI or blank node, predicate an IRI.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  Triple() = default;
  Triple(Term s, Term p, Term o);

  std::string toNTriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

// Escaping helpers shared by the N-Triples writer and other text outputs.
std::string escapeLiteral(std::string_view lexical);
std::string escapeIri(std::string_view iri);

}  // namespace pcpkg::rdf
