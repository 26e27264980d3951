#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcpkg/rdf/Graph.h"

namespace pcpkg::fusion {

enum class LintKind {
  MissingLabel,
  MissingDescription,
  MultilingualLabel,
  NamingPattern,
  LanguageMissing,
};

std::string_view lintKindName(LintKind kind);

struct LintIssue {
  std::string subject;
  LintKind kind;
  std::string detail;
  std::optional<std::string> suggestedFix;

  friend bool operator==(const LintIssue&, const LintIssue&) = default;
};

// Checks every non-builtin vocabulary term of `graph`. Issues come out sorted
// by subject, then in LintKind order. A term whose label packs several
// languages into one string gets a multilingual-label issue instead of a
// language-missing one.
std::vector<LintIssue> lintVocabulary(const rdf::Graph& graph,
                                      const std::vector<std::string>& languages = {"de", "en"});

// Conventional spelling of `local`: lowerCamelCase for properties,
// UpperCamelCase for classes. A trailing language qualifier moves to the
// front, so surname_lat becomes latinSurname.
std::string suggestName(std::string_view local, bool isClass);

// CSV with header subject,kind,detail,suggested-fix and CRLF line ends.
std::string renderLintCsv(const std::vector<LintIssue>& issues);

}  // namespace pcpkg::fusion
