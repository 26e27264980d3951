#include "pcpkg/fusion/Lint.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "pcpkg/fusion/Vocabulary.h"
#include "pcpkg/sparql/ResultTable.h"

namespace pcpkg::fusion {

namespace {

const std::map<std::string, std::string>& qualifiers() {
  static const std::map<std::string, std::string> q = {
      {"lat", "latin"},   {"la", "latin"},    {"de", "german"}, {"ger", "german"},
      {"en", "english"},  {"eng", "english"}, {"gr", "greek"},  {"grc", "greek"},
  };
  return q;
}

bool isUpper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool isLower(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool isAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

bool followsConvention(const std::string& local, bool isClass) {
  if (local.empty()) return false;
  if (isClass ? !isUpper(local.front()) : !isLower(local.front())) return false;
  return std::all_of(local.begin(), local.end(), isAlnum);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> splitLabel(const std::string& label) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto cut = label.find_first_of("/|", start);
    parts.push_back(trim(std::string_view(label).substr(start, cut - start)));
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  return parts;
}

std::string quoteLiteral(const std::string& text, const std::string& lang) {
  return "\"" + rdf::escapeLiteral(text) + "\"@" + lang;
}

}  // namespace

std::string_view lintKindName(LintKind kind) {
  switch (kind) {
    case LintKind::MissingLabel: return "missing-label";
    case LintKind::MissingDescription: return "missing-description";
    case LintKind::MultilingualLabel: return "multilingual-label";
    case LintKind::NamingPattern: return "naming-pattern";
    case LintKind::LanguageMissing: return "language-missing";
  }
  return "unknown";
}

std::string suggestName(std::string_view local, bool isClass) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < local.size(); ++i) {
    char c = local[i];
    if (!isAlnum(c)) {
      flush();
    } else if (isUpper(c) && !current.empty() &&
               (!isUpper(current.back()) ||
                (i + 1 < local.size() && isLower(local[i + 1])))) {
      // Word boundary: "aB", or the last capital of an acronym in "GNDNumber".
      flush();
      current += c;
    } else {
      current += c;
    }
  }
  flush();
  for (auto& w : words) {
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  }
  if (words.size() > 1) {
    auto q = qualifiers().find(words.back());
    if (q != qualifiers().end()) {
      words.pop_back();
      words.insert(words.begin(), q->second);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string w = words[i];
    if (i > 0 || isClass) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    out += w;
  }
  return out;
}

std::vector<LintIssue> lintVocabulary(const rdf::Graph& graph,
                                      const std::vector<std::string>& languages) {
  Vocabulary vocab = extractVocabulary(graph);
  std::map<std::string, bool> terms;  // IRI -> is a class
  for (const auto& p : vocab.properties) terms.emplace(p, false);
  for (const auto& c : vocab.classes) terms[c] = true;

  const auto label = rdf::Term::iri(rdf::vocab::kRdfsLabel);
  const auto comment = rdf::Term::iri(rdf::vocab::kRdfsComment);
  std::vector<LintIssue> issues;
  for (const auto& [iri, isClass] : terms) {
    if (isBuiltinIri(iri)) continue;
    const auto subject = rdf::Term::iri(iri);
    std::vector<rdf::Term> labels;
    for (const auto& t : graph.match(subject, label, std::nullopt)) {
      if (t.object.isLiteral()) labels.push_back(t.object);
    }

    bool multilingual = false;
    if (labels.empty()) {
      issues.push_back({iri, LintKind::MissingLabel, "no rdfs:label", std::nullopt});
    } else {
      for (const auto& l : labels) {
        auto parts = splitLabel(l.value());
        bool split = parts.size() > 1 &&
                     std::none_of(parts.begin(), parts.end(),
                                  [](const std::string& p) { return p.empty(); });
        if (!split) continue;
        multilingual = true;
        std::optional<std::string> fix;
        if (parts.size() == languages.size()) {
          std::string f;
          for (std::size_t i = 0; i < parts.size(); ++i) {
            f += (i ? " , " : "") + quoteLiteral(parts[i], languages[i]);
          }
          fix = f;
        }
        issues.push_back({iri, LintKind::MultilingualLabel,
                          "label \"" + l.value() + "\" combines " +
                              std::to_string(parts.size()) + " texts",
                          fix});
      }
    }

    if (graph.match(subject, comment, std::nullopt).empty()) {
      issues.push_back({iri, LintKind::MissingDescription, "no rdfs:comment", std::nullopt});
    }

    std::string local = localName(iri);
    if (!followsConvention(local, isClass)) {
      std::string want = isClass ? "UpperCamelCase" : "lowerCamelCase";
      std::string suggestion = suggestName(local, isClass);
      issues.push_back({iri, LintKind::NamingPattern,
                        (isClass ? "class '" : "property '") + local + "' is not " + want,
                        suggestion.empty() || suggestion == local
                            ? std::nullopt
                            : std::optional<std::string>(suggestion)});
    }

    if (!labels.empty() && !multilingual) {
      std::vector<std::string> missing;
      for (const auto& lang : languages) {
        bool found = std::any_of(labels.begin(), labels.end(),
                                 [&](const rdf::Term& l) { return l.language() == lang; });
        if (!found) missing.push_back(lang);
      }
      if (!missing.empty()) {
        std::string detail = "no label in";
        for (const auto& m : missing) detail += " @" + m;
        issues.push_back({iri, LintKind::LanguageMissing, detail, std::nullopt});
      }
    }
  }
  std::stable_sort(issues.begin(), issues.end(), [](const LintIssue& a, const LintIssue& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    return a.kind < b.kind;
  });
  return issues;
}

std::string renderLintCsv(const std::vector<LintIssue>& issues) {
  std::string out = "subject,kind,detail,suggested-fix\r\n";
  for (const auto& i : issues) {
    out += sparql::csvField(i.subject) + ',' + std::string(lintKindName(i.kind)) + ',' +
           sparql::csvField(i.detail) + ',' + sparql::csvField(i.suggestedFix.value_or("")) +
           "\r\n";
  }
  return out;
}

}  // namespace pcpkg::fusion
