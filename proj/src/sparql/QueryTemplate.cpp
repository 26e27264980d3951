#include "pcpkg/sparql/QueryTemplate.h"

#include <cctype>
#include <cstdio>

namespace pcpkg::sparql {

namespace {

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string escapeForLiteral(const std::string& value) {
  std::string out;
  for (char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escapeForIri(const std::string& value) {
  std::string out;
  for (char c : value) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", u);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

QueryTemplate::QueryTemplate(std::string text) : text_(std::move(text)) {
  char quote = 0;
  bool inIri = false;
  for (std::size_t i = 0; i < text_.size(); ++i) {
    char c = text_[i];
    if (c == '{' && i + 1 < text_.size() && identStart(text_[i + 1])) {
      std::size_t j = i + 1;
      while (j < text_.size() && identChar(text_[j])) ++j;
      if (j < text_.size() && text_[j] == '}') {
        Context context = quote ? Context::Literal : inIri ? Context::Iri : Context::Bare;
        std::string name = text_.substr(i + 1, j - i - 1);
        slots_.push_back({i, j + 1, name, context});
        names_.insert(std::move(name));
        i = j;
        continue;
      }
    }
    if (quote) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
    } else if (inIri) {
      if (c == '>') inIri = false;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '<' && i + 1 < text_.size() &&
               !std::isspace(static_cast<unsigned char>(text_[i + 1])) && text_[i + 1] != '=') {
      inIri = true;
    }
  }
}

std::string QueryTemplate::instantiate(
    const std::map<std::string, std::string>& bindings) const {
  for (const auto& name : names_) {
    if (!bindings.contains(name)) {
      throw TemplateError("missing value for placeholder {" + name + "}");
    }
  }
  for (const auto& [name, value] : bindings) {
    if (!names_.contains(name)) {
      throw TemplateError("binding '" + name + "' does not match any placeholder");
    }
  }
  std::string out;
  std::size_t last = 0;
  for (const Slot& slot : slots_) {
    out.append(text_, last, slot.begin - last);
    const std::string& value = bindings.at(slot.name);
    switch (slot.context) {
      case Context::Literal:
        out += escapeForLiteral(value);
        break;
      case Context::Iri:
        out += escapeForIri(value);
        break;
      case Context::Bare:
        if (value.empty()) {
          throw TemplateError("empty value for bare placeholder {" + slot.name + "}");
        }
        for (char c : value) {
          if (!identChar(c) && c != '.' && c != ':' && c != '-') {
            throw TemplateError("value '" + value + "' is not a plain token for {" +
                                slot.name + "}");
          }
        }
        out += value;
        break;
    }
    last = slot.end;
  }
  out.append(text_, last, std::string::npos);
  return out;
}

}  // namespace pcpkg::sparql
