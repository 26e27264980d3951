#include "pcpkg/sparql/ResultTable.h"

#include <algorithm>
#include <stdexcept>

#include "pcpkg/rdf/NTriples.h"

namespace pcpkg::sparql {

std::size_t ResultTable::columnIndex(const std::string& variable) const {
  auto it = std::find(header.begin(), header.end(), variable);
  if (it == header.end()) {
    throw std::out_of_range("no column ?" + variable);
  }
  return static_cast<std::size_t>(it - header.begin());
}

std::string csvField(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) {
    return value;
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string renderCsv(const ResultTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += csvField(table.header[i]);
  }
  out += "\r\n";
  for (const Row& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (!row[i]) continue;
      const rdf::Term& t = *row[i];
      out += csvField(t.isBlank() ? "_:" + t.value() : t.value());
    }
    out += "\r\n";
  }
  return out;
}

std::string renderText(const ResultTable& table, const rdf::PrefixMap& prefixes) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& h : table.header) width.push_back(h.size() + 1);
  for (const Row& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(row[i] ? rdf::renderTerm(*row[i], prefixes) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::string out;
  std::string rule;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out += (i ? " | " : "") + pad("?" + table.header[i], width[i]);
    rule += (i ? "-+-" : "") + std::string(width[i], '-');
  }
  out += "\n" + rule + "\n";
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += (i ? " | " : "") + pad(line[i], width[i]);
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + "\n";
  }
  out += "(" + std::to_string(table.rows.size()) +
         (table.rows.size() == 1 ? " row)\n" : " rows)\n");
  return out;
}

}  // namespace pcpkg::sparql
