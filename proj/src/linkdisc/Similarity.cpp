#include "pcpkg/linkdisc/Similarity.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>

namespace pcpkg::linkdisc {

TokenSet tokenizeName(std::string_view value) {
  TokenSet tokens;
  std::string current;
  for (char c : value) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '-' || c == ',' || c == '.') {
      if (!current.empty()) tokens.insert(std::move(current));
      current.clear();
    } else {
      current += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
  }
  if (!current.empty()) tokens.insert(std::move(current));
  return tokens;
}

double cosine(const TokenSet& a, const TokenSet& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::size_t shared = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++shared, ++i, ++j;
    }
  }
  return static_cast<double>(shared) /
         std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

std::string formatScore(double score) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, score);
  return std::string(buf, end);
}

}  // namespace pcpkg::linkdisc
