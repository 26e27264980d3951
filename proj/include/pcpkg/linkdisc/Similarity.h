#pragma once

#include <set>
#include <string>
#include <string_view>

namespace pcpkg::linkdisc {

using TokenSet = std::set<std::string>;

// Lowercased tokens split on whitespace, '-', ',' and '.'. Only ASCII letters
// are case-folded; other bytes pass through unchanged.
TokenSet tokenizeName(std::string_view value);

// |a ∩ b| / sqrt(|a| |b|), or 0 if either set is empty.
double cosine(const TokenSet& a, const TokenSet& b);

// Shortest decimal text that reads back as the same double.
std::string formatScore(double score);

}  // namespace pcpkg::linkdisc
