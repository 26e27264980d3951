#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "support/RandomGraph.h"

namespace pcpkg::testkit {

// Random query over the variables ?a ?b ?c and the terms of `pools`.
template <typename Rng>
std::string randomQuery(const testkit::TermPools& pools, Rng& rng) {
  auto coin = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  const char* vars[] = {"?a", "?b", "?c"};
  std::vector<std::string> used;
  auto var = [&] {
    std::string v = vars[coin(3)];
    if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    return v;
  };
  auto constant = [&](const std::vector<rdf::Term>& pool) {
    return pool[static_cast<std::size_t>(coin(static_cast<int>(pool.size())))].toNTriples();
  };
  std::string where;
  int patterns = 1 + coin(3);
  for (int i = 0; i < patterns; ++i) {
    std::string s = coin(4) ? var() : constant(pools.subjects);
    std::string p = coin(2) ? var() : constant(pools.predicates);
    std::string o = coin(3) ? var() : constant(pools.objects);
    where += s + " " + p + " " + o + " . ";
  }
  if (used.empty()) {
    where += "?a ?b ?c . ";
    used = {"?a", "?b", "?c"};
  }
  bool bindYear = coin(3) == 0;
  if (bindYear) where += "BIND(year(" + used.back() + ") AS ?y) ";
  std::string select;
  switch (coin(4)) {
    case 0:
      select = "*";
      break;
    case 1:
      select = used.front() + (bindYear ? " ?y" : "");
      break;
    case 2: {
      std::string key = bindYear ? "?y" : used.front();
      return "SELECT (COUNT(" + used.back() + ") AS ?n) " + key + " WHERE { " + where +
             "} GROUP BY " + key;
    }
    default:
      return "SELECT (COUNT(" + used.front() + ") AS ?n) WHERE { " + where + "}";
  }
  return "SELECT " + select + " WHERE { " + where + "}";
}

}  // namespace pcpkg::testkit
