#include "pcpkg/linkdisc/LinkDiscovery.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "pcpkg/sparql/ResultTable.h"

namespace pcpkg::linkdisc {

namespace {

struct Value {
  std::string text;
  TokenSet tokens;
};

struct Instance {
  std::string iri;
  // Property IRI -> literal values.
  std::map<std::string, std::vector<Value>> values;
  TokenSet allTokens;
};

std::string localOf(const std::string& iri) {
  auto cut = iri.find_last_of("#/");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

std::vector<Instance> collect(const rdf::Graph& g, const std::optional<std::string>& cls,
                              const std::vector<std::string>& properties) {
  std::set<std::string> subjects;
  if (cls) {
    for (const auto& t : g.match(std::nullopt, rdf::Term::iri(rdf::vocab::kRdfType),
                                 rdf::Term::iri(*cls))) {
      if (t.subject.isIri()) subjects.insert(t.subject.value());
    }
  } else {
    for (const auto& p : properties) {
      for (const auto& t : g.match(std::nullopt, rdf::Term::iri(p), std::nullopt)) {
        if (t.subject.isIri()) subjects.insert(t.subject.value());
      }
    }
  }
  std::vector<Instance> out;
  for (const auto& s : subjects) {
    Instance inst{s, {}, {}};
    for (const auto& p : properties) {
      if (inst.values.contains(p)) continue;
      auto& vals = inst.values[p];
      for (const auto& t : g.match(rdf::Term::iri(s), rdf::Term::iri(p), std::nullopt)) {
        if (!t.object.isLiteral()) continue;
        vals.push_back({t.object.value(), tokenizeName(t.object.value())});
        inst.allTokens.insert(vals.back().tokens.begin(), vals.back().tokens.end());
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<std::string> describe(const Instance& inst, const std::vector<std::string>& order) {
  std::vector<std::string> out;
  for (const auto& p : order) {
    for (const auto& v : inst.values.at(p)) out.push_back(localOf(p) + "=" + v.text);
  }
  return out;
}

std::vector<std::string> distinct(std::vector<std::string> items) {
  std::vector<std::string> out;
  for (auto& i : items) {
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(std::move(i));
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

}  // namespace

std::string_view statusName(LinkStatus status) {
  switch (status) {
    case LinkStatus::Accepted: return "accepted";
    case LinkStatus::Review: return "review";
    case LinkStatus::Rejected: return "rejected";
  }
  return "rejected";
}

LinkStatus classify(double score, const LinkConfig& cfg) {
  if (score >= cfg.acceptThreshold) return LinkStatus::Accepted;
  if (score >= cfg.reviewThreshold) return LinkStatus::Review;
  return LinkStatus::Rejected;
}

std::vector<LinkCandidate> findLinks(const rdf::Graph& source, const rdf::Graph& target,
                                     const LinkConfig& cfg) {
  cfg.validate();
  std::vector<std::string> sourceProps, targetProps;
  for (const auto& p : cfg.properties) {
    sourceProps.push_back(p.source);
    targetProps.push_back(p.target);
  }
  sourceProps = distinct(sourceProps);
  targetProps = distinct(targetProps);
  std::vector<Instance> as = collect(source, cfg.sourceClass, sourceProps);
  std::vector<Instance> bs = collect(target, cfg.targetClass, targetProps);

  // A pair with no token in common scores 0, so with a positive review
  // threshold only token-sharing pairs need scoring.
  bool blocking = cfg.tokenBlocking && cfg.reviewThreshold > 0.0;
  std::unordered_map<std::string, std::vector<std::size_t>> byToken;
  if (blocking) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      for (const auto& tok : bs[j].allTokens) byToken[tok].push_back(j);
    }
  }

  std::vector<LinkCandidate> out;
  std::vector<std::size_t> targets;
  for (const Instance& a : as) {
    targets.clear();
    if (blocking) {
      for (const auto& tok : a.allTokens) {
        auto it = byToken.find(tok);
        if (it != byToken.end()) targets.insert(targets.end(), it->second.begin(), it->second.end());
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    } else {
      for (std::size_t j = 0; j < bs.size(); ++j) targets.push_back(j);
    }
    for (std::size_t j : targets) {
      const Instance& b = bs[j];
      LinkCandidate c{a.iri, b.iri, 0.0, LinkStatus::Rejected, {}, {}, {}};
      for (const auto& pair : cfg.properties) {
        const auto& va = a.values.at(pair.source);
        const auto& vb = b.values.at(pair.target);
        if (va.empty() || vb.empty()) continue;
        const Value* bestA = &va.front();
        const Value* bestB = &vb.front();
        double best = -1.0;
        for (const auto& x : va) {
          for (const auto& y : vb) {
            double s = cosine(x.tokens, y.tokens);
            if (s > best) best = s, bestA = &x, bestB = &y;
          }
        }
        c.evidence.push_back({pair.name, bestA->text, bestB->text, bestA->tokens, bestB->tokens, best});
        c.score = std::max(c.score, best);
      }
      if (c.score < cfg.reviewThreshold) continue;
      c.status = classify(c.score, cfg);
      c.sourceValues = describe(a, sourceProps);
      c.targetValues = describe(b, targetProps);
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const LinkCandidate& x, const LinkCandidate& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.source != y.source) return x.source < y.source;
    return x.target < y.target;
  });
  return out;
}

std::string renderReviewCsv(const std::vector<LinkCandidate>& candidates) {
  using sparql::csvField;
  std::string out = "source,target,score,status,source_values,target_values,evidence\r\n";
  for (const auto& c : candidates) {
    std::vector<std::string> evidence;
    for (const auto& e : c.evidence) {
      evidence.push_back(e.pair + ":" + formatScore(e.score));
    }
    out += csvField(c.source) + ',' + csvField(c.target) + ',' + formatScore(c.score) + ',' +
           std::string(statusName(c.status)) + ',' + csvField(join(c.sourceValues, " | ")) + ',' +
           csvField(join(c.targetValues, " | ")) + ',' + csvField(join(evidence, " ")) + "\r\n";
  }
  return out;
}

rdf::Graph sameAsGraph(const std::vector<LinkCandidate>& candidates) {
  rdf::Graph g;
  const auto sameAs = rdf::Term::iri(rdf::vocab::kOwlSameAs);
  for (const auto& c : candidates) {
    if (c.status == LinkStatus::Accepted) {
      g.insert(rdf::Triple(rdf::Term::iri(c.source), sameAs, rdf::Term::iri(c.target)));
    }
  }
  return g;
}

}  // namespace pcpkg::linkdisc
