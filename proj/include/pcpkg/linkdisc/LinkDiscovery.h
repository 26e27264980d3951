#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcpkg/linkdisc/LinkConfig.h"
#include "pcpkg/linkdisc/Similarity.h"
#include "pcpkg/rdf/Graph.h"

namespace pcpkg::linkdisc {

enum class LinkStatus { Accepted, Review, Rejected };

std::string_view statusName(LinkStatus status);
LinkStatus classify(double score, const LinkConfig& cfg);

// Best-scoring value pair for one configured property pair.
struct PairEvidence {
  std::string pair;
  std::string sourceValue;
  std::string targetValue;
  TokenSet sourceTokens;
  TokenSet targetTokens;
  double score = 0.0;
};

struct LinkCandidate {
  std::string source;
  std::string target;
  double score = 0.0;
  LinkStatus status = LinkStatus::Rejected;
  // One entry per configured pair that both instances have values for.
  std::vector<PairEvidence> evidence;
  // Every compared value per side, as "localName=value".
  std::vector<std::string> sourceValues;
  std::vector<std::string> targetValues;
};

// Scores every source/target instance pair and keeps those at or above the
// review threshold, sorted by descending score, then source, then target.
// A pair's score is the maximum cosine over configured property pairs and
// their values.
std::vector<LinkCandidate> findLinks(const rdf::Graph& source, const rdf::Graph& target,
                                     const LinkConfig& cfg);

// CSV with header source,target,score,status,source_values,target_values,evidence.
std::string renderReviewCsv(const std::vector<LinkCandidate>& candidates);

// owl:sameAs triple for every accepted candidate.
rdf::Graph sameAsGraph(const std::vector<LinkCandidate>& candidates);

}  // namespace pcpkg::linkdisc
