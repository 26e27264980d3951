#include <gtest/gtest.h>

#include <cmath>

#include "pcpkg/linkdisc/Similarity.h"

namespace pcpkg::linkdisc {
namespace {

TEST(SimilarityTest, Tokenize) {
  EXPECT_TRUE(tokenizeName("").empty());
  EXPECT_TRUE(tokenizeName(" ,.- ").empty());
  EXPECT_EQ(tokenizeName("Heinrich Matthias"), (TokenSet{"heinrich", "matthias"}));
  EXPECT_EQ(tokenizeName("Andreas Heinrich Matthias"),
            (TokenSet{"andreas", "heinrich", "matthias"}));
  EXPECT_EQ(tokenizeName("Meier-Heinrich, J. meier"), (TokenSet{"heinrich", "j", "meier"}));
}

TEST(SimilarityTest, CosineExamples) {
  EXPECT_EQ(cosine({"a", "b"}, {"a", "b"}), 1.0);
  EXPECT_EQ(cosine({}, {"x"}), 0.0);
  EXPECT_EQ(cosine({"x"}, {}), 0.0);
  EXPECT_EQ(cosine({"x"}, {"y"}), 0.0);
  double s = cosine({"heinrich", "matthias"}, {"andreas", "heinrich", "matthias"});
  EXPECT_EQ(s, 2.0 / std::sqrt(6.0));
  EXPECT_EQ(formatScore(s), "0.8164965809277261");
}

TEST(SimilarityTest, FormatScore) {
  EXPECT_EQ(formatScore(1.0), "1");
  EXPECT_EQ(formatScore(0.5), "0.5");
  EXPECT_EQ(formatScore(0.0), "0");
  EXPECT_EQ(formatScore(1.0 / std::sqrt(2.0)), "0.7071067811865475");
}

}  // namespace
}  // namespace pcpkg::linkdisc
