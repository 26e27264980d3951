#include <gtest/gtest.h>

#include <random>

#include "pcpkg/enrich/Gnd.h"

namespace pcpkg::enrich {
namespace {

TEST(GndTest, NormalizeExamples) {
  EXPECT_EQ(normalizeGnd("https://d-nb.info/gnd/118755951").number(), "118755951");
  EXPECT_EQ(normalizeGnd("118755951").number(), "118755951");
  EXPECT_EQ(normalizeGnd("http://d-nb.info/gnd/118755951/").number(), "118755951");
  EXPECT_EQ(normalizeGnd("  https://d-nb.info/gnd/4036582-3// ").number(), "4036582-3");
  EXPECT_EQ(normalizeGnd("11851825X").number(), "11851825X");
}

TEST(GndTest, RejectsOtherForms) {
  for (const char* bad : {"https://example.org/x", "", "   ", "abc", "1183X5", "X", "-1", "12-",
                          "1--2", "https://d-nb.info/gnd/", "https://d-nb.info/gnd/12/about/lds",
                          "ftp://d-nb.info/gnd/12", "https://d-nb.info/gnd/12x", "d-nb.info/gnd/12"}) {
    EXPECT_THROW(normalizeGnd(bad), GndError) << bad;
  }
  try {
    normalizeGnd("https://example.org/x");
  } catch (const GndError& e) {
    EXPECT_NE(std::string(e.what()).find("https://example.org/x"), std::string::npos);
  }
}

TEST(GndTest, DocumentUrl) {
  EXPECT_EQ(dnbDocumentUrl(GndId("118755951")), "https://d-nb.info/gnd/118755951/about/lds");
  EXPECT_EQ(dnbDocumentUrl(GndId("7")), "https://d-nb.info/gnd/7/about/lds");
  EXPECT_EQ(gndIri(GndId("7")), "https://d-nb.info/gnd/7");
}

TEST(GndTest, ConstructorValidates) {
  EXPECT_THROW(GndId("https://d-nb.info/gnd/7"), GndError);
  EXPECT_THROW(GndId(""), GndError);
}

// Random valid ids: normalizing the IRI or the document URL's prefix gives
// the id back, and normalizing twice changes nothing.
TEST(GndTest, NormalizeInvertsUrlConstruction) {
  std::mt19937 rng(118755951);
  for (int i = 0; i < 2000; ++i) {
    std::string n(1, static_cast<char>('0' + rng() % 10));
    int len = static_cast<int>(rng() % 11);
    for (int k = 0; k < len; ++k) {
      if (rng() % 6 == 0) n += '-';
      n += static_cast<char>('0' + rng() % 10);
    }
    if (rng() % 4 == 0) n += rng() % 2 ? "X" : "-X";
    GndId id(n);
    std::string url = dnbDocumentUrl(id);
    std::string prefix = url.substr(0, url.size() - std::string("/about/lds").size());
    ASSERT_EQ(normalizeGnd(prefix), id) << n;
    ASSERT_EQ(normalizeGnd(gndIriHttp(id)), id);
    ASSERT_EQ(normalizeGnd(normalizeGnd(prefix).number()), id);
    ASSERT_EQ(id.number().find('/'), std::string::npos);
  }
}

}  // namespace
}  // namespace pcpkg::enrich
