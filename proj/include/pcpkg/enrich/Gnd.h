#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcpkg::enrich {

inline constexpr std::string_view kGndNamespace = "https://d-nb.info/gnd/";

class GndError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bare GND number: digits with optional internal hyphens and an optional
// final check character X.
class GndId {
 public:
  // Throws GndError unless `number` is already a bare GND number.
  explicit GndId(std::string number);

  const std::string& number() const { return number_; }

  friend bool operator==(const GndId&, const GndId&) = default;
  friend std::strong_ordering operator<=>(const GndId&, const GndId&) = default;

 private:
  std::string number_;
};

bool isGndNumber(std::string_view text);

// Accepts a bare number or a d-nb.info/gnd/ URL over http or https, with
// optional trailing slashes. Surrounding whitespace is ignored.
GndId normalizeGnd(std::string_view value);

// https://d-nb.info/gnd/{number}
std::string gndIri(const GndId& id);
// Same over http, the scheme found in older data.
std::string gndIriHttp(const GndId& id);

// https://d-nb.info/gnd/{number}/about/lds
std::string dnbDocumentUrl(const GndId& id);

}  // namespace pcpkg::enrich
