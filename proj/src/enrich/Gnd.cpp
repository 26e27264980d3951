#include "pcpkg/enrich/Gnd.h"

#include <regex>

namespace pcpkg::enrich {

bool isGndNumber(std::string_view text) {
  static const std::regex kPattern("^[0-9](?:-?[0-9])*(?:-?X)?$");
  return std::regex_match(text.begin(), text.end(), kPattern);
}

GndId::GndId(std::string number) : number_(std::move(number)) {
  if (!isGndNumber(number_)) throw GndError("not a GND number: '" + number_ + "'");
}

GndId normalizeGnd(std::string_view value) {
  const std::string original(value);
  auto first = value.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw GndError("empty GND value");
  value = value.substr(first, value.find_last_not_of(" \t\r\n") - first + 1);

  if (isGndNumber(value)) return GndId(std::string(value));
  for (std::string_view scheme : {"https://", "http://"}) {
    if (!value.starts_with(scheme)) continue;
    std::string_view rest = value.substr(scheme.size());
    constexpr std::string_view kPath = "d-nb.info/gnd/";
    if (!rest.starts_with(kPath)) break;
    rest.remove_prefix(kPath.size());
    while (rest.ends_with('/')) rest.remove_suffix(1);
    if (isGndNumber(rest)) return GndId(std::string(rest));
    break;
  }
  throw GndError("not a GND number or DNB GND URL: '" + original + "'");
}

std::string gndIri(const GndId& id) { return std::string(kGndNamespace) + id.number(); }

std::string gndIriHttp(const GndId& id) { return "http://d-nb.info/gnd/" + id.number(); }

std::string dnbDocumentUrl(const GndId& id) { return gndIri(id) + "/about/lds"; }

}  // namespace pcpkg::enrich
