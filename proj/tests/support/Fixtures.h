#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

namespace pcpkg::testkit {

inline std::filesystem::path dataDir() { return PCPKG_DATA_DIR; }

inline std::filesystem::path fixture(const std::string& name) {
  return dataDir() / "fixtures" / name;
}

// Every Turtle file of the bundled fixture corpus, sorted by name.
inline std::vector<std::filesystem::path> fixtureCorpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(dataDir())) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".ttl" || ext == ".nt")) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pcpkg::testkit
