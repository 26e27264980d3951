#pragma once

#include <string>
#include <string_view>

namespace pcpkg::util {

// Lowercase hex SHA-256 of `data`.
std::string sha256Hex(std::string_view data);

}  // namespace pcpkg::util
