#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dynforge {

// Minimal FIPS 180-4 SHA-256, used to fingerprint conjugacy classes.
std::string sha256_hex(std::string_view data);

}  // namespace dynforge
