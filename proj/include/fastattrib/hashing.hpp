#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace fastattrib {

/// FNV-1a 64-bit content hashes, printed as 16 hex chars. Used for artifact
/// integrity checks between pipeline stages (not security).
uint64_t fnv1a64_bytes(const void* data, size_t n, uint64_t seed = 0xcbf29ce484222325ull);
std::string hash_string(std::string_view s);
std::string hash_file(const std::filesystem::path& path);
std::string hash_hex(uint64_t h);

}  // namespace fastattrib
