#include "fastattrib/hashing.hpp"

#include <fstream>
#include <vector>

#include "fastattrib/errors.hpp"

namespace fastattrib {

uint64_t fnv1a64_bytes(const void* data, size_t n, uint64_t seed) {
    uint64_t h = seed;
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_hex(uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

std::string hash_string(std::string_view s) {
    return hash_hex(fnv1a64_bytes(s.data(), s.size()));
}

std::string hash_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("hash_file: cannot open " + path.string());
    uint64_t h = 0xcbf29ce484222325ull;
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        const auto got = in.gcount();
        if (got > 0) h = fnv1a64_bytes(buf.data(), static_cast<size_t>(got), h);
    }
    return hash_hex(h);
}

}  // namespace fastattrib
