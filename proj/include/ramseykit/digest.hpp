#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ramsey {

/// FNV-1a 64-bit digest, hex-encoded. Used to pin certificate inputs to the
/// exact file bytes they were produced from.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes);

/// Digest of a file's contents; throws ParseError when unreadable.
std::string file_digest(const std::string& path);

} // namespace ramsey
