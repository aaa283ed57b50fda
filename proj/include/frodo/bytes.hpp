#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frodo {

using Bytes = std::vector<uint8_t>;

std::string to_hex(std::span<const uint8_t> data);

// Parses hex (upper or lower case, even length). Throws std::invalid_argument.
Bytes from_hex(std::string_view hex);

inline void append(Bytes& dst, std::span<const uint8_t> src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

inline Bytes concat(std::initializer_list<std::span<const uint8_t>> parts) {
    Bytes out;
    for (auto p : parts) append(out, p);
    return out;
}

inline uint16_t load_le16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

inline void store_le16(uint8_t* p, uint16_t v) {
    p[0] = static_cast<uint8_t>(v);
    p[1] = static_cast<uint8_t>(v >> 8);
}

}  // namespace frodo
