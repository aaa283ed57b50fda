#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "frodo/params.hpp"

namespace frodo {

// Full 24-round KECCAK-p[1600,24] permutation, lanes in little-endian order.
void keccak_f1600(std::array<uint64_t, 25>& lanes);

// Incremental SHAKE128/SHAKE256 sponge. Byte-oriented only: every protocol
// input and output is a whole number of bytes. Once squeezing has started,
// further absorption is rejected.
class Shake {
  public:
    explicit Shake(ShakeVariant variant);

    void absorb(std::span<const uint8_t> data);
    void squeeze(std::span<uint8_t> out);

    ShakeVariant variant() const { return m_variant; }
    size_t rate_bytes() const { return m_rate; }
    bool squeezing() const { return m_squeezing; }

    // One-shot digest.
    static std::vector<uint8_t> hash(ShakeVariant variant,
                                     std::span<const uint8_t> input,
                                     size_t out_len);

  private:
    void permute();

    std::array<uint64_t, 25> m_lanes{};
    ShakeVariant m_variant;
    size_t m_rate;    // 168 for SHAKE128, 136 for SHAKE256
    size_t m_offset;  // byte cursor within the current rate block
    bool m_squeezing;
};

}  // namespace frodo
