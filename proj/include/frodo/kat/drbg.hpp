#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "frodo/bytes.hpp"

namespace frodo::kat {

// AES-256 block encryption (encrypt-only), used solely by the DRBG below.
class Aes256 {
  public:
    explicit Aes256(std::span<const uint8_t> key);  // 32 bytes
    void encrypt_block(const uint8_t in[16], uint8_t out[16]) const;

  private:
    std::array<uint32_t, 60> m_round_keys{};
};

// The AES-256-CTR DRBG convention used by NIST-style KAT response files.
// This is test-harness plumbing, not part of the KEM itself.
class CtrDrbg {
  public:
    // entropy must be 48 bytes; an optional 48-byte personalization string is
    // xored in.
    explicit CtrDrbg(std::span<const uint8_t> entropy,
                     std::span<const uint8_t> personalization = {});

    void random_bytes(std::span<uint8_t> out);
    Bytes random_bytes(size_t n);

  private:
    void update(const uint8_t* provided);  // 48 bytes or nullptr
    void increment_v();

    std::array<uint8_t, 32> m_key{};
    std::array<uint8_t, 16> m_v{};
};

}  // namespace frodo::kat
