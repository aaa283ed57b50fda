#include "frodo/xof.hpp"

#include <stdexcept>

namespace frodo {
namespace {

constexpr std::array<uint64_t, 24> round_constants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

constexpr std::array<int, 25> rho_offsets = {
    0,  1,  62, 28, 27,   // y = 0
    36, 44, 6,  55, 20,   // y = 1
    3,  10, 43, 25, 39,   // y = 2
    41, 45, 15, 21, 8,    // y = 3
    18, 2,  61, 56, 14};  // y = 4

inline uint64_t rotl(uint64_t v, int c) {
    return c == 0 ? v : (v << c) | (v >> (64 - c));
}

}  // namespace

void keccak_f1600(std::array<uint64_t, 25>& a) {
    for (uint64_t rc : round_constants) {
        // theta
        uint64_t c[5], d[5];
        for (int x = 0; x < 5; x++)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; x++)
            d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
        for (int x = 0; x < 5; x++)
            for (int y = 0; y < 25; y += 5) a[x + y] ^= d[x];

        // rho + pi
        uint64_t b[25];
        for (int x = 0; x < 5; x++)
            for (int y = 0; y < 5; y++)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(a[x + 5 * y], rho_offsets[x + 5 * y]);

        // chi
        for (int y = 0; y < 25; y += 5)
            for (int x = 0; x < 5; x++)
                a[x + y] = b[x + y] ^ (~b[(x + 1) % 5 + y] & b[(x + 2) % 5 + y]);

        // iota
        a[0] ^= rc;
    }
}

Shake::Shake(ShakeVariant variant)
    : m_variant(variant),
      m_rate(variant == ShakeVariant::Shake128 ? 168 : 136),
      m_offset(0),
      m_squeezing(false) {}

void Shake::permute() {
    keccak_f1600(m_lanes);
    m_offset = 0;
}

void Shake::absorb(std::span<const uint8_t> data) {
    if (m_squeezing) throw std::logic_error("Shake: absorb after squeeze");
    auto* state = reinterpret_cast<uint8_t*>(m_lanes.data());
    for (uint8_t byte : data) {
        state[m_offset++] ^= byte;
        if (m_offset == m_rate) permute();
    }
}

void Shake::squeeze(std::span<uint8_t> out) {
    auto* state = reinterpret_cast<uint8_t*>(m_lanes.data());
    if (!m_squeezing) {
        // SHAKE domain separation and pad10*1.
        state[m_offset] ^= 0x1F;
        state[m_rate - 1] ^= 0x80;
        permute();
        m_squeezing = true;
    }
    for (auto& byte : out) {
        if (m_offset == m_rate) permute();
        byte = state[m_offset++];
    }
}

std::vector<uint8_t> Shake::hash(ShakeVariant variant, std::span<const uint8_t> input,
                                 size_t out_len) {
    Shake s(variant);
    s.absorb(input);
    std::vector<uint8_t> out(out_len);
    s.squeeze(out);
    return out;
}

}  // namespace frodo
