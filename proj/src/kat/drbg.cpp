#include "frodo/kat/drbg.hpp"

#include <cstring>
#include <stdexcept>

namespace frodo::kat {
namespace {

constexpr uint8_t sbox[256] = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe,
    0xd7, 0xab, 0x76, 0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4,
    0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0, 0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7,
    0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15, 0x04, 0xc7, 0x23, 0xc3,
    0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75, 0x09,
    0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3,
    0x2f, 0x84, 0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe,
    0x39, 0x4a, 0x4c, 0x58, 0xcf, 0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85,
    0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8, 0x51, 0xa3, 0x40, 0x8f, 0x92,
    0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2, 0xcd, 0x0c,
    0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19,
    0x73, 0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14,
    0xde, 0x5e, 0x0b, 0xdb, 0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2,
    0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79, 0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5,
    0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08, 0xba, 0x78, 0x25,
    0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86,
    0xc1, 0x1d, 0x9e, 0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e,
    0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf, 0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42,
    0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16};

inline uint32_t sub_word(uint32_t w) {
    return (uint32_t{sbox[(w >> 24) & 0xFF]} << 24) | (uint32_t{sbox[(w >> 16) & 0xFF]} << 16) |
           (uint32_t{sbox[(w >> 8) & 0xFF]} << 8) | uint32_t{sbox[w & 0xFF]};
}

inline uint32_t rot_word(uint32_t w) { return (w << 8) | (w >> 24); }

inline uint8_t xtime(uint8_t a) {
    return static_cast<uint8_t>((a << 1) ^ ((a >> 7) * 0x1B));
}

}  // namespace

Aes256::Aes256(std::span<const uint8_t> key) {
    if (key.size() != 32) throw std::invalid_argument("Aes256: key must be 32 bytes");

    constexpr uint32_t rcon[7] = {0x01000000, 0x02000000, 0x04000000, 0x08000000,
                                  0x10000000, 0x20000000, 0x40000000};
    for (int i = 0; i < 8; i++)
        m_round_keys[i] = (uint32_t{key[4 * i]} << 24) | (uint32_t{key[4 * i + 1]} << 16) |
                          (uint32_t{key[4 * i + 2]} << 8) | key[4 * i + 3];
    for (int i = 8; i < 60; i++) {
        uint32_t temp = m_round_keys[i - 1];
        if (i % 8 == 0)
            temp = sub_word(rot_word(temp)) ^ rcon[i / 8 - 1];
        else if (i % 8 == 4)
            temp = sub_word(temp);
        m_round_keys[i] = m_round_keys[i - 8] ^ temp;
    }
}

void Aes256::encrypt_block(const uint8_t in[16], uint8_t out[16]) const {
    uint8_t st[16];
    std::memcpy(st, in, 16);

    auto add_round_key = [&](int round) {
        for (int c = 0; c < 4; c++) {
            uint32_t w = m_round_keys[4 * round + c];
            st[4 * c] ^= static_cast<uint8_t>(w >> 24);
            st[4 * c + 1] ^= static_cast<uint8_t>(w >> 16);
            st[4 * c + 2] ^= static_cast<uint8_t>(w >> 8);
            st[4 * c + 3] ^= static_cast<uint8_t>(w);
        }
    };
    auto sub_shift = [&] {
        uint8_t t[16];
        // SubBytes and ShiftRows fused; state is column-major.
        for (int c = 0; c < 4; c++)
            for (int r = 0; r < 4; r++) t[4 * c + r] = sbox[st[4 * ((c + r) % 4) + r]];
        std::memcpy(st, t, 16);
    };
    auto mix_columns = [&] {
        for (int c = 0; c < 4; c++) {
            uint8_t* col = &st[4 * c];
            const uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
            const uint8_t all = a0 ^ a1 ^ a2 ^ a3;
            col[0] = static_cast<uint8_t>(a0 ^ all ^ xtime(static_cast<uint8_t>(a0 ^ a1)));
            col[1] = static_cast<uint8_t>(a1 ^ all ^ xtime(static_cast<uint8_t>(a1 ^ a2)));
            col[2] = static_cast<uint8_t>(a2 ^ all ^ xtime(static_cast<uint8_t>(a2 ^ a3)));
            col[3] = static_cast<uint8_t>(a3 ^ all ^ xtime(static_cast<uint8_t>(a3 ^ a0)));
        }
    };

    add_round_key(0);
    for (int round = 1; round < 14; round++) {
        sub_shift();
        mix_columns();
        add_round_key(round);
    }
    sub_shift();
    add_round_key(14);
    std::memcpy(out, st, 16);
}

CtrDrbg::CtrDrbg(std::span<const uint8_t> entropy, std::span<const uint8_t> personalization) {
    if (entropy.size() != 48) throw std::invalid_argument("CtrDrbg: entropy must be 48 bytes");
    if (!personalization.empty() && personalization.size() != 48)
        throw std::invalid_argument("CtrDrbg: personalization must be 48 bytes");

    uint8_t seed[48];
    std::memcpy(seed, entropy.data(), 48);
    for (size_t i = 0; i < personalization.size(); i++) seed[i] ^= personalization[i];
    update(seed);
}

void CtrDrbg::increment_v() {
    for (int i = 15; i >= 0; i--) {
        if (++m_v[i] != 0) break;
    }
}

void CtrDrbg::update(const uint8_t* provided) {
    uint8_t temp[48];
    Aes256 aes(m_key);
    for (int i = 0; i < 3; i++) {
        increment_v();
        aes.encrypt_block(m_v.data(), &temp[16 * i]);
    }
    if (provided)
        for (int i = 0; i < 48; i++) temp[i] ^= provided[i];
    std::memcpy(m_key.data(), temp, 32);
    std::memcpy(m_v.data(), temp + 32, 16);
}

void CtrDrbg::random_bytes(std::span<uint8_t> out) {
    Aes256 aes(m_key);
    size_t produced = 0;
    while (produced < out.size()) {
        increment_v();
        uint8_t block[16];
        aes.encrypt_block(m_v.data(), block);
        const size_t take = std::min<size_t>(16, out.size() - produced);
        std::memcpy(out.data() + produced, block, take);
        produced += take;
    }
    update(nullptr);
}

Bytes CtrDrbg::random_bytes(size_t n) {
    Bytes out(n);
    random_bytes(std::span<uint8_t>(out));
    return out;
}

}  // namespace frodo::kat
