#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace frodo {

enum class SecurityLevel { Frodo640, Frodo976, Frodo1344 };

enum class ShakeVariant { Shake128, Shake256 };

// Level-dependent constants. All byte lengths are in bytes, not bits.
// Instances are compile-time constants; params_for() hands out references.
struct ParameterSet {
    SecurityLevel level;
    std::string_view name;

    uint32_t n;       // public matrix dimension
    uint32_t nbar;    // auxiliary dimension, always 8
    uint32_t d_bits;  // modulus bit width D, q = 2^D
    uint32_t q;       // modulus
    uint32_t b_bits;  // encoded bits per matrix element
    uint32_t d_max;   // sample magnitude bound

    ShakeVariant shake;  // SHAKE128 for 640, SHAKE256 otherwise

    std::span<const uint16_t> cdf_table;  // ascending, last entry 2^15-1

    uint32_t len_seed_a;
    uint32_t len_seed_se;
    uint32_t len_s;
    uint32_t len_z;
    uint32_t len_salt;
    uint32_t len_k;
    uint32_t len_ss;
    uint32_t len_pkh;
    uint32_t len_u;

    uint32_t len_pk;  // len_seed_a + D*n*nbar/8
    uint32_t len_sk;  // len_s + len_pk + 2*n*nbar + len_pkh
    uint32_t len_ct;  // D*n*nbar/8 + D*nbar*nbar/8 + len_salt

    constexpr uint32_t packed_b_bytes() const { return d_bits * n * nbar / 8; }
    constexpr uint32_t packed_c_bytes() const { return d_bits * nbar * nbar / 8; }
    constexpr uint16_t q_mask() const { return static_cast<uint16_t>(q - 1); }
};

const ParameterSet& params_for(SecurityLevel level);

// Convenience lookups used by the CLI ("640" -> Frodo640).
bool level_from_string(std::string_view s, SecurityLevel& out);
std::string_view level_name(SecurityLevel level);

inline constexpr std::array<SecurityLevel, 3> all_levels = {
    SecurityLevel::Frodo640, SecurityLevel::Frodo976, SecurityLevel::Frodo1344};

}  // namespace frodo
