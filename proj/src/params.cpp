#include "frodo/params.hpp"

#include <stdexcept>

namespace frodo {
namespace {

// CDF tables T_chi transcribed from the FrodoKEM specification. The table
// length is d+1 and the final entry is 2^15-1, so a strict comparison against
// t = r>>1 can never count it.
constexpr std::array<uint16_t, 13> cdf_640 = {4643,  13363, 20579, 25843, 29227,
                                              31145, 32103, 32525, 32689, 32745,
                                              32762, 32766, 32767};

constexpr std::array<uint16_t, 11> cdf_976 = {5638,  15915, 23689, 28571,
                                              31116, 32217, 32613, 32731,
                                              32760, 32766, 32767};

constexpr std::array<uint16_t, 7> cdf_1344 = {9142,  23462, 30338, 32361,
                                              32725, 32765, 32767};

constexpr ParameterSet make_640() {
    ParameterSet p{};
    p.level = SecurityLevel::Frodo640;
    p.name = "FrodoKEM-640-SHAKE";
    p.n = 640;
    p.nbar = 8;
    p.d_bits = 15;
    p.q = 1u << 15;
    p.b_bits = 2;
    p.d_max = 12;
    p.shake = ShakeVariant::Shake128;
    p.cdf_table = cdf_640;
    p.len_seed_a = 16;
    p.len_seed_se = 32;
    p.len_s = 16;
    p.len_z = 16;
    p.len_salt = 32;
    p.len_k = 16;
    p.len_ss = 16;
    p.len_pkh = 16;
    p.len_u = 16;
    p.len_pk = p.len_seed_a + p.packed_b_bytes();
    p.len_sk = p.len_s + p.len_pk + 2 * p.n * p.nbar + p.len_pkh;
    p.len_ct = p.packed_b_bytes() + p.packed_c_bytes() + p.len_salt;
    return p;
}

constexpr ParameterSet make_976() {
    ParameterSet p{};
    p.level = SecurityLevel::Frodo976;
    p.name = "FrodoKEM-976-SHAKE";
    p.n = 976;
    p.nbar = 8;
    p.d_bits = 16;
    p.q = 1u << 16;
    p.b_bits = 3;
    p.d_max = 10;
    p.shake = ShakeVariant::Shake256;
    p.cdf_table = cdf_976;
    p.len_seed_a = 16;
    p.len_seed_se = 48;
    p.len_s = 24;
    p.len_z = 16;
    p.len_salt = 48;
    p.len_k = 24;
    p.len_ss = 24;
    p.len_pkh = 24;
    p.len_u = 24;
    p.len_pk = p.len_seed_a + p.packed_b_bytes();
    p.len_sk = p.len_s + p.len_pk + 2 * p.n * p.nbar + p.len_pkh;
    p.len_ct = p.packed_b_bytes() + p.packed_c_bytes() + p.len_salt;
    return p;
}

constexpr ParameterSet make_1344() {
    ParameterSet p{};
    p.level = SecurityLevel::Frodo1344;
    p.name = "FrodoKEM-1344-SHAKE";
    p.n = 1344;
    p.nbar = 8;
    p.d_bits = 16;
    p.q = 1u << 16;
    p.b_bits = 4;
    p.d_max = 6;
    p.shake = ShakeVariant::Shake256;
    p.cdf_table = cdf_1344;
    p.len_seed_a = 16;
    p.len_seed_se = 64;
    p.len_s = 32;
    p.len_z = 16;
    p.len_salt = 64;
    p.len_k = 32;
    p.len_ss = 32;
    p.len_pkh = 32;
    p.len_u = 32;
    p.len_pk = p.len_seed_a + p.packed_b_bytes();
    p.len_sk = p.len_s + p.len_pk + 2 * p.n * p.nbar + p.len_pkh;
    p.len_ct = p.packed_b_bytes() + p.packed_c_bytes() + p.len_salt;
    return p;
}

constexpr ParameterSet params_640 = make_640();
constexpr ParameterSet params_976 = make_976();
constexpr ParameterSet params_1344 = make_1344();

}  // namespace

const ParameterSet& params_for(SecurityLevel level) {
    switch (level) {
        case SecurityLevel::Frodo640: return params_640;
        case SecurityLevel::Frodo976: return params_976;
        case SecurityLevel::Frodo1344: return params_1344;
    }
    throw std::invalid_argument("unknown security level");
}

bool level_from_string(std::string_view s, SecurityLevel& out) {
    if (s == "640" || s == "frodo640") { out = SecurityLevel::Frodo640; return true; }
    if (s == "976" || s == "frodo976") { out = SecurityLevel::Frodo976; return true; }
    if (s == "1344" || s == "frodo1344") { out = SecurityLevel::Frodo1344; return true; }
    return false;
}

std::string_view level_name(SecurityLevel level) { return params_for(level).name; }

}  // namespace frodo
