#pragma once

#include <cstdint>
#include <span>

#include "frodo/bytes.hpp"
#include "frodo/matrix.hpp"
#include "frodo/params.hpp"

namespace frodo {

// Randomness is always injected by the caller; nothing in here touches an
// entropy source. This keeps every phase a deterministic function of its
// inputs, which known-answer replay depends on.
struct KeyGenRandomness {
    Bytes s;        // len_s
    Bytes seed_se;  // len_seed_se
    Bytes z;        // len_z
};

struct EncapsRandomness {
    Bytes u;     // len_u
    Bytes salt;  // len_salt
};

struct KeyPair {
    Bytes pk;  // seed_A || packed(B)
    Bytes sk;  // s || pk || S^T (int16 LE) || pkh
};

struct EncapsResult {
    Bytes ct;  // packed(B') || packed(C) || salt
    Bytes ss;
};

KeyPair keygen(const KeyGenRandomness& rand, SecurityLevel level);

EncapsResult encaps(std::span<const uint8_t> pk, const EncapsRandomness& rand,
                    SecurityLevel level);

Bytes decaps(std::span<const uint8_t> sk, std::span<const uint8_t> ct,
             SecurityLevel level);

// ss0 when ss0 == ss2, else ss1. Every byte participates in the comparison
// and the selection is mask-based, with no data-dependent branch.
Bytes verify_select(std::span<const uint8_t> ss0, std::span<const uint8_t> ss1,
                    std::span<const uint8_t> ss2);

// Field views into the serialized secret key.
struct SecretKeyView {
    std::span<const uint8_t> s;
    std::span<const uint8_t> seed_a;
    std::span<const uint8_t> packed_b;
    std::span<const uint8_t> s_transposed;  // int16 LE words
    std::span<const uint8_t> pkh;
};
SecretKeyView parse_sk(std::span<const uint8_t> sk, const ParameterSet& p);

struct CiphertextView {
    std::span<const uint8_t> c1;
    std::span<const uint8_t> c2;
    std::span<const uint8_t> salt;
};
CiphertextView parse_ct(std::span<const uint8_t> ct, const ParameterSet& p);

// Shared sub-steps, also used by the processor model so that its memory
// image can be cross-checked against these functions.
SignedMatrix decode_sk_s_transposed(std::span<const uint8_t> bytes, const ParameterSet& p);
Bytes derive_seed_a(std::span<const uint8_t> z, const ParameterSet& p);

}  // namespace frodo
