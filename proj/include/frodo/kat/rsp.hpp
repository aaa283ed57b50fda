#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frodo/bytes.hpp"
#include "frodo/params.hpp"

namespace frodo::kat {

// One block of a NIST-style response file: line-oriented `key = hexvalue`
// pairs delimited by `count = N` lines.
struct RspVector {
    uint32_t count = 0;
    Bytes seed;  // 48 bytes
    Bytes pk, sk, ct, ss;
};

struct RspParseError {
    size_t line;
    std::string message;
};

// Parses a full .rsp stream. Throws std::runtime_error carrying the line
// number on malformed input.
std::vector<RspVector> parse_rsp(std::istream& in);
std::vector<RspVector> parse_rsp_file(const std::string& path);

void write_rsp(std::ostream& out, std::string_view algorithm_name,
               const std::vector<RspVector>& vectors);

// Deterministic expansion of one 48-byte KAT seed into a full vector: the
// DRBG is seeded, keygen draws s || seed_SE || z, encaps draws u || salt,
// then decaps re-derives the shared secret.
RspVector expand_vector(SecurityLevel level, uint32_t count,
                        std::span<const uint8_t> seed);

// The canonical 100-vector seed schedule (DRBG over entropy bytes 00..2f).
std::vector<Bytes> kat_seed_schedule(size_t count = 100);

// Generates the full response file content for a level.
std::vector<RspVector> generate_kat(SecurityLevel level, size_t count = 100);

struct KatCheckResult {
    size_t total = 0;
    size_t passed = 0;
    std::vector<uint32_t> failed_counts;
};

// Replays every vector through expand_vector and compares all fields.
KatCheckResult check_vectors(SecurityLevel level, const std::vector<RspVector>& vectors);

}  // namespace frodo::kat
