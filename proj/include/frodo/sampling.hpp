#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frodo/bytes.hpp"
#include "frodo/matrix.hpp"
#include "frodo/params.hpp"
#include "frodo/xof.hpp"

namespace frodo {

// Row i of the public matrix A: SHAKE128 over the 16-bit little-endian row
// index followed by seed_A, one 16-bit little-endian word per element,
// reduced to the low D bits. Deterministic in (seed_a, row).
std::vector<uint16_t> gen_a_row(std::span<const uint8_t> seed_a, uint32_t row,
                                const ParameterSet& p);

// Streams rows of A in strictly ascending order, keeping only one SHAKE
// state's worth of context. Rows must be requested sequentially.
class RowStream {
  public:
    RowStream(std::span<const uint8_t> seed_a, const ParameterSet& p);

    std::vector<uint16_t> next_row();
    uint32_t next_index() const { return m_next; }
    bool done() const { return m_next >= m_p.n; }

  private:
    Bytes m_seed_a;
    const ParameterSet& m_p;
    uint32_t m_next = 0;
};

// CDF sample from one 16-bit word: magnitude is the count of table entries
// strictly below r>>1, accumulated over the full table with no early exit;
// bit 0 of r selects the sign.
int sample_cdf(uint16_t r, const ParameterSet& p);

// Same, reporting how many table comparisons were evaluated (always the full
// table length; tests assert the count is input-independent).
int sample_cdf_counted(uint16_t r, const ParameterSet& p, uint32_t& comparisons);

// Domain separators for the Sample expansions (standard values).
inline constexpr uint8_t sep_keygen = 0x5F;
inline constexpr uint8_t sep_encaps = 0x96;

// Squeezes 16*count bits from SHAKE(sep || seed_se) and maps each word
// through sample_cdf. count must equal 2*n*nbar (key generation) or
// 2*n*nbar + nbar^2 (encapsulation/decapsulation). The caller slices the
// row-major result into the individual matrices.
SignedMatrix sample_matrix(std::span<const uint8_t> seed_se, uint8_t sep,
                           uint32_t count, const ParameterSet& p);

// Applies sample_cdf to a buffer of squeezed bytes (pairs, little-endian).
void sample_words(std::span<const uint8_t> stream, std::span<int8_t> out,
                  const ParameterSet& p);

}  // namespace frodo
