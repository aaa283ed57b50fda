#include "frodo/sampling.hpp"

#include <stdexcept>

namespace frodo {

std::vector<uint16_t> gen_a_row(std::span<const uint8_t> seed_a, uint32_t row,
                                const ParameterSet& p) {
    if (row >= p.n) throw std::out_of_range("gen_a_row: row out of range");
    if (seed_a.size() != p.len_seed_a)
        throw std::invalid_argument("gen_a_row: bad seed length");

    uint8_t tag[2];
    store_le16(tag, static_cast<uint16_t>(row));

    // Row generation always uses SHAKE128, independent of the level's
    // protocol SHAKE variant.
    Shake xof(ShakeVariant::Shake128);
    xof.absorb(tag);
    xof.absorb(seed_a);

    Bytes stream(2 * p.n);
    xof.squeeze(stream);

    std::vector<uint16_t> out(p.n);
    const uint16_t mask = p.q_mask();
    for (uint32_t j = 0; j < p.n; j++) out[j] = load_le16(&stream[2 * j]) & mask;
    return out;
}

RowStream::RowStream(std::span<const uint8_t> seed_a, const ParameterSet& p)
    : m_seed_a(seed_a.begin(), seed_a.end()), m_p(p) {}

std::vector<uint16_t> RowStream::next_row() {
    if (done()) throw std::out_of_range("RowStream exhausted");
    return gen_a_row(m_seed_a, m_next++, m_p);
}

int sample_cdf_counted(uint16_t r, const ParameterSet& p, uint32_t& comparisons) {
    const uint16_t t = static_cast<uint16_t>(r >> 1);
    const uint16_t sign = r & 1;
    uint16_t e = 0;
    uint32_t evaluated = 0;
    for (uint16_t threshold : p.cdf_table) {
        // Branch-free strict comparison: top bit of (threshold - t) is set
        // exactly when threshold < t.
        e += static_cast<uint16_t>(static_cast<uint16_t>(threshold - t) >> 15);
        evaluated++;
    }
    comparisons = evaluated;
    // Negate when the sign bit is set, still without branching on data.
    return static_cast<int16_t>((-sign) ^ e) + sign;
}

int sample_cdf(uint16_t r, const ParameterSet& p) {
    uint32_t ignored;
    return sample_cdf_counted(r, p, ignored);
}

void sample_words(std::span<const uint8_t> stream, std::span<int8_t> out,
                  const ParameterSet& p) {
    if (stream.size() != out.size() * 2)
        throw std::invalid_argument("sample_words: stream/output size mismatch");
    for (size_t i = 0; i < out.size(); i++)
        out[i] = static_cast<int8_t>(sample_cdf(load_le16(&stream[2 * i]), p));
}

SignedMatrix sample_matrix(std::span<const uint8_t> seed_se, uint8_t sep,
                           uint32_t count, const ParameterSet& p) {
    const uint32_t keygen_count = 2 * p.n * p.nbar;
    const uint32_t encaps_count = keygen_count + p.nbar * p.nbar;
    if (count != keygen_count && count != encaps_count)
        throw std::invalid_argument("sample_matrix: unexpected element count");
    if (seed_se.size() != p.len_seed_se)
        throw std::invalid_argument("sample_matrix: bad seed length");

    Shake xof(p.shake);
    xof.absorb({&sep, 1});
    xof.absorb(seed_se);

    Bytes stream(size_t{count} * 2);
    xof.squeeze(stream);

    SignedMatrix m(1, count);
    sample_words(stream, m.data(), p);
    return m;
}

}  // namespace frodo
