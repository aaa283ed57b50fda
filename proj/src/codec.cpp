#include "frodo/codec.hpp"

#include <stdexcept>

namespace frodo {

MatrixZq encode(std::span<const uint8_t> u, const ParameterSet& p) {
    if (u.size() != p.len_u) throw std::invalid_argument("encode: bad message length");

    MatrixZq m(p.nbar, p.nbar);
    const uint32_t shift = p.d_bits - p.b_bits;
    const uint64_t mask = (uint64_t{1} << p.b_bits) - 1;

    // Eight elements per B-byte group, chunks extracted LSB-first.
    auto out = m.data();
    size_t pos = 0;
    for (uint32_t g = 0; g < p.nbar * p.nbar / 8; g++) {
        uint64_t word = 0;
        for (uint32_t j = 0; j < p.b_bits; j++)
            word |= uint64_t{u[g * p.b_bits + j]} << (8 * j);
        for (uint32_t j = 0; j < 8; j++) {
            out[pos++] = static_cast<uint16_t>((word & mask) << shift);
            word >>= p.b_bits;
        }
    }
    return m;
}

Bytes decode(const MatrixZq& m, const ParameterSet& p) {
    if (m.rows() != p.nbar || m.cols() != p.nbar)
        throw std::invalid_argument("decode: bad matrix shape");

    Bytes u(p.len_u, 0);
    const uint32_t shift = p.d_bits - p.b_bits;
    const uint32_t round_add = 1u << (shift - 1);
    const uint64_t mask = (uint64_t{1} << p.b_bits) - 1;

    auto in = m.data();
    size_t pos = 0;
    for (uint32_t g = 0; g < p.nbar * p.nbar / 8; g++) {
        uint64_t word = 0;
        for (uint32_t j = 0; j < 8; j++) {
            uint32_t v = (in[pos++] & p.q_mask()) + round_add;
            word |= (uint64_t{v >> shift} & mask) << (p.b_bits * j);
        }
        for (uint32_t j = 0; j < p.b_bits; j++)
            u[g * p.b_bits + j] = static_cast<uint8_t>(word >> (8 * j));
    }
    return u;
}

Bytes pack(const MatrixZq& m, const ParameterSet& p) {
    const size_t total_bits = size_t{m.rows()} * m.cols() * p.d_bits;
    if (total_bits % 8 != 0) throw std::invalid_argument("pack: bit length not byte aligned");

    Bytes out;
    out.reserve(total_bits / 8);
    uint32_t acc = 0;  // pending bits, MSB-aligned within the low `bits` bits
    uint32_t bits = 0;
    for (uint16_t v : m.data()) {
        if (v >= p.q) throw std::invalid_argument("pack: element out of range");
        acc = (acc << p.d_bits) | v;
        bits += p.d_bits;
        while (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<uint8_t>(acc >> bits));
        }
    }
    return out;
}

MatrixZq unpack(std::span<const uint8_t> bytes, uint32_t rows, uint32_t cols,
                const ParameterSet& p) {
    const size_t total_bits = size_t{rows} * cols * p.d_bits;
    if (total_bits != bytes.size() * 8)
        throw std::invalid_argument("unpack: byte length does not match shape");

    MatrixZq m(rows, cols);
    auto out = m.data();
    uint32_t acc = 0;
    uint32_t bits = 0;
    size_t in = 0, idx = 0;
    while (idx < out.size()) {
        while (bits < p.d_bits) {
            acc = (acc << 8) | bytes[in++];
            bits += 8;
        }
        bits -= p.d_bits;
        out[idx++] = static_cast<uint16_t>((acc >> bits) & p.q_mask());
    }
    return m;
}

}  // namespace frodo
