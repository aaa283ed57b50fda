#include "frodo/matrix_engine.hpp"

#include <stdexcept>

namespace frodo {

uint16_t mul_sign_extract(uint16_t x, int s, const ParameterSet& p) {
    if (s < -15 || s > 15) throw std::invalid_argument("mul_sign_extract: |s| > 15");
    const uint16_t mask = p.q_mask();
    const uint16_t mag = static_cast<uint16_t>(s < 0 ? -s : s);
    uint16_t prod = static_cast<uint16_t>(x * mag) & mask;  // 16x4 unsigned product
    if (s < 0) prod = static_cast<uint16_t>(0u - prod) & mask;
    return prod;
}

namespace {

// One scalar multiplier of the array: 16x4 unsigned product, then the sign
// (xor'd with the subtraction-enable signal) is recovered through the
// two's-complement path. Wraparound at 16 bits is the modular reduction;
// callers mask down to D bits at write-back.
inline uint16_t lane_mul(uint16_t a, int8_t sv, uint16_t sub_en) {
    const uint16_t w = static_cast<uint16_t>(static_cast<int16_t>(sv));
    const uint16_t sign = (w >> 15) ^ sub_en;
    const uint16_t mag = static_cast<uint16_t>((w ^ static_cast<uint16_t>(-(w >> 15))) +
                                               (w >> 15));  // |sv|, 4 bits
    const uint16_t prod = static_cast<uint16_t>(a * mag);
    return static_cast<uint16_t>((prod ^ static_cast<uint16_t>(-sign)) + sign);
}

// Innermost kernel shared by both modes: acc += a_blk * s_blk (products
// negated when subtract is set).
inline void block_mac(std::array<uint16_t, 8>& acc, const uint16_t* a0,
                      const uint16_t* a1, const int8_t* s, uint32_t s_stride,
                      bool subtract) {
    const uint16_t sub_en = subtract ? 1 : 0;
    for (uint32_t u = 0; u < 4; u++) {
        uint16_t t0 = 0, t1 = 0;
        for (uint32_t t = 0; t < 4; t++) {
            const int8_t sv = s[t * s_stride + u];
            t0 = static_cast<uint16_t>(t0 + lane_mul(a0[t], sv, sub_en));
            t1 = static_cast<uint16_t>(t1 + lane_mul(a1[t], sv, sub_en));
        }
        acc[u] = static_cast<uint16_t>(acc[u] + t0);
        acc[4 + u] = static_cast<uint16_t>(acc[4 + u] + t1);
    }
}

void check_shapes(const RowBlockProvider& a, const SignedMatrix& s, const MatrixZq& e,
                  const ParameterSet& p) {
    if (a.cols() != s.rows() || s.cols() != p.nbar)
        throw std::invalid_argument("matmul: S shape mismatch");
    if (e.rows() != a.rows() || e.cols() != p.nbar)
        throw std::invalid_argument("matmul: E shape mismatch");
    if (a.rows() % 2 != 0 || a.cols() % 4 != 0)
        throw std::invalid_argument("matmul: dimensions not block aligned");
}

}  // namespace

Block2x4 mac_block_product(std::span<const Block2x4> a_blocks,
                           std::span<const SBlock4x4> s_blocks, const Block2x4& e,
                           const ParameterSet& p, bool subtract) {
    if (a_blocks.size() != s_blocks.size())
        throw std::invalid_argument("mac_block_product: stream length mismatch");
    Block2x4 acc = e;
    for (size_t k = 0; k < a_blocks.size(); k++)
        block_mac(acc.e, &a_blocks[k].e[0], &a_blocks[k].e[4], s_blocks[k].e.data(), 4,
                  subtract);
    for (auto& v : acc.e) v &= p.q_mask();
    return acc;
}

MatrixZq matmul_mac(RowBlockProvider& a, const SignedMatrix& s, const MatrixZq& e,
                    const ParameterSet& p, bool subtract, WriteStats* stats) {
    check_shapes(a, s, e, p);
    const uint32_t rows = a.rows();
    const uint32_t n = a.cols();
    const uint32_t jblocks = p.nbar / 4;

    MatrixZq out(rows, p.nbar);
    if (stats) stats->reset(out.data().size());

    // Left matrix arrives row-wise; each row pair is one block row, consumed
    // in a block-wise sliding manner across all k before moving on.
    for (uint32_t i = 0; i < rows / 2; i++) {
        // Copy the pair so the provider may recycle its buffer between calls.
        auto s0 = a.row(2 * i);
        std::vector<uint16_t> r0(s0.begin(), s0.end());
        auto s1 = a.row(2 * i + 1);
        std::vector<uint16_t> r1(s1.begin(), s1.end());

        for (uint32_t j = 0; j < jblocks; j++) {
            std::array<uint16_t, 8> acc;
            for (uint32_t u = 0; u < 4; u++) {
                acc[u] = e.at(2 * i, 4 * j + u);
                acc[4 + u] = e.at(2 * i + 1, 4 * j + u);
            }
            for (uint32_t k = 0; k < n / 4; k++)
                block_mac(acc, &r0[4 * k], &r1[4 * k], &s.at(4 * k, 4 * j), p.nbar,
                          subtract);
            for (uint32_t u = 0; u < 4; u++) {
                out.at(2 * i, 4 * j + u) = acc[u] & p.q_mask();
                out.at(2 * i + 1, 4 * j + u) = acc[4 + u] & p.q_mask();
                if (stats) {
                    stats->writes[size_t{2 * i} * p.nbar + 4 * j + u]++;
                    stats->writes[size_t{2 * i + 1} * p.nbar + 4 * j + u]++;
                }
            }
        }
    }
    return out;
}

void ma_phase(std::span<const uint16_t> a_rows4, uint32_t k, const SignedMatrix& s_t,
              MatrixZq& acc, const ParameterSet& p, WriteStats* stats) {
    const uint32_t n = s_t.rows();
    if (a_rows4.size() != size_t{4} * n)
        throw std::invalid_argument("ma_phase: expected four rows of A");
    if (4 * k + 3 >= n) throw std::invalid_argument("ma_phase: k out of range");

    // Fixed right block (S')^T_{k,j}; the block row index i advances every
    // cycle and each partial sum is written back immediately.
    for (uint32_t j = 0; j < p.nbar / 4; j++) {
        for (uint32_t i = 0; i < acc.rows() / 2; i++) {
            std::array<uint16_t, 8> part;
            for (uint32_t u = 0; u < 4; u++) {
                part[u] = acc.at(2 * i, 4 * j + u);
                part[4 + u] = acc.at(2 * i + 1, 4 * j + u);
            }
            // Left block (A^T)_{i,k}: columns 2i,2i+1 of the four buffered
            // rows of A.
            std::array<uint16_t, 4> c0, c1;
            for (uint32_t t = 0; t < 4; t++) {
                c0[t] = a_rows4[t * n + 2 * i];
                c1[t] = a_rows4[t * n + 2 * i + 1];
            }
            block_mac(part, c0.data(), c1.data(), &s_t.at(4 * k, 4 * j), p.nbar, false);
            for (uint32_t u = 0; u < 4; u++) {
                acc.at(2 * i, 4 * j + u) = part[u] & p.q_mask();
                acc.at(2 * i + 1, 4 * j + u) = part[4 + u] & p.q_mask();
                if (stats) {
                    stats->writes[size_t{2 * i} * p.nbar + 4 * j + u]++;
                    stats->writes[size_t{2 * i + 1} * p.nbar + 4 * j + u]++;
                }
            }
        }
    }
}

MatrixZq matmul_ma(RowBlockProvider& a, const SignedMatrix& s_t, const MatrixZq& e_t,
                   const ParameterSet& p, WriteStats* stats) {
    if (a.rows() != s_t.rows() || a.rows() != a.cols())
        throw std::invalid_argument("matmul_ma: expected square left matrix");
    if (e_t.rows() != a.rows() || e_t.cols() != p.nbar || s_t.cols() != p.nbar)
        throw std::invalid_argument("matmul_ma: shape mismatch");

    const uint32_t n = a.rows();
    MatrixZq acc = e_t;  // partial sums live in the addend's storage
    if (stats) stats->reset(acc.data().size());

    std::vector<uint16_t> rows4(size_t{4} * n);
    for (uint32_t k = 0; k < n / 4; k++) {
        for (uint32_t t = 0; t < 4; t++) {
            auto r = a.row(4 * k + t);
            std::copy(r.begin(), r.end(), rows4.begin() + size_t{t} * n);
        }
        ma_phase(rows4, k, s_t, acc, p, stats);
    }
    return acc;
}

MatrixZq mat_sub_mul(const MatrixZq& c, const MatrixZq& bp, const SignedMatrix& s,
                     const ParameterSet& p) {
    if (c.rows() != p.nbar || c.cols() != p.nbar)
        throw std::invalid_argument("mat_sub_mul: bad C shape");
    MaterializedRows left(bp);
    return matmul_mac(left, s, c, p, /*subtract=*/true);
}

MatrixZq mat_add_blocks(const MatrixZq& x, const MatrixZq& y, const ParameterSet& p) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("mat_add_blocks: shape mismatch");
    if (x.rows() % 2 != 0 || x.cols() % 4 != 0)
        throw std::invalid_argument("mat_add_blocks: not block aligned");

    MatrixZq out(x.rows(), x.cols());
    for (uint32_t i = 0; i < x.rows() / 2; i++) {
        for (uint32_t j = 0; j < x.cols() / 4; j++) {
            for (uint32_t r = 0; r < 2; r++)
                for (uint32_t u = 0; u < 4; u++) {
                    const uint32_t rr = 2 * i + r, cc = 4 * j + u;
                    out.at(rr, cc) =
                        static_cast<uint16_t>(x.at(rr, cc) + y.at(rr, cc)) & p.q_mask();
                }
        }
    }
    return out;
}

MatrixZq naive_mul_add(const MatrixZq& a, const SignedMatrix& s, const MatrixZq& e,
                       const ParameterSet& p, bool subtract) {
    if (a.cols() != s.rows() || s.cols() != e.cols() || a.rows() != e.rows())
        throw std::invalid_argument("naive_mul_add: shape mismatch");
    MatrixZq out(e.rows(), e.cols());
    for (uint32_t i = 0; i < a.rows(); i++) {
        for (uint32_t j = 0; j < s.cols(); j++) {
            int64_t acc = 0;
            for (uint32_t k = 0; k < a.cols(); k++)
                acc += int64_t{a.at(i, k)} * s.at(k, j);
            if (subtract) acc = -acc;
            acc += e.at(i, j);
            acc %= int64_t{p.q};
            if (acc < 0) acc += p.q;
            out.at(i, j) = static_cast<uint16_t>(acc);
        }
    }
    return out;
}

}  // namespace frodo
