#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "frodo/matrix.hpp"
#include "frodo/params.hpp"

namespace frodo {

// Basic block shapes of the multiplier array's partitioning grid. A 2x4 block
// of the left/addend/result matrices meets a 4x4 block of the signed right
// matrix in one block-level operation.
struct Block2x4 {
    std::array<uint16_t, 8> e{};  // row-major
};

struct SBlock4x4 {
    std::array<int8_t, 16> e{};  // row-major
};

// Supplies rows of the left matrix in ascending order. Backed either by a
// fully materialized matrix (tests, small operands) or by streamed row
// generation, since the full public matrix is never stored.
class RowBlockProvider {
  public:
    virtual ~RowBlockProvider() = default;
    virtual uint32_t rows() const = 0;
    virtual uint32_t cols() const = 0;
    // Rows are requested in ascending order; a provider may drop earlier rows.
    virtual std::span<const uint16_t> row(uint32_t r) = 0;
};

class MaterializedRows final : public RowBlockProvider {
  public:
    explicit MaterializedRows(const MatrixZq& m) : m_m(m) {}
    uint32_t rows() const override { return m_m.rows(); }
    uint32_t cols() const override { return m_m.cols(); }
    std::span<const uint16_t> row(uint32_t r) override { return m_m.row(r); }

  private:
    const MatrixZq& m_m;
};

// Optional per-element write counters for the result matrix, used by tests to
// check traversal coverage (once per element in MAC mode, n/4 partial-sum
// writes in MA mode).
struct WriteStats {
    std::vector<uint32_t> writes;
    void reset(size_t n) { writes.assign(n, 0); }
};

// (x * |s|) mod q via an unsigned 16x4 product, then conditional negation.
// Equivalent to direct signed multiplication mod q for any |s| <= 15.
uint16_t mul_sign_extract(uint16_t x, int s, const ParameterSet& p);

// One MAC computation phase: E + sum_k A_k * S_k over matching block streams.
Block2x4 mac_block_product(std::span<const Block2x4> a_blocks,
                           std::span<const SBlock4x4> s_blocks, const Block2x4& e,
                           const ParameterSet& p, bool subtract = false);

// result = A*S + E mod q (or E - A*S with subtract), computed as
// (rows/2)*(nbar/4) independent MAC phases. A is consumed from the provider
// row-pair by row-pair; S is a.cols()-by-nbar; E and the result are
// a.rows()-by-nbar.
MatrixZq matmul_mac(RowBlockProvider& a, const SignedMatrix& s, const MatrixZq& e,
                    const ParameterSet& p, bool subtract = false,
                    WriteStats* stats = nullptr);

// MA-mode evaluation of the same product: the signed right block stays fixed
// for a whole phase (one k index), every result block receives one partial
// sum per phase and is written back immediately. Equal to matmul_mac after
// the caller's transposition bookkeeping.
MatrixZq matmul_ma(RowBlockProvider& a, const SignedMatrix& s_t, const MatrixZq& e_t,
                   const ParameterSet& p, WriteStats* stats = nullptr);

// Runs a single MA phase (fixed k, both column halves) against an in-place
// accumulator. Exposed so callers can observe partial sums phase by phase.
void ma_phase(std::span<const uint16_t> a_rows4, uint32_t k, const SignedMatrix& s_t,
              MatrixZq& acc, const ParameterSet& p, WriteStats* stats = nullptr);

// M = C - Bp * S mod q, the decryption combination, realized as MAC phases
// with the subtraction-enable path.
MatrixZq mat_sub_mul(const MatrixZq& c, const MatrixZq& bp, const SignedMatrix& s,
                     const ParameterSet& p);

// Elementwise sum mod q, traversed as 2x4 block pairs.
MatrixZq mat_add_blocks(const MatrixZq& x, const MatrixZq& y, const ParameterSet& p);

// Naive triple-loop reference, kept deliberately independent of the block
// paths above; used as the arithmetic oracle in tests.
MatrixZq naive_mul_add(const MatrixZq& a, const SignedMatrix& s, const MatrixZq& e,
                       const ParameterSet& p, bool subtract = false);

}  // namespace frodo
