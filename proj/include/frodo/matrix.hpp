#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace frodo {

// Dense row-major matrix over Z_q. Elements are D-bit residues held in
// 16-bit words; callers keep them reduced below q.
class MatrixZq {
  public:
    MatrixZq() : m_rows(0), m_cols(0) {}
    MatrixZq(uint32_t rows, uint32_t cols)
        : m_rows(rows), m_cols(cols), m_data(size_t{rows} * cols, 0) {}

    uint32_t rows() const { return m_rows; }
    uint32_t cols() const { return m_cols; }

    uint16_t& at(uint32_t r, uint32_t c) { return m_data[size_t{r} * m_cols + c]; }
    const uint16_t& at(uint32_t r, uint32_t c) const { return m_data[size_t{r} * m_cols + c]; }

    std::span<uint16_t> row(uint32_t r) { return {m_data.data() + size_t{r} * m_cols, m_cols}; }
    std::span<const uint16_t> row(uint32_t r) const {
        return {m_data.data() + size_t{r} * m_cols, m_cols};
    }

    std::span<uint16_t> data() { return m_data; }
    std::span<const uint16_t> data() const { return m_data; }

    MatrixZq transposed() const {
        MatrixZq t(m_cols, m_rows);
        for (uint32_t r = 0; r < m_rows; r++)
            for (uint32_t c = 0; c < m_cols; c++) t.at(c, r) = at(r, c);
        return t;
    }

    bool operator==(const MatrixZq& o) const = default;

  private:
    uint32_t m_rows, m_cols;
    std::vector<uint16_t> m_data;
};

// Small signed sample matrix; magnitudes are bounded by the level's d, which
// always fits a 5-bit signed representation.
class SignedMatrix {
  public:
    SignedMatrix() : m_rows(0), m_cols(0) {}
    SignedMatrix(uint32_t rows, uint32_t cols)
        : m_rows(rows), m_cols(cols), m_data(size_t{rows} * cols, 0) {}

    uint32_t rows() const { return m_rows; }
    uint32_t cols() const { return m_cols; }

    int8_t& at(uint32_t r, uint32_t c) { return m_data[size_t{r} * m_cols + c]; }
    const int8_t& at(uint32_t r, uint32_t c) const { return m_data[size_t{r} * m_cols + c]; }

    std::span<int8_t> data() { return m_data; }
    std::span<const int8_t> data() const { return m_data; }

    SignedMatrix transposed() const {
        SignedMatrix t(m_cols, m_rows);
        for (uint32_t r = 0; r < m_rows; r++)
            for (uint32_t c = 0; c < m_cols; c++) t.at(c, r) = at(r, c);
        return t;
    }

    bool operator==(const SignedMatrix& o) const = default;

  private:
    uint32_t m_rows, m_cols;
    std::vector<int8_t> m_data;
};

}  // namespace frodo
