#pragma once

#include <cstdint>
#include <span>

#include "frodo/bytes.hpp"
#include "frodo/matrix.hpp"
#include "frodo/params.hpp"

namespace frodo {

// Message <-> nbar x nbar matrix conversion. The k-th B-bit chunk of the
// message (chunks taken LSB-first within bytes, elements row-major) scales by
// q / 2^B.
MatrixZq encode(std::span<const uint8_t> u, const ParameterSet& p);

// Rounds each element to its nearest B-bit chunk: ((m + 2^(D-B-1)) >> (D-B))
// mod 2^B. Exact inverse of encode on unperturbed inputs.
Bytes decode(const MatrixZq& m, const ParameterSet& p);

// D bits per element, MSB-first within the bit stream, matching the public
// key / ciphertext wire layout.
Bytes pack(const MatrixZq& m, const ParameterSet& p);
MatrixZq unpack(std::span<const uint8_t> bytes, uint32_t rows, uint32_t cols,
                const ParameterSet& p);

}  // namespace frodo
