#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqexp/exact/bigint.hpp"

namespace seqexp::guess {

using exact::BigInt;
using exact::BigRat;

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank of the matrix reduced modulo the prime 2^61 - 1. A lower bound on the
/// rational rank.
std::size_t modular_rank(const IntMatrix& rows, std::size_t ncols);

/// Basis of the rational right nullspace, each vector scaled to coprime
/// integers. Fraction-free (Bareiss) elimination to echelon form, then
/// back-substitution per free column.
std::vector<std::vector<BigInt>> integer_nullspace(const IntMatrix& rows, std::size_t ncols);

/// Scales a rational row to integers (multiplies by the lcm of denominators).
std::vector<BigInt> clear_denominators(const std::vector<BigRat>& row);

/// Sum of bit lengths; used to rank candidate relations.
std::size_t total_bits(const std::vector<BigInt>& v);

}  // namespace seqexp::guess
