#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace seqexp::exact {

using BigInt = mpz_class;
// mpq_class keeps values canonical: lowest terms, positive denominator, zero as 0/1.
using BigRat = mpq_class;

BigInt parse_bigint(std::string_view text);

// Accepts "p", "p/q" and plain decimals such as "-0.125".
BigRat parse_bigrat(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const BigRat& value);

std::size_t bit_length(const BigInt& value);

inline bool is_integral(const BigRat& value) { return value.get_den() == 1; }

// Floor of a/b for b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

// Nearest integer to a/b, ties rounded up.
BigInt round_div(const BigInt& a, const BigInt& b);

}  // namespace seqexp::exact
