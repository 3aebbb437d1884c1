#pragma once

#include <cstddef>

#include "seqexp/exact/poly.hpp"
#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::seqgen {

struct LConvexOptions {
    /// Summands of the area generating function beyond k = N - 2 contribute
    /// nothing below q^N; this forces that many extra summands to be formed
    /// anyway (at full length) so the truncation can be checked.
    std::size_t extra_summands = 0;
};

/// L-convex polyominoes by area, exponents 0..N-1 (the empty polyomino at 0).
Sequence gen_lconvex_area(std::size_t N, LConvexOptions options = {});

/// L-convex polyominoes by semi-perimeter, (1-x)^2 / (2(1-x)^2 - 1), exponents 0..N-1.
Sequence gen_lconvex_perimeter(std::size_t N);

/// Stack polyominoes by area, sum_{n>=1} q^n / ((q)_{n-1} (q)_n); exponents 1..N.
Sequence gen_stack_area(std::size_t N);

/// N coefficients of num/den starting at the Laurent offset val(num) - val(den).
RatSequence expand_rational(const exact::Poly& num, const exact::Poly& den, std::size_t N);

}  // namespace seqexp::seqgen
