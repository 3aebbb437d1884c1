#pragma once

#include <cstddef>

#include "seqexp/guess/operators.hpp"
#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::seqgen {

/// Unrolls the recurrence from `init` (indices are absolute: the recurrence at
/// n links init.offset-based terms u(n..n+r)) until N terms exist.
/// Throws LeadingCoeffVanishes(n) when p_r(n) = 0 for a term that must be
/// computed, NonIntegral when the division is not exact.
Sequence expand_prec(const guess::PRecurrence& rec, const Sequence& init, std::size_t N);

/// Lifts the branch of P(x, y) = 0 pinned by `seed` (a power series, offset 0)
/// to N coefficients.
RatSequence expand_algebraic(const guess::AlgEq& P, const RatSequence& seed, std::size_t N);

}  // namespace seqexp::seqgen
