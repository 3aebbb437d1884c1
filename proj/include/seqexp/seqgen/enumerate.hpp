#pragma once

#include <cstddef>
#include <cstdint>

#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::seqgen {

struct EnumBudget {
    /// Largest area accepted by the polyomino enumerator.
    std::size_t max_area = 12;
    /// Search nodes visited before the ascent-sequence enumerator gives up.
    std::uint64_t max_nodes = 2'000'000'000ULL;
};

/// Fixed L-convex polyominoes of area 1..N, counted by explicit construction.
/// Throws BudgetExceeded when N > budget.max_area.
Sequence enum_lconvex_bruteforce(std::size_t N, const EnumBudget& budget = {});

/// Unimodal compositions (stack polyominoes) of 1..N.
Sequence enum_stack_bruteforce(std::size_t N);

/// Ascent sequences of length 0..N avoiding `pattern`.
Sequence enum_ascent_avoiding(const Pattern& pattern, std::size_t N, const EnumBudget& budget = {});

}  // namespace seqexp::seqgen
