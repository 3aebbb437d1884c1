#pragma once

#include <optional>
#include <vector>

#include "seqexp/asympt/hpreal.hpp"

namespace seqexp::asympt {

struct BstResult {
    HpReal value;
    /// |T_m(last) - T_m(last - 1)| in the selected column.
    HpReal spread;
    int depth = 0;
};

/// Bulirsch-Stoer rational extrapolation of s_n towards its limit, assuming
/// corrections in powers of x_n^w. Abscissae default to x_n = 1/n for the
/// sequence indices; pass `abscissae` (one per value) to override, e.g. the
/// original indices k^2 of a square subsequence as x = 1/k^2.
BstResult bst_extrapolate(const HpSeq& s, const BigRat& w,
                          const std::optional<std::vector<HpReal>>& abscissae = std::nullopt);

/// Full tableau, column m holding T^m_0 .. T^m_{L-1-m}.
std::vector<std::vector<HpReal>> bst_tableau(const HpSeq& s, const BigRat& w,
                                             const std::optional<std::vector<HpReal>>& abscissae = std::nullopt);

}  // namespace seqexp::asympt
