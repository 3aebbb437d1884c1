#pragma once

#include <vector>

#include "seqexp/exact/bigint.hpp"

namespace seqexp::identify {

using exact::BigInt;
using exact::BigRat;
using IntBasis = std::vector<std::vector<BigInt>>;

/// LLL reduction (delta = 3/4) of the row basis, in exact integer arithmetic.
/// Throws RankDeficient if the rows are linearly dependent.
IntBasis lll_reduce(IntBasis basis);

}  // namespace seqexp::identify
