#pragma once

#include "seqexp/exact/series.hpp"
#include "seqexp/guess/operators.hpp"

namespace seqexp::guess {

/// P(x, y(x)) to the order of y.
exact::TruncSeries eval_algeq(const AlgEq& P, const exact::TruncSeries& y);

/// sum_i Q_i f^{(i)}; exact to order(f) - ode.order().
exact::TruncSeries apply_ode(const LinODE& ode, const exact::TruncSeries& f);

}  // namespace seqexp::guess
