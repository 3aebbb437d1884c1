#include "seqexp/guess/evaluate.hpp"

namespace seqexp::guess {

using exact::TruncSeries;

TruncSeries eval_algeq(const AlgEq& P, const TruncSeries& y) {
    const std::size_t n = y.order();
    TruncSeries acc(n);
    for (auto it = P.coeffs.rbegin(); it != P.coeffs.rend(); ++it) {
        acc = exact::ps_add(exact::ps_mul(acc, y), exact::to_series(*it, n));
    }
    return acc;
}

TruncSeries apply_ode(const LinODE& ode, const TruncSeries& f) {
    const std::size_t m = static_cast<std::size_t>(ode.order());
    if (f.order() <= m) return TruncSeries(0);
    TruncSeries acc(f.order() - m);
    TruncSeries deriv = f;
    for (std::size_t i = 0; i <= m; ++i) {
        if (!ode.coeffs[i].is_zero()) acc = exact::ps_add(acc, exact::mul_poly(ode.coeffs[i], deriv));
        if (i < m) deriv = deriv.derivative();
    }
    return acc;
}

}  // namespace seqexp::guess
