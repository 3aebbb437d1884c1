#include "seqexp/exact/series.hpp"

namespace seqexp::exact {

TruncSeries to_series(const Poly& p, std::size_t order) {
    std::vector<BigRat> out(order, BigRat(0));
    for (std::size_t i = 0; i < order && i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i];
    return TruncSeries(std::move(out));
}

IntSeries to_int_series(const Poly& p, std::size_t order) {
    std::vector<BigInt> out(order, BigInt(0));
    for (std::size_t i = 0; i < order && i < p.coeffs().size(); ++i) {
        const BigRat& c = p.coeffs()[i];
        if (c.get_den() != 1) throw Error(ErrorCode::NonIntegral, "to_int_series: non-integral coefficient");
        out[i] = c.get_num();
    }
    return IntSeries(std::move(out));
}

TruncSeries q_pochhammer(long n, std::size_t order) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "q_pochhammer: n must be non-negative");
    TruncSeries s(order);
    if (order == 0) return s;
    s[0] = 1;
    for (long k = 1; k <= n; ++k) {
        if (static_cast<std::size_t>(k) >= order) break;  // (1 - q^k) is 1 below the order
        s.multiply_one_minus_xk(static_cast<std::size_t>(k));
    }
    return s;
}

TruncSeries mul_poly(const Poly& p, const TruncSeries& s) {
    const std::size_t n = s.order();
    std::vector<BigRat> out(n, BigRat(0));
    const auto& pc = p.coeffs();
    for (std::size_t i = 0; i < pc.size() && i < n; ++i) {
        if (pc[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += pc[i] * s[j];
    }
    return TruncSeries(std::move(out));
}

}  // namespace seqexp::exact
