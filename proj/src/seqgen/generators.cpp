#include "seqexp/seqgen/generators.hpp"

#include "seqexp/error.hpp"
#include "seqexp/exact/series.hpp"

namespace seqexp::seqgen {

using exact::IntSeries;
using exact::Poly;

namespace {

void require_positive(std::size_t N, const char* what) {
    if (N < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": N must be at least 1");
}

}  // namespace

// With D_k = (q)_k^2 and g_k = f_k / D_k the f-recurrence becomes
//   g_k = 2 g_{k-1} / (1-q^k)^2 - g_{k-2} / (1-q^{k-1})^2,
// so the running denominator is folded into g and every update is a handful
// of O(N) passes of s <- s / (1 - q^j). Summand k is q^{k+1} g_k / (1-q^{k+1}).
Sequence gen_lconvex_area(std::size_t N, LConvexOptions options) {
    require_positive(N, "gen_lconvex_area");
    IntSeries total(N);
    total[0] = 1;

    const std::size_t last_k = (N >= 2 ? N - 2 : 0) + options.extra_summands;
    const bool full_length = options.extra_summands > 0;
    // length of the series needed for summand k
    auto needed = [&](std::size_t k) -> std::size_t {
        if (full_length) return N;
        return k + 1 < N ? N - k - 1 : 0;
    };

    IntSeries g(std::vector<BigInt>{1});
    g.mutable_coeffs().resize(needed(0), BigInt(0));

    IntSeries a_prev;  // g_{k-1} / (1 - q^k)^2
    for (std::size_t k = 0; k <= last_k; ++k) {
        const std::size_t len = needed(k);
        if (k == 1) {
            // g_1 = (1 + 2q - q^2) / (1 - q)^2
            g = IntSeries(len);
            const long f1[] = {1, 2, -1};
            for (std::size_t i = 0; i < 3 && i < len; ++i) g[i] = f1[i];
            g.divide_one_minus_xk(1);
            g.divide_one_minus_xk(1);
        }
        g = g.truncated(len);
        IntSeries h = g;
        h.divide_one_minus_xk(k + 1);
        for (std::size_t i = 0; i < len && i + k + 1 < N; ++i) total[i + k + 1] += h[i];

        IntSeries a = h;  // g_k / (1 - q^{k+1})^2
        a.divide_one_minus_xk(k + 1);
        if (k >= 1) {
            // g_{k+1} = 2 a_k - a_{k-1}
            const std::size_t next_len = needed(k + 1);
            IntSeries next(next_len);
            for (std::size_t i = 0; i < next_len; ++i) next[i] = 2 * a[i] - a_prev[i];
            a_prev = std::move(a);
            g = std::move(next);
        } else {
            a_prev = std::move(a);
        }
    }
    return Sequence{0, total.coeffs()};
}

Sequence gen_lconvex_perimeter(std::size_t N) {
    require_positive(N, "gen_lconvex_perimeter");
    const Poly num{1, -2, 1};
    const Poly den{1, -4, 2};
    return to_integer(expand_rational(num, den, N));
}

Sequence gen_stack_area(std::size_t N) {
    require_positive(N, "gen_stack_area");
    // Coefficients of q^1..q^N live at positions 0..N-1 of `total`.
    IntSeries total(N);
    // e_n = 1 / ((q)_{n-1} (q)_n), needed up to order N + 1 - n.
    IntSeries e(N);
    e[0] = 1;
    e.divide_one_minus_xk(1);
    for (std::size_t n = 1; n <= N; ++n) {
        if (n >= 2) {
            e = e.truncated(N + 1 - n);
            e.divide_one_minus_xk(n - 1);
            e.divide_one_minus_xk(n);
        }
        for (std::size_t i = 0; i + n <= N; ++i) total[i + n - 1] += e[i];
    }
    return Sequence{1, total.coeffs()};
}

RatSequence expand_rational(const Poly& num, const Poly& den, std::size_t N) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroSeries, "expand_rational: zero denominator");
    if (num.is_zero()) return RatSequence{0, std::vector<BigRat>(N, BigRat(0))};
    const long a = num.valuation();
    const long b = den.valuation();
    const Poly n0 = num.drop_low(static_cast<std::size_t>(a));
    const Poly d0 = den.drop_low(static_cast<std::size_t>(b));
    auto s = exact::ps_mul(exact::to_series(n0, N), exact::ps_inv(exact::to_series(d0, N)));
    return RatSequence{a - b, s.coeffs()};
}

}  // namespace seqexp::seqgen
