#include "seqexp/seqgen/expand.hpp"

#include "seqexp/error.hpp"
#include "seqexp/exact/series.hpp"
#include "seqexp/guess/evaluate.hpp"

namespace seqexp::seqgen {

using exact::TruncSeries;

Sequence expand_prec(const guess::PRecurrence& rec, const Sequence& init, std::size_t N) {
    const guess::PRecurrence r = rec.normalized();
    const long order = r.order();
    if (static_cast<long>(init.size()) < order) {
        throw Error(ErrorCode::InsufficientTerms, "expand_prec needs " + std::to_string(order) + " initial terms");
    }
    std::vector<std::vector<BigInt>> p;
    for (const auto& c : r.coeffs) p.push_back(c.integer_coeffs());
    auto eval = [](const std::vector<BigInt>& c, long n) {
        BigInt acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * n + *it;
        return acc;
    };

    Sequence out = init;
    out.terms.reserve(N);
    BigInt sum, q;
    while (out.size() < N) {
        const long n = out.end_index() - order;
        const BigInt lead = eval(p[static_cast<std::size_t>(order)], n);
        if (lead == 0) {
            throw Error(ErrorCode::LeadingCoeffVanishes, "p_r(" + std::to_string(n) + ") = 0");
        }
        sum = 0;
        for (long j = 0; j < order; ++j) {
            const auto& pj = p[static_cast<std::size_t>(j)];
            if (pj.empty()) continue;
            sum += eval(pj, n) * out.terms[static_cast<std::size_t>(n + j - out.offset)];
        }
        sum = -sum;
        if (!mpz_divisible_p(sum.get_mpz_t(), lead.get_mpz_t())) {
            throw Error(ErrorCode::NonIntegral, "term " + std::to_string(n + order) + " is not an integer");
        }
        mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), lead.get_mpz_t());
        out.terms.push_back(q);
    }
    out.terms.resize(std::min(out.terms.size(), N));
    return out;
}

namespace {

TruncSeries as_series(const RatSequence& s, std::size_t order) {
    TruncSeries y(order);
    for (std::size_t i = 0; i < order && i < s.size(); ++i) y[i] = s.terms[i];
    return y;
}

}  // namespace

// Write v = val(P_y(x, y)). For m > v, P(y + c x^m) = P(y) + c x^m P_y(y) + O(x^{2m}),
// so the coefficient of x^{m+v} fixes c. With v = 0 Newton's iteration doubles
// the number of correct terms per step.
RatSequence expand_algebraic(const guess::AlgEq& P, const RatSequence& seed, std::size_t N) {
    if (seed.offset != 0) throw Error(ErrorCode::InvalidArgument, "expand_algebraic: seed must start at x^0");
    if (seed.empty()) throw Error(ErrorCode::BranchAmbiguous, "expand_algebraic: empty seed");
    const std::size_t L = seed.size();
    const guess::AlgEq dP = P.y_derivative();

    TruncSeries y = as_series(seed, L);
    if (eval_algeq(P, y).valuation() >= 0) {
        throw Error(ErrorCode::NotARoot, "seed does not satisfy the equation to its own order");
    }
    const long v = guess::eval_algeq(dP, y).valuation();
    if (v < 0) {
        throw Error(ErrorCode::BranchAmbiguous, "dP/dy vanishes on the seed to its order; branch not determined");
    }
    if (N <= L) return RatSequence{0, std::vector<BigRat>(seed.terms.begin(), seed.terms.begin() + static_cast<long>(N))};

    if (v == 0) {
        std::size_t have = L;
        while (have < N) {
            const std::size_t target = std::min(2 * have, N);
            TruncSeries yt = y.truncated(have);
            yt.mutable_coeffs().resize(target, BigRat(0));
            TruncSeries f = guess::eval_algeq(P, yt);
            TruncSeries fy = guess::eval_algeq(dP, yt);
            TruncSeries step = exact::ps_mul(f, exact::ps_inv(fy));
            y = exact::ps_sub(yt, step);
            have = target;
        }
        return RatSequence{0, y.coeffs()};
    }

    // Singular case: one coefficient at a time.
    const BigRat pivot = guess::eval_algeq(dP, y)[static_cast<std::size_t>(v)];
    std::vector<BigRat> coeffs(seed.terms);
    for (std::size_t m = L; m < N; ++m) {
        const std::size_t need = m + static_cast<std::size_t>(v) + 1;
        TruncSeries ym(need);
        for (std::size_t i = 0; i < coeffs.size(); ++i) ym[i] = coeffs[i];
        TruncSeries f = guess::eval_algeq(P, ym);
        for (std::size_t i = 0; i < m + static_cast<std::size_t>(v); ++i) {
            if (f[i] != 0) throw Error(ErrorCode::NotARoot, "seed does not extend to a root of the equation");
        }
        coeffs.push_back(-f[m + static_cast<std::size_t>(v)] / pivot);
    }
    return RatSequence{0, std::move(coeffs)};
}

}  // namespace seqexp::seqgen
