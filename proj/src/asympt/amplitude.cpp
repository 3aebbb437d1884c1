#include "seqexp/asympt/amplitude.hpp"

#include "seqexp/asympt/analysis.hpp"
#include "seqexp/error.hpp"

namespace seqexp::asympt {

namespace {

HpReal inf_norm(const std::vector<std::vector<HpReal>>& a, mpfr_prec_t bits) {
    HpReal best(0, bits);
    for (const auto& row : a) {
        HpReal sum(0, bits);
        for (const auto& v : row) sum += abs(v);
        if (sum > best) best = sum;
    }
    return best;
}

struct Fit {
    std::vector<HpReal> b;  // C, C a_1, ..., C a_K
    HpReal condition;
};

Fit fit_window(const HpSeq& s, const HpReal& mu, const BigRat& divisor, int K, long last,
               const HpContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const long first = last - K;
    if (first < std::max(s.offset, 1L)) {
        throw Error(ErrorCode::InsufficientTerms, "amplitude fit window reaches below the first usable index");
    }
    const HpReal mu_hp = mu.with_precision(bits);
    const HpReal big_n(last, bits);
    // columns use t = last / n so every entry lies in [1, (last/first)^K]
    std::vector<std::vector<HpReal>> a;
    std::vector<HpReal> rhs;
    HpReal mu_pow = pow(mu_hp, first);
    for (long n = first; n <= last; ++n) {
        const HpReal nn(n, bits);
        rhs.push_back(s.at(n).with_precision(bits) * pow(nn, divisor) / mu_pow);
        mu_pow *= mu_hp;
        std::vector<HpReal> row;
        const HpReal t = big_n / nn;
        HpReal p(1, bits);
        for (int k = 0; k <= K; ++k) {
            row.push_back(p);
            p *= t;
        }
        a.push_back(std::move(row));
    }
    const HpReal cond = inf_norm(a, bits) * inf_norm(invert_matrix(a), bits);
    auto c = solve_linear(std::move(a), std::move(rhs));
    HpReal scale(1, bits);
    for (int k = 0; k <= K; ++k) {
        c[static_cast<std::size_t>(k)] *= scale;
        scale *= big_n;
    }
    return {std::move(c), cond};
}

}  // namespace

PowerLawModel amplitude_fit(const HpSeq& s, const HpReal& mu, const BigRat& divisor, int K, const HpContext& ctx,
                            const AmplitudeOptions& opts) {
    if (K < 0) throw Error(ErrorCode::InvalidArgument, "K must be non-negative");
    if (mu.sign() <= 0) throw Error(ErrorCode::NonPositiveValue, "growth constant must be positive");
    const long last = s.last_index();
    const Fit main = fit_window(s, mu, divisor, K, last, ctx);

    HpReal limit(10, ctx.bits());
    limit = pow(limit, static_cast<long>(ctx.digits - opts.condition_guard));
    if (main.condition > limit) {
        throw Error(ErrorCode::IllConditioned, "condition estimate " + main.condition.to_string(6) + " exceeds working precision");
    }
    if (main.b[0].is_zero()) throw Error(ErrorCode::SingularSystem, "fitted amplitude is zero");

    PowerLawModel model{mu.with_precision(ctx.bits()), -ctx.make(divisor), main.b[0], {}, ctx.make(0L), main.condition, last};
    for (int k = 1; k <= K; ++k) model.a.push_back(main.b[static_cast<std::size_t>(k)] / main.b[0]);
    for (long shift : opts.shifts) {
        const Fit other = fit_window(s, mu, divisor, K, last - shift, ctx);
        const HpReal d = abs(other.b[0] - main.b[0]);
        if (d > model.spread) model.spread = d;
    }
    return model;
}

PowerLawModel amplitude_fit(const seqgen::Sequence& s, const HpReal& mu, const BigRat& divisor, int K,
                            const HpContext& ctx, const AmplitudeOptions& opts) {
    // only the tail enters any fit window
    long reach = K;
    for (long shift : opts.shifts) reach = std::max(reach, K + shift);
    const long first = std::max(s.offset, s.end_index() - 1 - reach);
    HpSeq tail{first, {}};
    for (long n = first; n < s.end_index(); ++n) tail.values.push_back(ctx.make(s.at(n)));
    return amplitude_fit(tail, mu, divisor, K, ctx, opts);
}

std::vector<std::vector<HpReal>> invert_matrix(std::vector<std::vector<HpReal>> a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    const mpfr_prec_t bits = a[0][0].precision();
    std::vector<std::vector<HpReal>> inv(n, std::vector<HpReal>(n, HpReal(0, bits)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = HpReal(1, bits);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (abs(a[i][c]) > abs(a[piv][c])) piv = i;
        }
        if (a[piv][c].is_zero()) throw Error(ErrorCode::SingularSystem, "matrix is singular");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const HpReal p = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const HpReal f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace seqexp::asympt
