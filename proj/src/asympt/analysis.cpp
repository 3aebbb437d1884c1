#include "seqexp/asympt/analysis.hpp"

#include <algorithm>

#include "seqexp/error.hpp"

namespace seqexp::asympt {

HpSeq to_hpseq(const seqgen::Sequence& s, const HpContext& ctx) {
    HpSeq out{s.offset, {}};
    out.values.reserve(s.size());
    for (const auto& t : s.terms) out.values.push_back(ctx.make(t));
    return out;
}

HpSeq ratios(const HpSeq& s) {
    HpSeq out{s.offset + 1, {}};
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s.values[i - 1].is_zero()) {
            throw Error(ErrorCode::DivisionByZero, "zero term at index " + std::to_string(s.offset + static_cast<long>(i) - 1));
        }
        out.values.push_back(s.values[i] / s.values[i - 1]);
    }
    return out;
}

HpSeq elim_power(const HpSeq& s, int p) {
    if (p < 1) throw Error(ErrorCode::InvalidArgument, "elim_power needs p >= 1");
    HpSeq out{s.offset + 1, {}};
    for (std::size_t i = 1; i < s.size(); ++i) {
        const long n = s.offset + static_cast<long>(i);
        const mpfr_prec_t bits = s.values[i].precision();
        const HpReal np = pow(HpReal(n, bits), static_cast<long>(p));
        const HpReal mp = pow(HpReal(n - 1, bits), static_cast<long>(p));
        out.values.push_back((np * s.values[i] - mp * s.values[i - 1]) / (np - mp));
    }
    return out;
}

HpSeq loglog_gradient(const HpSeq& s) {
    HpSeq out{std::max(s.offset + 1, 2L), {}};
    for (long n = out.offset; n < s.end_index(); ++n) {
        const HpReal& cur = s.at(n);
        const HpReal& prev = s.at(n - 1);
        if (cur.sign() <= 0 || prev.sign() <= 0) {
            throw Error(ErrorCode::NonPositiveValue, "log-log gradient needs positive values (index " + std::to_string(n) + ")");
        }
        const mpfr_prec_t bits = cur.precision();
        out.values.push_back((log(cur) - log(prev)) / (log(HpReal(n, bits)) - log(HpReal(n - 1, bits))));
    }
    return out;
}

HpSeq stretched_lambda(const seqgen::Sequence& l, const HpContext& ctx) {
    HpSeq out{std::max(l.offset, 1L), {}};
    const HpReal pi = ctx.pi();
    for (long n = out.offset; n < l.end_index(); ++n) {
        const HpReal v = ctx.make(l.at(n));
        if (v.sign() <= 0) throw Error(ErrorCode::NonPositiveValue, "log of non-positive term at " + std::to_string(n));
        out.values.push_back(log(v) / (pi * sqrt(ctx.make(n))));
    }
    return out;
}

TripleFit stretched_triple_fit(const HpSeq& lambda) {
    if (lambda.size() < 3) throw Error(ErrorCode::InsufficientTerms, "triple fit needs at least three values");
    if (lambda.offset < 1) throw Error(ErrorCode::InvalidArgument, "triple fit needs indices n >= 1");
    TripleFit fit{{lambda.offset + 1, {}}, {lambda.offset + 1, {}}, {lambda.offset + 1, {}}};
    const mpfr_prec_t bits = lambda.values.front().precision();
    const HpReal pi = HpReal::pi(bits);
    for (long k = lambda.offset + 1; k + 1 < lambda.end_index(); ++k) {
        std::vector<std::vector<HpReal>> a;
        std::vector<HpReal> b;
        for (long n = k - 1; n <= k + 1; ++n) {
            const HpReal nn(n, bits);
            const HpReal scale = pi * sqrt(nn);
            a.push_back({HpReal(1, bits), log(nn) / scale, HpReal(1, bits) / scale});
            b.push_back(lambda.at(n));
        }
        auto e = solve_linear(std::move(a), std::move(b));
        fit.e1.values.push_back(e[0]);
        fit.e2.values.push_back(e[1]);
        fit.e3.values.push_back(e[2]);
    }
    return fit;
}

namespace {

template <typename Seq>
Seq subsample_squares(const Seq& s, auto&& get) {
    if (s.offset > 1) throw Error(ErrorCode::InvalidArgument, "square subsequence needs index 1");
    Seq out;
    out.offset = 1;
    for (long n = 1; n * n < s.end_index(); ++n) get(out, n * n);
    return out;
}

}  // namespace

seqgen::Sequence square_subsample(const seqgen::Sequence& s) {
    return subsample_squares(s, [&](seqgen::Sequence& out, long m) { out.terms.push_back(s.at(m)); });
}

HpSeq square_subsample(const HpSeq& s) {
    return subsample_squares(s, [&](HpSeq& out, long m) { out.values.push_back(s.at(m)); });
}

Estimate tail_estimate(const HpSeq& s, std::size_t window) {
    if (s.empty()) throw Error(ErrorCode::InsufficientTerms, "no values to summarize");
    const std::size_t start = s.size() > window ? s.size() - window : 0;
    HpReal lo = s.values[start], hi = s.values[start];
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s.values[i] < lo) lo = s.values[i];
        if (s.values[i] > hi) hi = s.values[i];
    }
    return {s.values.back(), hi - lo};
}

PowerLawDiagnostics powerlaw_pipeline(const HpSeq& s, const HpReal& mu) {
    if (mu.sign() <= 0) throw Error(ErrorCode::NonPositiveValue, "growth constant must be positive");
    PowerLawDiagnostics d;
    d.ratios = ratios(s);
    d.g.offset = d.ratios.offset;
    for (long n = d.ratios.offset; n < d.ratios.end_index(); ++n) {
        d.g.values.push_back((d.ratios.at(n) / mu - HpReal(1, mu.precision())) * n);
    }
    d.g2.offset = d.g.offset + 1;
    for (long n = d.g2.offset; n < d.g.end_index(); ++n) {
        d.g2.values.push_back(d.g.at(n) * n - d.g.at(n - 1) * (n - 1));
    }
    d.g_estimate = tail_estimate(d.g);
    d.g2_estimate = tail_estimate(d.g2);
    return d;
}

std::vector<HpReal> solve_linear(std::vector<std::vector<HpReal>> a, std::vector<HpReal> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (abs(a[i][c]) > abs(a[piv][c])) piv = i;
        }
        if (a[piv][c].is_zero()) throw Error(ErrorCode::SingularSystem, "zero pivot in column " + std::to_string(c));
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            const HpReal f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<HpReal> x(n, HpReal(b.front().precision()));
    for (std::size_t i = n; i-- > 0;) {
        HpReal acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace seqexp::asympt
