#include "seqexp/asympt/bst.hpp"

#include "seqexp/error.hpp"

namespace seqexp::asympt {

std::vector<std::vector<HpReal>> bst_tableau(const HpSeq& s, const BigRat& w,
                                             const std::optional<std::vector<HpReal>>& abscissae) {
    if (s.size() < 4) throw Error(ErrorCode::InsufficientTerms, "extrapolation needs at least four values");
    if (sgn(w) <= 0) throw Error(ErrorCode::InvalidArgument, "extrapolation exponent must be positive");
    const mpfr_prec_t bits = s.values.front().precision();
    const std::size_t len = s.size();

    std::vector<HpReal> x;
    if (abscissae) {
        if (abscissae->size() != len) throw Error(ErrorCode::InvalidArgument, "one abscissa per value required");
        x = *abscissae;
    } else {
        if (s.offset < 1) throw Error(ErrorCode::InvalidArgument, "default abscissae 1/n need indices n >= 1");
        for (std::size_t i = 0; i < len; ++i) x.push_back(HpReal(1, bits) / HpReal(s.offset + static_cast<long>(i), bits));
    }
    for (const auto& v : x) {
        if (v.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "abscissae must be positive");
    }

    const HpReal one(1, bits);
    std::vector<std::vector<HpReal>> t;
    t.push_back(s.values);
    for (std::size_t m = 1; m < len; ++m) {
        const auto& prev = t[m - 1];
        std::vector<HpReal> cur;
        cur.reserve(len - m);
        for (std::size_t n = 0; n + m < len; ++n) {
            const HpReal delta = prev[n + 1] - prev[n];
            if (delta.is_zero()) {
                cur.push_back(prev[n + 1]);
                continue;
            }
            // T^{-1} is identically zero
            const HpReal older = m >= 2 ? t[m - 2][n + 1] : HpReal(0, bits);
            const HpReal den2 = prev[n + 1] - older;
            const HpReal ratio = pow(x[n] / x[n + m], w);
            const HpReal bracket = den2.is_zero() ? ratio : ratio * (one - delta / den2);
            const HpReal fac = bracket - one;
            if (fac.is_zero() || !fac.is_finite()) {
                throw Error(ErrorCode::TableauBlowup, "zero denominator at column " + std::to_string(m) + ", row " + std::to_string(n));
            }
            cur.push_back(prev[n + 1] + delta / fac);
        }
        t.push_back(std::move(cur));
    }
    return t;
}

BstResult bst_extrapolate(const HpSeq& s, const BigRat& w, const std::optional<std::vector<HpReal>>& abscissae) {
    const auto t = bst_tableau(s, w, abscissae);
    // most settled column: smallest change between its last two entries
    std::optional<BstResult> best;
    for (std::size_t m = 0; m < t.size(); ++m) {
        if (t[m].size() < 2) break;
        const HpReal diff = abs(t[m].back() - t[m][t[m].size() - 2]);
        if (!best || diff < best->spread) best = BstResult{t[m].back(), diff, static_cast<int>(m)};
    }
    return *best;
}

}  // namespace seqexp::asympt
