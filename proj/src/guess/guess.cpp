#include "seqexp/guess/guess.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "seqexp/error.hpp"
#include "seqexp/exact/series.hpp"
#include "seqexp/guess/evaluate.hpp"
#include "seqexp/guess/linsolve.hpp"

namespace seqexp::guess {

using exact::TruncSeries;
using seqgen::RatSequence;
using seqgen::Sequence;

namespace {

bool annihilates(const std::vector<BigInt>& row, const std::vector<BigInt>& v) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0 && row[j] != 0) acc += row[j] * v[j];
    }
    return acc == 0;
}

// Nullspace vector of the full system with the fewest bits among those that
// pass `acceptable`. Elimination runs on a leading block of rows that is grown
// until its candidates also satisfy the remaining rows.
std::optional<std::vector<BigInt>> fit_relation(const IntMatrix& rows, std::size_t nu, std::size_t margin,
                                                const std::function<bool(const std::vector<BigInt>&)>& acceptable) {
    if (modular_rank(rows, nu) == nu) return std::nullopt;
    std::size_t take = std::min(rows.size(), nu - 1 + margin + 8);
    while (true) {
        IntMatrix block(rows.begin(), rows.begin() + static_cast<long>(take));
        auto basis = integer_nullspace(block, nu);
        if (basis.empty()) return std::nullopt;
        std::optional<std::vector<BigInt>> best;
        for (auto& v : basis) {
            if (!acceptable(v)) continue;
            bool ok = std::all_of(rows.begin() + static_cast<long>(take), rows.end(),
                                  [&](const auto& row) { return annihilates(row, v); });
            if (!ok) continue;
            if (!best || total_bits(v) < total_bits(*best)) best = std::move(v);
        }
        if (best || take == rows.size()) return best;
        take = std::min(rows.size(), 2 * take);
    }
}

std::vector<std::pair<int, int>> search_order(int amax, int bmin, int bmax) {
    // pairs (a, b) ordered by a + b, then b
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a <= amax; ++a) {
        for (int b = bmin; b <= bmax; ++b) pairs.emplace_back(a, b);
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        if (x.first + x.second != y.first + y.second) return x.first + x.second < y.first + y.second;
        return x.second < y.second;
    });
    return pairs;
}

TruncSeries as_series(const RatSequence& s) {
    if (s.offset < 0) {
        throw Error(ErrorCode::InvalidArgument, "series has a pole at 0; multiply by a power of x first");
    }
    const std::size_t n = s.size() + static_cast<std::size_t>(s.offset);
    TruncSeries y(n);
    for (std::size_t i = 0; i < s.size(); ++i) y[i + static_cast<std::size_t>(s.offset)] = s.terms[i];
    return y;
}

// Stirling numbers of the second kind, S[k][i].
std::vector<std::vector<BigInt>> stirling2(std::size_t kmax) {
    std::vector<std::vector<BigInt>> S(kmax + 1, std::vector<BigInt>(kmax + 1, BigInt(0)));
    S[0][0] = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        for (std::size_t i = 1; i <= k; ++i) S[k][i] = S[k - 1][i - 1] + BigInt(static_cast<long>(i)) * S[k - 1][i];
    }
    return S;
}

}  // namespace

std::optional<PRecurrence> guess_prec(const Sequence& terms, int rmax, int dmax, const GuessOptions& options) {
    const long L = static_cast<long>(terms.size());
    bool any_feasible = false;
    for (auto [d, r] : search_order(dmax, 1, rmax)) {
        const std::size_t nu = static_cast<std::size_t>((r + 1) * (d + 1));
        const long E = L - r;
        if (E <= 0 || static_cast<std::size_t>(E) + 1 < nu + options.margin) continue;
        any_feasible = true;

        IntMatrix rows;
        rows.reserve(static_cast<std::size_t>(E));
        for (long i = 0; i < E; ++i) {
            const long n = terms.offset + i;
            std::vector<BigInt> row;
            row.reserve(nu);
            for (int j = 0; j <= r; ++j) {
                BigInt npow = 1;
                for (int k = 0; k <= d; ++k) {
                    row.push_back(npow * terms.terms[static_cast<std::size_t>(i + j)]);
                    npow *= n;
                }
            }
            rows.push_back(std::move(row));
        }
        auto leading_nonzero = [&](const std::vector<BigInt>& v) {
            for (int k = 0; k <= d; ++k) {
                if (v[static_cast<std::size_t>(r * (d + 1) + k)] != 0) return true;
            }
            return false;
        };
        auto hit = fit_relation(rows, nu, options.margin, leading_nonzero);
        if (!hit) continue;
        PRecurrence rec;
        for (int j = 0; j <= r; ++j) {
            std::vector<BigInt> c(hit->begin() + j * (d + 1), hit->begin() + (j + 1) * (d + 1));
            rec.coeffs.emplace_back(c);
        }
        return rec.normalized();
    }
    if (!any_feasible) {
        throw Error(ErrorCode::InsufficientTerms,
                    std::to_string(L) + " terms cannot overdetermine any (r, d) in range by margin " +
                        std::to_string(options.margin));
    }
    return std::nullopt;
}

std::size_t prec_residual(const PRecurrence& rec, const Sequence& terms) {
    const long r = rec.order();
    std::size_t count = 0;
    for (long n = terms.offset; n + r < terms.end_index(); ++n) {
        if (rec.apply(terms, n) != 0) break;
        ++count;
    }
    return count;
}

// With theta = x d/dx, summing p_j(n) u(n+j) x^{n+r} over n >= 0 gives
//   sum_j x^{r-j} p_j(theta - j) f = sum_j x^{r-j} p_j(theta - j) (u(0) + ... + u(j-1) x^{j-1}),
// an inhomogeneous equation L f = R with polynomial R. Then
// (R D - R') L f = 0 is homogeneous of one order higher.
LinODE prec_to_ode(const PRecurrence& rec_in, const Sequence& init) {
    const PRecurrence rec = rec_in.normalized();
    const long r = rec.order();
    if (init.offset != 0) throw Error(ErrorCode::InvalidArgument, "prec_to_ode expects initial terms from u(0)");
    if (static_cast<long>(init.size()) < r) {
        throw Error(ErrorCode::InsufficientTerms, "prec_to_ode needs " + std::to_string(r) + " initial terms");
    }
    if (prec_residual(rec, init) + static_cast<std::size_t>(r) < init.size()) {
        throw Error(ErrorCode::InconsistentInit, "initial terms do not satisfy the recurrence");
    }

    // theta-form: L = sum_k c[k](x) theta^k
    const long d = rec.degree();
    std::vector<Poly> c(static_cast<std::size_t>(d + 1));
    for (long j = 0; j <= r; ++j) {
        const Poly shifted = rec.coeffs[static_cast<std::size_t>(j)].taylor_shift(BigRat(-j));
        for (long k = 0; k <= shifted.degree(); ++k) {
            c[static_cast<std::size_t>(k)] +=
                Poly::monomial(shifted.coeffs()[static_cast<std::size_t>(k)], static_cast<std::size_t>(r - j));
        }
    }
    // theta^k = sum_i S(k, i) x^i D^i
    const auto S = stirling2(static_cast<std::size_t>(d));
    std::vector<Poly> Q(static_cast<std::size_t>(d + 1));
    for (long k = 0; k <= d; ++k) {
        for (long i = 0; i <= k; ++i) {
            const BigInt& s = S[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (s == 0) continue;
            Q[static_cast<std::size_t>(i)] +=
                c[static_cast<std::size_t>(k)] * Poly::monomial(BigRat(s), static_cast<std::size_t>(i));
        }
    }

    Poly R;
    for (long j = 0; j <= r; ++j) {
        const Poly& pj = rec.coeffs[static_cast<std::size_t>(j)];
        for (long i = 0; i < j; ++i) {
            BigRat coef = BigRat(init.terms[static_cast<std::size_t>(i)]) * pj.eval(BigRat(i - j));
            R += Poly::monomial(coef, static_cast<std::size_t>(r - j + i));
        }
    }

    std::vector<Poly> out;
    if (R.is_zero()) {
        out = Q;
    } else {
        const Poly dR = R.derivative();
        out.assign(Q.size() + 1, Poly{});
        for (std::size_t i = 0; i < Q.size(); ++i) {
            out[i] += R * Q[i].derivative() - dR * Q[i];
            out[i + 1] += R * Q[i];
        }
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    // strip a common polynomial factor
    Poly g;
    for (const auto& q : out) g = exact::gcd(g, q);
    if (!g.is_zero() && g.degree() > 0) {
        for (auto& q : out) q = exact::divmod(q, g).first;
    }
    return LinODE{out}.normalized();
}

std::optional<long> ode_residual(const LinODE& ode, const RatSequence& terms) {
    const TruncSeries f = as_series(terms);
    const TruncSeries res = apply_ode(ode, f);
    const long v = res.valuation();
    if (v < 0) return std::nullopt;
    return v;
}

std::optional<long> ode_residual(const LinODE& ode, const Sequence& terms) {
    return ode_residual(ode, seqgen::to_rational(terms));
}

std::optional<AlgEq> guess_algeq(const RatSequence& terms, int dxmax, int dymax, const GuessOptions& options) {
    const TruncSeries y = as_series(terms);
    const std::size_t L = y.order();

    std::vector<TruncSeries> powers{exact::to_series(Poly{1}, L)};
    for (int j = 1; j <= dymax; ++j) powers.push_back(exact::ps_mul(powers.back(), y));

    bool any_feasible = false;
    for (auto [dx, dy] : search_order(dxmax, 1, dymax)) {
        const std::size_t nu = static_cast<std::size_t>((dx + 1) * (dy + 1));
        if (L + 1 < nu + options.margin) continue;
        any_feasible = true;

        IntMatrix rows;
        rows.reserve(L);
        for (std::size_t e = 0; e < L; ++e) {
            std::vector<BigRat> row;
            row.reserve(nu);
            for (int j = 0; j <= dy; ++j) {
                for (int i = 0; i <= dx; ++i) {
                    row.push_back(e >= static_cast<std::size_t>(i) ? powers[static_cast<std::size_t>(j)][e - static_cast<std::size_t>(i)]
                                                                  : BigRat(0));
                }
            }
            rows.push_back(clear_denominators(row));
        }
        auto shape_ok = [&](const std::vector<BigInt>& v) {
            bool top = false, bottom = false;
            for (int i = 0; i <= dx; ++i) {
                if (v[static_cast<std::size_t>(dy * (dx + 1) + i)] != 0) top = true;
                if (v[static_cast<std::size_t>(i)] != 0) bottom = true;
            }
            return top && bottom;
        };
        auto hit = fit_relation(rows, nu, options.margin, shape_ok);
        if (!hit) continue;
        AlgEq P;
        for (int j = 0; j <= dy; ++j) {
            std::vector<BigInt> c(hit->begin() + j * (dx + 1), hit->begin() + (j + 1) * (dx + 1));
            P.coeffs.emplace_back(c);
        }
        return P.normalized();
    }
    if (!any_feasible) {
        throw Error(ErrorCode::InsufficientTerms,
                    std::to_string(L) + " coefficients cannot overdetermine any (dx, dy) in range by margin " +
                        std::to_string(options.margin));
    }
    return std::nullopt;
}

std::optional<AlgEq> guess_algeq(const Sequence& terms, int dxmax, int dymax, const GuessOptions& options) {
    return guess_algeq(seqgen::to_rational(terms), dxmax, dymax, options);
}

std::optional<long> algeq_residual(const AlgEq& P, const RatSequence& terms) {
    const long v = eval_algeq(P, as_series(terms)).valuation();
    if (v < 0) return std::nullopt;
    return v;
}

std::optional<long> algeq_residual(const AlgEq& P, const Sequence& terms) {
    return algeq_residual(P, seqgen::to_rational(terms));
}

}  // namespace seqexp::guess
