#include "seqexp/guess/linsolve.hpp"

#include <utility>

namespace seqexp::guess {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const BigInt& x) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), kPrime);
    return r.get_ui();
}

std::vector<BigInt> primitive(std::vector<BigInt> v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return v;
}

}  // namespace

std::size_t modular_rank(const IntMatrix& rows, std::size_t ncols) {
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::uint64_t> row(ncols);
        for (std::size_t j = 0; j < ncols; ++j) row[j] = reduce(r[j]);
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = powmod(m[rank][c], kPrime - 2);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const std::uint64_t f = mulmod(m[i][c], inv);
            for (std::size_t j = c; j < ncols; ++j) {
                const std::uint64_t sub = mulmod(f, m[rank][j]);
                m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + kPrime - sub;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<BigInt>> integer_nullspace(const IntMatrix& rows, std::size_t ncols) {
    IntMatrix a = rows;
    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    std::size_t r = 0;
    BigInt t;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<BigInt>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigRat> v(ncols, BigRat(0));
        v[f] = 1;
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = pivot_cols[k];
            BigRat acc = 0;
            for (std::size_t j = pc + 1; j < ncols; ++j) {
                if (v[j] != 0 && a[k][j] != 0) acc += BigRat(a[k][j]) * v[j];
            }
            v[pc] = -acc / BigRat(a[k][pc]);
        }
        basis.push_back(primitive(clear_denominators(v)));
    }
    return basis;
}

std::vector<BigInt> clear_denominators(const std::vector<BigRat>& row) {
    BigInt l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (const auto& x : row) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        out.push_back(q * x.get_num());
    }
    return out;
}

std::size_t total_bits(const std::vector<BigInt>& v) {
    std::size_t bits = 0;
    for (const auto& x : v) bits += exact::bit_length(abs(x));
    return bits;
}

}  // namespace seqexp::guess
