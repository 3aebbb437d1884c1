#include "seqexp/identify/lll.hpp"

#include <utility>

#include "seqexp/error.hpp"

namespace seqexp::identify {

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Integral variant: d[i] are Gram determinants and lam[k][j] = d[j+1] * mu_kj
// (0-based rows, d[0] = 1), so everything stays in Z.
class Reducer {
public:
    explicit Reducer(IntBasis& b) : b_(b), n_(b.size()), d_(n_ + 1), lam_(n_, std::vector<BigInt>(n_)) {}

    void run() {
        d_[0] = 1;
        std::size_t k = 1, kmax = 0;
        d_[1] = dot(b_[0], b_[0]);
        if (d_[1] == 0) rank_deficient();
        while (k < n_) {
            if (k > kmax) {
                kmax = k;
                extend(k);
            }
            while (true) {
                reduce(k, k - 1);
                const BigInt& l = lam_[k][k - 1];
                if (4 * d_[k + 1] * d_[k - 1] < 3 * d_[k] * d_[k] - 4 * l * l) {
                    swap(k, kmax);
                    if (k > 1) --k;
                } else {
                    break;
                }
            }
            for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
            ++k;
        }
    }

private:
    [[noreturn]] static void rank_deficient() {
        throw Error(ErrorCode::RankDeficient, "basis rows are linearly dependent");
    }

    void extend(std::size_t k) {
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt u = dot(b_[k], b_[j]);
            for (std::size_t i = 0; i < j; ++i) u = (d_[i + 1] * u - lam_[k][i] * lam_[j][i]) / d_[i];
            if (j < k) {
                lam_[k][j] = u;
            } else {
                d_[k + 1] = u;
                if (u == 0) rank_deficient();
            }
        }
    }

    void reduce(std::size_t k, std::size_t l) {
        if (2 * abs(lam_[k][l]) <= d_[l + 1]) return;
        const BigInt q = exact::round_div(lam_[k][l], d_[l + 1]);
        for (std::size_t i = 0; i < b_[k].size(); ++i) b_[k][i] -= q * b_[l][i];
        lam_[k][l] -= q * d_[l + 1];
        for (std::size_t i = 0; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
    }

    void swap(std::size_t k, std::size_t kmax) {
        std::swap(b_[k], b_[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
        const BigInt l = lam_[k][k - 1];
        const BigInt big_b = (d_[k - 1] * d_[k + 1] + l * l) / d_[k];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            const BigInt t = lam_[i][k];
            lam_[i][k] = (d_[k + 1] * lam_[i][k - 1] - l * t) / d_[k];
            lam_[i][k - 1] = (big_b * t + l * lam_[i][k]) / d_[k + 1];
        }
        d_[k] = big_b;
    }

    IntBasis& b_;
    std::size_t n_;
    std::vector<BigInt> d_;
    std::vector<std::vector<BigInt>> lam_;
};

}  // namespace

IntBasis lll_reduce(IntBasis basis) {
    if (basis.empty()) return basis;
    const std::size_t dim = basis[0].size();
    for (const auto& row : basis) {
        if (row.size() != dim) throw Error(ErrorCode::InvalidArgument, "basis rows differ in length");
    }
    if (basis.size() > dim) throw Error(ErrorCode::RankDeficient, "more rows than the ambient dimension");
    Reducer(basis).run();
    return basis;
}

}  // namespace seqexp::identify
