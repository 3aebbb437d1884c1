#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "seqexp/error.hpp"
#include "seqexp/exact/bigint.hpp"
#include "seqexp/exact/poly.hpp"

namespace seqexp::exact {

/// Power series truncated at a known order: coefficients 0..order-1 are exact,
/// nothing is claimed about higher exponents. Binary operations return the
/// smaller of the two orders.
template <typename R>
class Series {
public:
    Series() = default;
    explicit Series(std::size_t order) : coeffs_(order, R(0)) {}
    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    std::vector<R>& mutable_coeffs() { return coeffs_; }
    const R& operator[](std::size_t i) const { return coeffs_[i]; }
    R& operator[](std::size_t i) { return coeffs_[i]; }

    Series truncated(std::size_t order) const {
        Series out = *this;
        out.coeffs_.resize(std::min(order, coeffs_.size()));
        return out;
    }

    /// Index of the first nonzero coefficient, or -1 if zero to this order.
    long valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return static_cast<long>(i);
        }
        return -1;
    }

    /// In place: s <- s / (1 - x^k), k >= 1.
    void divide_one_minus_xk(std::size_t k) {
        for (std::size_t i = k; i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - k];
    }

    /// In place: s <- s * (1 - x^k), k >= 1.
    void multiply_one_minus_xk(std::size_t k) {
        for (std::size_t i = coeffs_.size(); i-- > k;) coeffs_[i] -= coeffs_[i - k];
    }

    /// x^k * s; the order grows by k.
    Series shifted(std::size_t k) const {
        std::vector<R> out(coeffs_.size() + k, R(0));
        std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<long>(k));
        return Series(std::move(out));
    }

    /// d/dx; the order drops by one.
    Series derivative() const {
        if (coeffs_.empty()) return {};
        std::vector<R> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Series(std::move(out));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<R> coeffs_;
};

using TruncSeries = Series<BigRat>;
using IntSeries = Series<BigInt>;

template <typename R>
Series<R> ps_add(const Series<R>& a, const Series<R>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
    return Series<R>(std::move(out));
}

template <typename R>
Series<R> ps_sub(const Series<R>& a, const Series<R>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
    return Series<R>(std::move(out));
}

template <typename R>
Series<R> ps_scale(const Series<R>& a, const R& c) {
    std::vector<R> out(a.coeffs());
    for (auto& x : out) x *= c;
    return Series<R>(std::move(out));
}

// Schoolbook Cauchy product.
template <typename R>
Series<R> ps_mul(const Series<R>& a, const Series<R>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n, R(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return Series<R>(std::move(out));
}

namespace detail {

inline BigRat divide_exact(const BigRat& a, const BigRat& b) { return a / b; }

inline BigInt divide_exact(const BigInt& a, const BigInt& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw Error(ErrorCode::NonIntegral, "integer series division is not exact");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace detail

/// Multiplicative inverse; the constant term must be invertible in R.
template <typename R>
Series<R> ps_inv(const Series<R>& a) {
    const std::size_t n = a.order();
    if (n == 0) return {};
    if (a[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "ps_inv: constant term is zero");
    std::vector<R> b(n, R(0));
    b[0] = detail::divide_exact(R(1), a[0]);
    for (std::size_t k = 1; k < n; ++k) {
        R acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) acc += a[j] * b[k - j];
        }
        b[k] = detail::divide_exact(R(-acc), a[0]);
    }
    return Series<R>(std::move(b));
}

template <typename R>
Series<R> ps_div(const Series<R>& a, const Series<R>& b) {
    return ps_mul(a, ps_inv(b));
}

/// Embeds a polynomial as a series of the given order.
TruncSeries to_series(const Poly& p, std::size_t order);
IntSeries to_int_series(const Poly& p, std::size_t order);

/// (q)_n = prod_{k=1..n} (1 - q^k), truncated at `order`.
TruncSeries q_pochhammer(long n, std::size_t order);

/// Polynomial times series; exact to the series' order.
TruncSeries mul_poly(const Poly& p, const TruncSeries& s);

}  // namespace seqexp::exact
