#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqexp/exact/bigint.hpp"

namespace seqexp::exact {

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies x^i.
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<long> coeffs);
    explicit Poly(std::vector<BigRat> coeffs);
    explicit Poly(const std::vector<BigInt>& coeffs);

    static Poly constant(const BigRat& c);
    static Poly monomial(const BigRat& c, std::size_t degree);

    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i, zero beyond the degree.
    BigRat operator[](std::size_t i) const;
    const BigRat& leading() const { return coeffs_.back(); }
    /// Index of the lowest nonzero coefficient; -1 for zero.
    long valuation() const;

    BigRat eval(const BigRat& x) const;
    BigInt eval_integer(const BigInt& x) const;  // requires integral coefficients

    Poly derivative() const;
    /// p(x + shift)
    Poly taylor_shift(const BigRat& shift) const;
    /// p(x) / x^k, assuming x^k divides p.
    Poly drop_low(std::size_t k) const;

    bool is_integral() const;
    /// Positive rational c with p = c * primitive_part(p); zero for p = 0.
    BigRat content() const;
    /// Integer polynomial with coprime coefficients and positive leading coefficient.
    Poly primitive_part() const;
    std::vector<BigInt> integer_coeffs() const;  // requires is_integral()

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const BigRat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRat& c) { return a *= c; }
    friend Poly operator*(const BigRat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form in the given variable, highest degree first.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

/// Euclidean division over the rationals: a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Parses an expression such as "2n^2 + n" or "(x-1)^3/4" in the variable
/// `var`. Division is only by nonzero constants; exponents are constant
/// non-negative integers.
Poly parse_poly(std::string_view text, const std::string& var = "x");

}  // namespace seqexp::exact
