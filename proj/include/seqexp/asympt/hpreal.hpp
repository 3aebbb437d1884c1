#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "seqexp/exact/bigint.hpp"

namespace seqexp::asympt {

using exact::BigInt;
using exact::BigRat;

/// Binary precision carrying `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

/// Multiprecision real with value semantics. Every value carries its own
/// precision; arithmetic results take the larger precision of the operands.
class HpReal {
public:
    explicit HpReal(mpfr_prec_t bits = 64);
    HpReal(long value, mpfr_prec_t bits);
    HpReal(const BigInt& value, mpfr_prec_t bits);
    HpReal(const BigRat& value, mpfr_prec_t bits);
    /// Parses a decimal string ("1.25e-3", "-7").
    static HpReal parse(std::string_view text, mpfr_prec_t bits);
    static HpReal pi(mpfr_prec_t bits);

    HpReal(const HpReal& o);
    HpReal(HpReal&& o) noexcept;
    HpReal& operator=(const HpReal& o);
    HpReal& operator=(HpReal&& o) noexcept;
    ~HpReal();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /// Same value rounded (or padded) to another precision.
    HpReal with_precision(mpfr_prec_t bits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Exact binary value as a rational.
    BigRat to_rational() const;
    /// Nearest integer.
    BigInt round() const;
    /// Decimal rendering with at most `digits` significant digits, trailing
    /// zeros removed; 0 selects the digits implied by the precision.
    std::string to_string(int digits = 0) const;

    HpReal operator-() const;
    HpReal& operator+=(const HpReal& o);
    HpReal& operator-=(const HpReal& o);
    HpReal& operator*=(const HpReal& o);
    HpReal& operator/=(const HpReal& o);
    friend HpReal operator+(HpReal a, const HpReal& b) { return a += b; }
    friend HpReal operator-(HpReal a, const HpReal& b) { return a -= b; }
    friend HpReal operator*(HpReal a, const HpReal& b) { return a *= b; }
    friend HpReal operator/(HpReal a, const HpReal& b) { return a /= b; }
    friend HpReal operator*(HpReal a, long b);
    friend HpReal operator/(HpReal a, long b);

    friend bool operator==(const HpReal& a, const HpReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HpReal& a, const HpReal& b);

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

HpReal abs(const HpReal& x);
HpReal sqrt(const HpReal& x);
HpReal exp(const HpReal& x);
HpReal log(const HpReal& x);
HpReal cos(const HpReal& x);
HpReal acos(const HpReal& x);
HpReal pow(const HpReal& x, const HpReal& y);
HpReal pow(const HpReal& x, long n);
/// x^q for rational q, x > 0.
HpReal pow(const HpReal& x, const BigRat& q);

/// Decimal working precision shared by an analysis.
struct HpContext {
    int digits = 100;

    mpfr_prec_t bits() const { return bits_for_digits(digits); }
    HpReal make(long v) const { return HpReal(v, bits()); }
    HpReal make(const BigInt& v) const { return HpReal(v, bits()); }
    HpReal make(const BigRat& v) const { return HpReal(v, bits()); }
    HpReal parse(std::string_view text) const { return HpReal::parse(text, bits()); }
    HpReal pi() const { return HpReal::pi(bits()); }
};

/// Number of leading decimal digits on which a and b agree, measured as
/// -log10(|a - b| / |b|); capped at `cap`.
int agreeing_digits(const HpReal& a, const HpReal& b, int cap = 1000);

/// Values indexed offset, offset + 1, ...
struct HpSeq {
    long offset = 0;
    std::vector<HpReal> values;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    long end_index() const { return offset + static_cast<long>(values.size()); }
    long last_index() const { return end_index() - 1; }
    bool has(long n) const { return n >= offset && n < end_index(); }
    const HpReal& at(long n) const;
    const HpReal& back() const { return values.back(); }
};

}  // namespace seqexp::asympt
