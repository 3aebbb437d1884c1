#include "seqexp/asympt/hpreal.hpp"

#include <cmath>
#include <string>

#include "seqexp/error.hpp"

namespace seqexp::asympt {

mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 1) throw Error(ErrorCode::InvalidArgument, "precision must be at least one digit");
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

HpReal::HpReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

HpReal::HpReal(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

HpReal::HpReal(const BigInt& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

HpReal::HpReal(const BigRat& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

HpReal HpReal::parse(std::string_view text, mpfr_prec_t bits) {
    HpReal r(bits);
    std::string s(text);
    char* end = nullptr;
    mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end == nullptr || *end != '\0') {
        throw Error(ErrorCode::InvalidArgument, "not a decimal number: '" + s + "'");
    }
    return r;
}

HpReal HpReal::pi(mpfr_prec_t bits) {
    HpReal r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

HpReal::HpReal(const HpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HpReal::HpReal(HpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

HpReal& HpReal::operator=(const HpReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HpReal& HpReal::operator=(HpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

HpReal::~HpReal() { mpfr_clear(v_); }

HpReal HpReal::with_precision(mpfr_prec_t bits) const {
    HpReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigRat HpReal::to_rational() const {
    if (!is_finite()) throw Error(ErrorCode::DomainError, "non-finite value has no rational form");
    BigRat q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

BigInt HpReal::round() const {
    if (!is_finite()) throw Error(ErrorCode::DomainError, "cannot round a non-finite value");
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string HpReal::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    if (digits <= 0) digits = static_cast<int>(std::floor((precision() - 32) * 0.30102999566398120));
    if (digits < 1) digits = 1;
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool negative = false;
    if (!mant.empty() && mant.front() == '-') {
        negative = true;
        mant.erase(0, 1);
    }
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    // value = 0.mant * 10^e
    std::string out;
    const long n = static_cast<long>(mant.size());
    if (e > 0 && e <= 40) {
        if (n <= e) {
            out = mant + std::string(static_cast<std::size_t>(e - n), '0');
        } else {
            out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
        }
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (n > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(e) - 1);
    }
    return negative ? "-" + out : out;
}

namespace {

mpfr_prec_t wider(const HpReal& a, const HpReal& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

HpReal HpReal::operator-() const {
    HpReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal& HpReal::operator+=(const HpReal& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal& HpReal::operator-=(const HpReal& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal& HpReal::operator*=(const HpReal& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal& HpReal::operator/=(const HpReal& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal operator*(HpReal a, long b) {
    mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN);
    return a;
}

HpReal operator/(HpReal a, long b) {
    mpfr_div_si(a.v_, a.v_, b, MPFR_RNDN);
    return a;
}

std::partial_ordering operator<=>(const HpReal& a, const HpReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

HpReal abs(const HpReal& x) {
    HpReal r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HpReal sqrt(const HpReal& x) {
    if (x.sign() < 0) throw Error(ErrorCode::DomainError, "sqrt of a negative number");
    HpReal r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HpReal exp(const HpReal& x) {
    HpReal r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HpReal log(const HpReal& x) {
    if (x.sign() <= 0) throw Error(ErrorCode::DomainError, "log of a non-positive number");
    HpReal r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HpReal cos(const HpReal& x) {
    HpReal r(x.precision());
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HpReal acos(const HpReal& x) {
    if (mpfr_cmpabs_ui(x.get(), 1) > 0) throw Error(ErrorCode::DomainError, "arccos argument outside [-1, 1]");
    HpReal r(x.precision());
    mpfr_acos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HpReal pow(const HpReal& x, const HpReal& y) {
    HpReal r(wider(x, y));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

HpReal pow(const HpReal& x, long n) {
    HpReal r(x.precision());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

HpReal pow(const HpReal& x, const BigRat& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return pow(x, q.get_num().get_si());
    if (x.sign() <= 0) throw Error(ErrorCode::DomainError, "fractional power of a non-positive number");
    return exp(log(x) * HpReal(q, x.precision()));
}

int agreeing_digits(const HpReal& a, const HpReal& b, int cap) {
    HpReal diff = abs(a - b);
    if (diff.is_zero()) return cap;
    HpReal scale = abs(b);
    if (scale.is_zero()) scale = HpReal(1, b.precision());
    HpReal ratio = diff / scale;
    mpfr_t l;
    mpfr_init2(l, 64);
    mpfr_log10(l, ratio.get(), MPFR_RNDN);
    const double lg = mpfr_get_d(l, MPFR_RNDN);
    mpfr_clear(l);
    const int d = static_cast<int>(std::floor(-lg));
    return std::min(cap, std::max(0, d));
}

const HpReal& HpSeq::at(long n) const {
    if (!has(n)) throw Error(ErrorCode::InvalidArgument, "HpSeq index " + std::to_string(n) + " out of range");
    return values[static_cast<std::size_t>(n - offset)];
}

}  // namespace seqexp::asympt
