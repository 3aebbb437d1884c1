#include "seqexp/identify/identify.hpp"

#include <cmath>

#include "seqexp/error.hpp"
#include "seqexp/identify/lll.hpp"

namespace seqexp::identify {

using exact::BigInt;
using exact::BigRat;
using exact::Poly;

std::string to_string(IdentKind kind) {
    switch (kind) {
        case IdentKind::Rational: return "rational";
        case IdentKind::DictionaryMultiple: return "dictionary-multiple";
        case IdentKind::Algebraic: return "algebraic";
    }
    return "unknown";
}

std::string Identification::describe() const {
    if (kind == IdentKind::Algebraic) return poly.to_string("x") + " = 0";
    if (tag.empty() || tag == "1") return exact::to_string(fraction);
    return exact::to_string(fraction) + "*" + tag;
}

MultiplierDictionary default_dictionary(const HpContext& ctx) {
    const HpReal pi = ctx.pi();
    const BigRat third(1, 3);
    return {
        {"1", ctx.make(1L)},
        {"sqrt(2)", sqrt(ctx.make(2L))},
        {"sqrt(3)", sqrt(ctx.make(3L))},
        {"sqrt(5)", sqrt(ctx.make(5L))},
        {"pi", pi},
        {"sqrt(pi)", sqrt(pi)},
        {"1/pi", ctx.make(1L) / pi},
        {"pi^2", pi * pi},
        {"2^(1/3)", pow(ctx.make(2L), third)},
        {"3^(1/3)", pow(ctx.make(3L), third)},
    };
}

int carried_digits(const HpReal& x) {
    const long usable = static_cast<long>(x.precision()) - 32;
    return usable <= 0 ? 1 : std::max(1, static_cast<int>(std::floor(static_cast<double>(usable) * std::log10(2.0))));
}

namespace {

// -log10 |a - b|, capped
int digits_of_agreement(const HpReal& a, const HpReal& b, int cap) {
    const HpReal d = abs(a - b);
    if (d.is_zero()) return cap;
    const double e = -log(d).to_double() / std::log(10.0);
    return std::min(cap, static_cast<int>(std::floor(e)));
}

HpReal ten_pow(long e, mpfr_prec_t bits) { return pow(HpReal(10, bits), e); }

}  // namespace

std::optional<BigRat> identify_rational(const HpReal& x, const BigInt& maxden, std::optional<int> digits) {
    if (!x.is_finite()) throw Error(ErrorCode::InvalidArgument, "cannot identify a non-finite value");
    const int D = digits.value_or(carried_digits(x));
    const mpfr_prec_t bits = x.precision();
    const HpReal tol = ten_pow(-(D - 4), bits);

    // convergents of the exact binary value
    BigRat r = x.to_rational();
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    while (true) {
        const BigInt a = exact::floor_div(r.get_num(), r.get_den());
        const BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > maxden) break;
        const BigRat cand(p2, q2);
        if (abs(x - HpReal(cand, bits)) < tol) return cand;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const BigRat frac = r - BigRat(a);
        if (frac == 0) break;
        r = 1 / frac;
    }
    return std::nullopt;
}

std::optional<Identification> identify_with_multipliers(const HpReal& x, const MultiplierDictionary& dict,
                                                        const BigInt& maxden, std::optional<int> digits) {
    const int D = digits.value_or(carried_digits(x));
    for (const auto& m : dict) {
        if (m.value.is_zero()) continue;
        const auto frac = identify_rational(x / m.value, maxden, D);
        if (!frac) continue;
        Identification id;
        id.kind = m.tag == "1" ? IdentKind::Rational : IdentKind::DictionaryMultiple;
        id.tag = m.tag;
        id.fraction = *frac;
        id.certified_digits = digits_of_agreement(HpReal(*frac, x.precision()) * m.value, x, D);
        return id;
    }
    return std::nullopt;
}

std::optional<Poly> min_poly(const HpReal& x, int maxdeg, int digits) {
    if (maxdeg < 1) throw Error(ErrorCode::InvalidArgument, "maxdeg must be at least 1");
    if (digits < 10 * (maxdeg + 1)) {
        throw Error(ErrorCode::PrecisionTooLow, "need at least " + std::to_string(10 * (maxdeg + 1)) + " digits for degree " + std::to_string(maxdeg));
    }
    if (carried_digits(x) < digits) {
        throw Error(ErrorCode::PrecisionTooLow, "value carries only " + std::to_string(carried_digits(x)) + " digits");
    }
    const mpfr_prec_t bits = x.precision();
    const long scale_exp = digits - 10;
    const HpReal scale = ten_pow(scale_exp, bits);
    const HpReal one(1, bits);
    const HpReal xabs = abs(x) > one ? abs(x) : one;
    const HpReal tol = ten_pow(-(digits / 2), bits);

    std::vector<HpReal> powers{one};
    for (int i = 1; i <= maxdeg; ++i) powers.push_back(powers.back() * x);

    for (int d = 1; d <= maxdeg; ++d) {
        IntBasis basis;
        for (int i = 0; i <= d; ++i) {
            std::vector<BigInt> row(static_cast<std::size_t>(d) + 2, BigInt(0));
            row[static_cast<std::size_t>(i)] = 1;
            row.back() = (powers[static_cast<std::size_t>(i)] * scale).round();
            basis.push_back(std::move(row));
        }
        const IntBasis reduced = lll_reduce(std::move(basis));
        // spurious relations have coefficients near 10^(scale_exp / (d + 1))
        const double max_log_norm = static_cast<double>(scale_exp) / (d + 1) - 3.0;
        for (const auto& row : reduced) {
            std::vector<BigInt> c(row.begin(), row.end() - 1);
            Poly p(c);
            if (p.degree() < 1) continue;
            p = p.primitive_part();
            BigInt norm2 = 0;
            for (const auto& v : p.integer_coeffs()) norm2 += v * v;
            const HpReal norm = sqrt(HpReal(norm2, bits));
            if (log(norm).to_double() / std::log(10.0) > max_log_norm) continue;
            HpReal val(0, bits);
            for (std::size_t i = p.coeffs().size(); i-- > 0;) val = val * x + HpReal(p.coeffs()[i], bits);
            if (abs(val) < tol * norm * pow(xabs, p.degree())) return p;
        }
    }
    return std::nullopt;
}

}  // namespace seqexp::identify
