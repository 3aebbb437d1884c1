#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqexp/asympt/hpreal.hpp"
#include "seqexp/exact/poly.hpp"

namespace seqexp::identify {

using asympt::HpContext;
using asympt::HpReal;

enum class IdentKind { Rational, DictionaryMultiple, Algebraic };
std::string to_string(IdentKind kind);

struct Identification {
    IdentKind kind = IdentKind::Rational;
    /// Multiplier tag for dictionary hits, "1" for plain rationals, empty for polynomials.
    std::string tag;
    exact::BigRat fraction;
    exact::Poly poly;
    int certified_digits = 0;
    /// Human-readable form, e.g. "13/768*sqrt(2)".
    std::string describe() const;
};

struct Multiplier {
    std::string tag;
    HpReal value;
};
using MultiplierDictionary = std::vector<Multiplier>;

/// {1, sqrt(2), sqrt(3), sqrt(5), pi, sqrt(pi), 1/pi, pi^2, 2^(1/3), 3^(1/3)}
MultiplierDictionary default_dictionary(const HpContext& ctx);

/// Decimal digits carried by x's precision.
int carried_digits(const HpReal& x);

/// Continued-fraction convergent p/q with q <= maxden and |x - p/q| < 10^-(digits-4).
/// `digits` defaults to the precision carried by x.
std::optional<exact::BigRat> identify_rational(const HpReal& x, const exact::BigInt& maxden,
                                               std::optional<int> digits = std::nullopt);

/// First multiplier m (dictionary order) with x/m identified as a rational.
std::optional<Identification> identify_with_multipliers(const HpReal& x, const MultiplierDictionary& dict,
                                                        const exact::BigInt& maxden,
                                                        std::optional<int> digits = std::nullopt);

/// Integer polynomial of least degree <= maxdeg vanishing at x, found by
/// lattice reduction with 10^(digits - 10) scaling. Returns nullopt when no
/// degree verifies; throws PrecisionTooLow if digits < 10 (maxdeg + 1) or x
/// carries fewer than `digits` digits.
std::optional<exact::Poly> min_poly(const HpReal& x, int maxdeg, int digits);

}  // namespace seqexp::identify
