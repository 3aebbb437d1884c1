#pragma once

#include <string_view>

#include "seqexp/asympt/hpreal.hpp"
#include "seqexp/exact/poly.hpp"

namespace seqexp::asympt {

struct RootIsolation {
    HpReal value;
    /// Rational bracket (lo, hi] holding exactly one root, width below 10^-(digits+3) relative.
    BigRat lo;
    BigRat hi;
};

/// Smallest positive real root of p to `digits` significant digits.
/// Isolation uses a Sturm sequence and exact dyadic bisection.
RootIsolation poly_smallest_positive_root(const exact::Poly& p, int digits);

/// Number of distinct real roots of p in (a, b]; p must be nonzero.
long sturm_count(const exact::Poly& p, const BigRat& a, const BigRat& b);

/// exp, log, sqrt, cos, arccos (alias acos) or pi evaluated at ctx precision.
HpReal hp_eval_builtin(std::string_view name, const HpReal& x, const HpContext& ctx);

/// Evaluates an expression over numbers, pi and the builtins above, e.g.
/// "(14/3)cos(arccos(13/14)/3) + 8/3". Decimal literals are read exactly.
HpReal hp_eval(std::string_view expr, const HpContext& ctx);

}  // namespace seqexp::asympt
