#pragma once

#include <string>
#include <vector>

#include "seqexp/exact/poly.hpp"
#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::guess {

using exact::BigInt;
using exact::BigRat;
using exact::Poly;

/// sum_{j=0..r} p_j(n) * u(n + j) = 0. coeffs[j] is p_j as a polynomial in n.
struct PRecurrence {
    std::vector<Poly> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    /// Highest degree in n over all coefficients.
    long degree() const;
    /// Clears denominators, removes the integer content and makes the leading
    /// coefficient of p_r positive.
    PRecurrence normalized() const;
    bool is_normalized() const;
    /// sum_j p_j(n) u(n+j) for the index n; all of u(n..n+r) must be present.
    BigInt apply(const seqgen::Sequence& u, long n) const;

    std::string to_string() const;
    friend bool operator==(const PRecurrence&, const PRecurrence&) = default;
};

/// P(x, y) = sum_j coeffs[j](x) * y^j.
struct AlgEq {
    std::vector<Poly> coeffs;

    int y_degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long x_degree() const;
    /// Content 1, y-factors removed, leading x-coefficient of the top y-coefficient positive.
    AlgEq normalized() const;
    bool is_normalized() const;
    /// dP/dy
    AlgEq y_derivative() const;

    std::string to_string() const;
    friend bool operator==(const AlgEq&, const AlgEq&) = default;
};

/// sum_{i=0..m} Q_i(x) f^{(i)}(x) = 0. coeffs[i] is Q_i.
struct LinODE {
    std::vector<Poly> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    long degree() const;
    LinODE normalized() const;

    std::string to_string() const;
    friend bool operator==(const LinODE&, const LinODE&) = default;
};

/// Scales a family of polynomials to coprime integer coefficients, with the
/// leading coefficient of `family[lead]` positive. Zero entries stay zero.
std::vector<Poly> normalize_family(const std::vector<Poly>& family, std::size_t lead);

/// True when a and b are equal up to a nonzero rational factor.
bool proportional(const std::vector<Poly>& a, const std::vector<Poly>& b);

}  // namespace seqexp::guess
