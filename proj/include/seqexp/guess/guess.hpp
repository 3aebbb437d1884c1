#pragma once

#include <cstddef>
#include <optional>

#include "seqexp/guess/operators.hpp"
#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::guess {

struct GuessOptions {
    /// Equations beyond those needed to pin a one-dimensional nullspace.
    std::size_t margin = 4;
};

/// Smallest P-recurrence (by r + d, then r) with order <= rmax and degree <= dmax
/// that annihilates every supplied term. Throws InsufficientTerms when no
/// (r, d) in range can be fitted with the requested margin.
std::optional<PRecurrence> guess_prec(const seqgen::Sequence& terms, int rmax, int dmax,
                                      const GuessOptions& options = {});

/// Number of consecutive indices, starting at the first one, where the
/// recurrence evaluates to zero. Equal to size - order when fully satisfied.
std::size_t prec_residual(const PRecurrence& rec, const seqgen::Sequence& terms);

/// Homogeneous ODE for the generating function sum u(n) x^n of the solution
/// fixed by `init` (offset 0). Throws InconsistentInit if init violates rec.
LinODE prec_to_ode(const PRecurrence& rec, const seqgen::Sequence& init);

/// Exponent of the first nonzero coefficient of sum Q_i f^{(i)} where it is
/// determined by the truncation; nullopt when it vanishes throughout.
std::optional<long> ode_residual(const LinODE& ode, const seqgen::RatSequence& terms);
std::optional<long> ode_residual(const LinODE& ode, const seqgen::Sequence& terms);

/// Smallest algebraic equation (by dx + dy, then dy) with x-degree <= dxmax
/// and 1 <= y-degree <= dymax satisfied by the power series.
std::optional<AlgEq> guess_algeq(const seqgen::RatSequence& terms, int dxmax, int dymax,
                                 const GuessOptions& options = {});
std::optional<AlgEq> guess_algeq(const seqgen::Sequence& terms, int dxmax, int dymax,
                                 const GuessOptions& options = {});

/// Exponent of the first nonzero coefficient of P(x, y(x)), or nullopt.
std::optional<long> algeq_residual(const AlgEq& P, const seqgen::RatSequence& terms);
std::optional<long> algeq_residual(const AlgEq& P, const seqgen::Sequence& terms);

}  // namespace seqexp::guess
