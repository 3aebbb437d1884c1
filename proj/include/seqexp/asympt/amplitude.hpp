#pragma once

#include <vector>

#include "seqexp/asympt/hpreal.hpp"
#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::asympt {

/// u(n) ~ C mu^n n^g (1 + sum a_k / n^k)
struct PowerLawModel {
    HpReal mu;
    HpReal g;
    HpReal C;
    std::vector<HpReal> a;
    /// Largest |C - C'| over the shifted fit windows.
    HpReal spread;
    /// Infinity-norm condition number of the scaled fit matrix.
    HpReal condition;
    long last_index = 0;
};

struct AmplitudeOptions {
    /// Window shifts (towards smaller n) used for the stability estimate.
    std::vector<long> shifts{10};
    /// Reject the fit when the condition number exceeds 10^(digits - guard).
    int condition_guard = 10;
};

/// Fits s_n n^divisor / mu^n = C (1 + a_1/n + ... + a_K/n^K) on the last K+1
/// indices. The model exponent is g = -divisor.
PowerLawModel amplitude_fit(const seqgen::Sequence& s, const HpReal& mu, const BigRat& divisor, int K,
                            const HpContext& ctx, const AmplitudeOptions& opts = {});
PowerLawModel amplitude_fit(const HpSeq& s, const HpReal& mu, const BigRat& divisor, int K, const HpContext& ctx,
                            const AmplitudeOptions& opts = {});

/// Inverse by Gauss-Jordan with partial pivoting; SingularSystem on failure.
std::vector<std::vector<HpReal>> invert_matrix(std::vector<std::vector<HpReal>> a);

}  // namespace seqexp::asympt
