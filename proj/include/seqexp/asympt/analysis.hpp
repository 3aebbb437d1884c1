#pragma once

#include <vector>

#include "seqexp/asympt/hpreal.hpp"
#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::asympt {

HpSeq to_hpseq(const seqgen::Sequence& s, const HpContext& ctx);

/// r_n = s_n / s_{n-1}; offset moves up by one.
HpSeq ratios(const HpSeq& s);

/// (n^p s_n - (n-1)^p s_{n-1}) / (n^p - (n-1)^p): maps s + a/n^p to s exactly.
/// p = 1 gives linear intercepts.
HpSeq elim_power(const HpSeq& s, int p);

/// Local slope of log s_n against log n from consecutive points (n >= 2).
HpSeq loglog_gradient(const HpSeq& s);

/// lambda_n = log(l_n) / (pi sqrt(n)) for n >= 1.
HpSeq stretched_lambda(const seqgen::Sequence& l, const HpContext& ctx);

struct TripleFit {
    HpSeq e1;  // estimates a
    HpSeq e2;  // estimates -delta
    HpSeq e3;  // estimates -log c
};

/// Solves lambda_n = e1 + e2 log(n)/(pi sqrt n) + e3/(pi sqrt n) on each
/// window n in {k-1, k, k+1}; results are indexed by k.
TripleFit stretched_triple_fit(const HpSeq& lambda);

/// l_{n^2} for n = 1, 2, ... while n^2 is available.
seqgen::Sequence square_subsample(const seqgen::Sequence& s);
HpSeq square_subsample(const HpSeq& s);

/// Last value and max - min spread over the final `window` values.
struct Estimate {
    HpReal value;
    HpReal spread;
};
Estimate tail_estimate(const HpSeq& s, std::size_t window = 10);

struct PowerLawDiagnostics {
    HpSeq ratios;
    HpSeq g;   // (r_n / mu - 1) n
    HpSeq g2;  // n g_n - (n-1) g_{n-1}
    Estimate g_estimate;
    Estimate g2_estimate;
};

/// Exponent estimators for s_n ~ D mu^n n^g with mu supplied.
PowerLawDiagnostics powerlaw_pipeline(const HpSeq& s, const HpReal& mu);

/// Dense solve with partial pivoting; throws SingularSystem on a zero pivot.
std::vector<HpReal> solve_linear(std::vector<std::vector<HpReal>> a, std::vector<HpReal> b);

}  // namespace seqexp::asympt
