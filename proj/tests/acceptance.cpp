// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "seqexp/asympt/amplitude.hpp"
#include "seqexp/asympt/analysis.hpp"
#include "seqexp/asympt/bst.hpp"
#include "seqexp/asympt/roots.hpp"
#include "seqexp/error.hpp"
#include "seqexp/guess/guess.hpp"
#include "seqexp/identify/identify.hpp"
#include "seqexp/io/bfile.hpp"
#include "seqexp/seqgen/enumerate.hpp"
#include "seqexp/seqgen/expand.hpp"
#include "seqexp/seqgen/generators.hpp"

#ifndef SEQEXP_TEST_DATA
#define SEQEXP_TEST_DATA "tests/data"
#endif

using namespace seqexp;
using asympt::HpContext;
using asympt::HpReal;
using asympt::HpSeq;
using exact::BigInt;
using exact::BigRat;
using exact::Poly;
using seqgen::Sequence;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const HpReal& x, int digits = 20) { return x.to_string(digits); }

Sequence load_a202062() {
    std::ifstream in(std::string(SEQEXP_TEST_DATA) + "/A202062.bfile");
    std::stringstream ss;
    ss << in.rdbuf();
    return io::parse_bfile(ss.str());
}

guess::PRecurrence printed_recurrence() {
    return guess::PRecurrence{{Poly{0, 1, 2}, Poly{60, 45, 6}, Poly{-480, -263, -34}, Poly{984, 421, 44},
                               Poly{-684, -235, -20}, Poly{120, 31, 2}}};
}

// Shared heavy data, built once.
const Sequence& lconvex_2000() {
    static const Sequence s = seqgen::gen_lconvex_area(2000);
    return s;
}

const Sequence& u_5000() {
    static const Sequence s = seqgen::expand_prec(printed_recurrence(), load_a202062().prefix(5), 5001);
    return s;
}

const HpContext ctx250{250};

HpReal mu_250() {
    const auto root = asympt::poly_smallest_positive_root(Poly{1, -8, 5, 1}, 250);
    return ctx250.make(1L) / root.value;
}

const asympt::PowerLawModel& amplitude_model() {
    static const asympt::PowerLawModel m = [] {
        asympt::AmplitudeOptions opts;
        opts.shifts = {10, 100};
        return asympt::amplitude_fit(u_5000(), mu_250(), BigRat(9, 2), 20, ctx250, opts);
    }();
    return m;
}

Outcome c1() {
    const Sequence a = seqgen::gen_lconvex_area(5);
    const Sequence p = seqgen::gen_lconvex_perimeter(4);
    const Sequence u = seqgen::enum_ascent_avoiding(seqgen::Pattern::parse("201"), 4);
    const bool ok = a == seqgen::make_sequence(0, {1, 1, 2, 6, 15}) && p == seqgen::make_sequence(0, {1, 2, 7, 24}) &&
                    u == seqgen::make_sequence(0, {1, 1, 2, 5, 15});
    return {ok, "area (1,1,2,6,15), perimeter (1,2,7,24), 201-avoiding (1,1,2,5,15)"};
}

Outcome c2() {
    const Sequence area = seqgen::gen_lconvex_area(10);
    const Sequence brute = seqgen::enum_lconvex_bruteforce(9);
    for (long n = 1; n <= 9; ++n) {
        if (brute.at(n) != area.at(n)) return {false, "L-convex mismatch at area " + std::to_string(n)};
    }
    const Sequence stack = seqgen::gen_stack_area(20);
    const Sequence sbrute = seqgen::enum_stack_bruteforce(20);
    for (long n = 1; n <= 20; ++n) {
        if (sbrute.at(n) != stack.at(n)) return {false, "stack mismatch at area " + std::to_string(n)};
    }
    const Sequence p012 = seqgen::enum_ascent_avoiding(seqgen::Pattern::parse("012"), 12);
    const Sequence p102 = seqgen::enum_ascent_avoiding(seqgen::Pattern::parse("102"), 12);
    const Sequence p101 = seqgen::enum_ascent_avoiding(seqgen::Pattern::parse("101"), 12);
    BigInt catalan = 1;
    for (long n = 1; n <= 12; ++n) {
        BigInt two = 1, three = 1;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
        mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(n - 1));
        catalan = catalan * 2 * (2 * n - 1) / (n + 1);
        if (p012.at(n) != two) return {false, "012 mismatch at " + std::to_string(n)};
        if (p102.at(n) != (three + 1) / 2) return {false, "102 mismatch at " + std::to_string(n)};
        if (p101.at(n) != catalan) return {false, "101 mismatch at " + std::to_string(n)};
    }
    return {true, "L-convex 1..9, stack 1..20, patterns 012/102/101 up to length 12"};
}

Outcome c3() {
    const Sequence all = load_a202062();
    if (all.size() != 28) return {false, "fixture has " + std::to_string(all.size()) + " terms"};
    guess::GuessOptions opts;
    opts.margin = 2;
    const auto rec = guess::guess_prec(all.prefix(24), 5, 2, opts);
    if (!rec) return {false, "no recurrence found"};
    if (!(*rec == printed_recurrence())) return {false, "got " + rec->to_string()};
    const Sequence predicted = seqgen::expand_prec(*rec, all.prefix(24), 28);
    if (!(predicted == all)) return {false, "prediction of terms 24..27 differs"};
    return {true, "recurrence matches all six printed coefficients; terms 24..27 predicted exactly"};
}

Outcome c4() {
    const Poly x{0, 1};
    const Poly xm1{-1, 1};
    const Poly p3 = Poly{-2} * x * x * Poly{1, -8, 5, 1} * Poly{15, -36, 48, -30, 4} * xm1 * xm1;
    const Poly p2 = Poly{-3} * x * xm1 * Poly{-85, 870, -2843, 4758, -4767, 2734, -652, -30, 12};
    const Poly p1{-420, 4350, -16620, 32436, -38106, 28884, -13278, 2754, 30, -24};
    const Poly p0 = Poly{30} * Poly{-2, 3} * Poly{-7, 24, -28, 19, -10, 3};
    const guess::LinODE printed{{p0, p1, p2, p3}};
    const Sequence terms = u_5000().prefix(2000);
    if (guess::ode_residual(printed, terms)) return {false, "printed ODE leaves a nonzero coefficient"};
    const guess::LinODE own = guess::prec_to_ode(printed_recurrence(), terms.prefix(5));
    if (guess::ode_residual(own, terms)) return {false, "derived ODE leaves a nonzero coefficient"};
    return {true, "printed ODE and derived order-" + std::to_string(own.order()) + " ODE both annihilate 2000 terms"};
}

Outcome c5() {
    const Sequence u = load_a202062();
    // 12 x^3 y_1 = (x^4 + 26x^3 - 45x^2 + 18x + 1) / (x - 1)
    const auto y1 = seqgen::expand_rational(Poly{1, 18, -45, 26, 1}, Poly{-1, 1}, 400);
    const auto y2_of = [&](const Sequence& s, std::size_t n) {
        seqgen::RatSequence y{0, {}};
        for (std::size_t k = 0; k < n; ++k) {
            BigRat v = y1.at(static_cast<long>(k));
            v = -v;
            if (k >= 3) v += BigRat(12) * BigRat(s.at(static_cast<long>(k) - 3));
            y.terms.push_back(v);
        }
        return y;
    };
    // 24 terms fix the recurrence, which then supplies the series
    guess::GuessOptions opts;
    opts.margin = 2;
    const auto rec = guess::guess_prec(u.prefix(24), 5, 2, opts);
    if (!rec) return {false, "recurrence not found from 24 terms"};
    const Sequence longer = seqgen::expand_prec(*rec, u.prefix(24), 260);
    const auto P = guess::guess_algeq(y2_of(longer, 200), 12, 3);
    if (!P) return {false, "no algebraic equation found"};
    const Poly xm1{-1, 1};
    const Poly c3 = Poly{4} * xm1 * xm1 * xm1;
    const Poly c1 = Poly{-3} * xm1 * Poly{1, -1, 1} * Poly{1, 229, 270, -1695, 1430, -235, 1};
    const Poly c0{1, -522, -8955, 37950, -70998, 131562, -253239, 316290, -218058, 80090, -14631, 510, 1};
    const guess::AlgEq printed = guess::AlgEq{{c0, c1, Poly{}, c3}}.normalized();
    if (!(*P == printed)) return {false, "got " + P->to_string()};
    if (guess::algeq_residual(*P, y2_of(longer, 200))) return {false, "residual nonzero on 200 terms"};
    return {true, "cubic recovered exactly (content 1), residual zero through 200 terms"};
}

Outcome c6() {
    const HpContext ctx{60};
    const auto root = asympt::poly_smallest_positive_root(Poly{1, -8, 5, 1}, 60);
    const HpReal mu = ctx.make(1L) / root.value;
    const HpReal closed = ctx.make(BigRat(14, 3)) *
                              asympt::hp_eval_builtin("cos", asympt::hp_eval_builtin("arccos", ctx.make(BigRat(13, 14)), ctx) / 3, ctx) +
                          ctx.make(BigRat(8, 3));
    // d significant digits: relative error below half a unit in the d-th digit
    const auto sig = [&](const HpReal& v, const char* quoted, int d) {
        const HpReal q = ctx.parse(quoted);
        return abs(v - q) / q < ctx.make(5L) * pow(ctx.make(10L), static_cast<long>(-d));
    };
    const int agree = asympt::agreeing_digits(mu, closed, 60);
    const bool ok = sig(root.value, "0.1370633395", 10) && sig(mu, "7.295896946", 10) && agree >= 40;
    return {ok, "root " + fmt(root.value, 15) + ", mu " + fmt(mu, 15) + ", closed form agrees to " + std::to_string(agree) + " digits"};
}

Outcome c7() {
    const auto& m = amplitude_model();
    const HpReal quoted = ctx250.parse("13.4299960869");
    const int agree = asympt::agreeing_digits(m.C, quoted, 250);
    const int stable = m.spread.is_zero() ? 250 : static_cast<int>(-asympt::log(m.spread / m.C).to_double() / std::log(10.0));
    return {agree >= 10 && stable >= 40,
            "C = " + fmt(m.C, 30) + " (" + std::to_string(agree) + " digits vs quoted), window-stable to " + std::to_string(stable) + " digits"};
}

Outcome c8() {
    const auto& m = amplitude_model();
    const HpReal sqrt_pi = asympt::sqrt(ctx250.pi());
    const HpReal A = m.C * 16 * sqrt_pi / 105;
    const HpReal B = A * A;
    const auto p = identify::min_poly(B.with_precision(asympt::bits_for_digits(60)), 3, 60);
    const bool poly_ok = p && *p == Poly{1, 17839, -1369, 1};
    // closed form for C
    const HpReal pi = ctx250.pi();
    const HpReal s9289 = asympt::sqrt(ctx250.make(9289L));
    const HpReal inner = asympt::acos(ctx250.make(255709L) * s9289 / 24653006);
    const HpReal cosv = asympt::cos(pi / 3 + inner / 3);
    const HpReal closed = ctx250.make(BigRat(35, 16)) *
                          asympt::sqrt(ctx250.make(4107L) / pi - ctx250.make(84L) / pi * s9289 * cosv);
    const int agree = asympt::agreeing_digits(closed, m.C, 250);
    return {poly_ok && agree >= 30,
            "min poly " + (p ? p->to_string("B") : std::string("none")) + "; closed-form C agrees to " + std::to_string(agree) + " digits"};
}

Outcome c9() {
    const HpContext ctx{100};
    const Sequence& l = lconvex_2000();
    const HpSeq lam = asympt::stretched_lambda(l, ctx);
    const auto fit = asympt::stretched_triple_fit(lam);
    const HpReal e1sq = fit.e1.back() * fit.e1.back();
    const HpReal e2 = fit.e2.back();

    const HpSeq sq = asympt::square_subsample(asympt::to_hpseq(l, ctx));
    const HpSeq t = asympt::elim_power(asympt::elim_power(asympt::ratios(sq), 1), 2);
    const HpReal intercept = t.back();
    const HpReal mu = asympt::exp(ctx.pi() * asympt::sqrt(ctx.make(BigRat(13, 6))));
    const auto pl = asympt::powerlaw_pipeline(sq, mu);
    const HpReal g2 = pl.g2_estimate.value;

    const bool ok = e1sq >= ctx.parse("2.16") && e1sq <= ctx.parse("2.17") && e2 >= ctx.parse("-1.6") &&
                    e2 <= ctx.parse("-1.4") && abs(intercept - ctx.parse("101.931")) < ctx.parse("0.5") &&
                    abs(intercept - mu) < ctx.parse("0.5") && abs(g2 + ctx.make(3L)) < ctx.parse("0.1");
    return {ok, "e1^2 = " + fmt(e1sq, 8) + ", e2 = " + fmt(e2, 8) + ", intercept = " + fmt(intercept, 9) +
                    " (exp(pi sqrt(13/6)) = " + fmt(mu, 9) + "), g2 = " + fmt(g2, 8) + " over " + std::to_string(sq.size()) + " square terms"};
}

Outcome c10() {
    const HpContext ctx{100};
    const Sequence& l = lconvex_2000();
    HpSeq c{1, {}};
    std::vector<HpReal> xs;
    for (long k = 1; k * k < l.end_index(); ++k) {
        const long n = k * k;
        const HpReal nn = ctx.make(n);
        const HpReal e = asympt::exp(ctx.pi() * asympt::sqrt(ctx.make(BigRat(13, 6)) * nn));
        c.values.push_back(ctx.make(l.at(n)) * nn * asympt::sqrt(nn) / e);
        xs.push_back(ctx.make(1L) / nn);
    }
    const auto res = asympt::bst_extrapolate(c, BigRat(1, 2), xs);
    const HpReal quoted = ctx.parse("0.0239385108214195");
    const int agree = asympt::agreeing_digits(res.value, quoted, 100);
    const auto id = identify::identify_with_multipliers(res.value, identify::default_dictionary(ctx), BigInt(100000), 16);
    const HpReal exact_c = ctx.make(BigRat(13, 768)) * asympt::sqrt(ctx.make(2L));
    const int agree_exact = asympt::agreeing_digits(res.value, exact_c, 100);
    const bool id_ok = id && id->tag == "sqrt(2)" && id->fraction == BigRat(13, 768);
    return {agree >= 10 && id_ok && agree_exact >= 15,
            "BST value " + fmt(res.value, 22) + " (depth " + std::to_string(res.depth) + ", " + std::to_string(agree_exact) +
                " digits vs 13*sqrt(2)/768), identified as " + (id ? id->describe() : std::string("nothing"))};
}

Outcome c11() {
    const HpContext ctx{60};
    const Sequence s = seqgen::gen_stack_area(2000);
    const auto ratio = [&](long n) {
        const HpReal nn = ctx.make(n);
        const HpReal model = asympt::exp(ctx.make(2L) * ctx.pi() * asympt::sqrt(nn / 3)) /
                             (ctx.make(8L) * asympt::pow(ctx.make(3L), BigRat(3, 4)) * asympt::pow(nn, BigRat(5, 4)));
        return ctx.make(s.at(n)) / model;
    };
    const HpReal r500 = ratio(500), r2000 = ratio(2000);
    const HpReal one = ctx.make(1L);
    const bool ok = abs(r2000 - one) < abs(r500 - one) && abs(r2000 - one) < ctx.parse("0.1");
    return {ok, "ratio at n=500: " + fmt(r500, 8) + ", at n=2000: " + fmt(r2000, 8)};
}

Outcome c12() {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> small(-9, 9), pos(1, 9);
    const HpContext ctx{100};
    const HpReal tol = pow(ctx.make(10L), -80L);
    std::set<std::string> failed;

    for (int trial = 0; trial < 10; ++trial) {
        // elim_power: p = 1 on s + a/n, p = 2 on s + b/n^2, and the chain on
        // s + a/n + b H2(n)/n with H2(n) = sum_{k<=n} 1/k^2 (p = 1 maps it to s + b/n^2)
        const BigRat s0(small(rng), pos(rng)), a(small(rng)), b(small(rng));
        HpSeq lin{1, {}}, quad{1, {}}, chain{1, {}};
        BigRat h2 = 0;
        for (long n = 1; n <= 30; ++n) {
            h2 += BigRat(1, n * n);
            lin.values.push_back(ctx.make(s0 + a / BigRat(n)));
            quad.values.push_back(ctx.make(s0 + b / BigRat(n * n)));
            chain.values.push_back(ctx.make(s0 + a / BigRat(n) + b * h2 / BigRat(n)));
        }
        for (const HpSeq& t : {asympt::elim_power(lin, 1), asympt::elim_power(quad, 2),
                               asympt::elim_power(asympt::elim_power(chain, 1), 2)}) {
            for (const auto& v : t.values) {
                if (abs(v - ctx.make(s0)) > tol) failed.insert("elim_power");
            }
        }

        // BST on s + c1 n^-1/2 + c2 n^-1 + c3 n^-3/2
        HpSeq bs{1, {}};
        const HpReal c1 = ctx.make(small(rng)), c2 = ctx.make(small(rng)), c3 = ctx.make(small(rng));
        for (long n = 1; n <= 12; ++n) {
            const HpReal r = asympt::sqrt(ctx.make(n));
            bs.values.push_back(ctx.make(s0) + c1 / r + c2 / (r * r) + c3 / (r * r * r));
        }
        const auto br = asympt::bst_extrapolate(bs, BigRat(1, 2));
        if (abs(br.value - ctx.make(s0)) > tol) failed.insert("bst");

        // triple fit on lambda_n = a + e2 log n/(pi sqrt n) + e3/(pi sqrt n)
        const HpReal fa = ctx.make(pos(rng)), fd = ctx.make(small(rng)), fc = ctx.make(small(rng));
        HpSeq lam{1, {}};
        for (long n = 1; n <= 15; ++n) {
            const HpReal sc = ctx.pi() * asympt::sqrt(ctx.make(n));
            lam.values.push_back(fa + fd * asympt::log(ctx.make(n)) / sc + fc / sc);
        }
        const auto tf = asympt::stretched_triple_fit(lam);
        for (long k = tf.e1.offset; k < tf.e1.end_index(); ++k) {
            if (abs(tf.e1.at(k) - fa) > tol || abs(tf.e2.at(k) - fd) > tol || abs(tf.e3.at(k) - fc) > tol) failed.insert("triple_fit");
        }

        // amplitude fit on C mu^n n^-g (1 + a1/n + a2/n^2 + a3/n^3)
        const HpReal C = ctx.make(BigRat(pos(rng), pos(rng))), mu = ctx.make(BigRat(pos(rng) + 1, pos(rng)));
        const BigRat g(pos(rng), 2);
        std::vector<HpReal> ak{ctx.make(small(rng)), ctx.make(small(rng)), ctx.make(small(rng))};
        HpSeq us{1, {}};
        for (long n = 1; n <= 60; ++n) {
            const HpReal nn = ctx.make(n);
            HpReal corr = ctx.make(1L) + ak[0] / nn + ak[1] / (nn * nn) + ak[2] / (nn * nn * nn);
            us.values.push_back(C * pow(mu, n) / pow(nn, g) * corr);
        }
        const auto am = asympt::amplitude_fit(us, mu, g, 3, ctx);
        if (abs(am.C - C) > tol) failed.insert("amplitude");
        for (int k = 0; k < 3; ++k) {
            if (abs(am.a[static_cast<std::size_t>(k)] - ak[static_cast<std::size_t>(k)]) > pow(ctx.make(10L), -70L)) failed.insert("amplitude_a");
        }
    }

    // min_poly on planted Eisenstein polynomials of degree 1..5
    const HpContext mctx{150};
    const long primes[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + trial % 5;
        const long P = primes[trial % 4];
        std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, BigInt(0));
        c[static_cast<std::size_t>(d)] = 1;
        long c0 = pos(rng);
        if (c0 % P == 0) ++c0;
        c[0] = -P * c0;
        for (int i = 1; i < d; ++i) c[static_cast<std::size_t>(i)] = P * small(rng);
        const Poly planted(c);
        const auto root = asympt::poly_smallest_positive_root(planted, 150);
        const auto found = identify::min_poly(root.value, 6, 140);
        if (!found || !(*found == planted.primitive_part())) failed.insert("min_poly(deg " + std::to_string(d) + ")");
    }
    std::string names;
    for (const auto& f : failed) names += " " + f;
    return {failed.empty(), failed.empty() ? "10 random trials per estimator, 10 planted algebraic numbers of degree 1..5"
                                           : "failures:" + names};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"generators exact", c1},
        {"oracle equivalence", c2},
        {"recurrence guessing", c3},
        {"ODE verification", c4},
        {"algebraic equation", c5},
        {"growth constant", c6},
        {"amplitude", c7},
        {"minimal polynomial", c8},
        {"L-convex stretched exponential", c9},
        {"L-convex constant", c10},
        {"stack asymptotics", c11},
        {"synthetic exactness", c12},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!out.pass) ++failures;
        std::printf("%s criterion %2zu (%s): %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
