#include <doctest.h>

#include "seqexp/asympt/amplitude.hpp"
#include "seqexp/asympt/analysis.hpp"
#include "seqexp/asympt/bst.hpp"
#include "seqexp/asympt/roots.hpp"
#include "seqexp/error.hpp"
#include "seqexp/seqgen/generators.hpp"

using namespace seqexp;
using namespace seqexp::asympt;
using exact::BigRat;
using exact::Poly;

namespace {

const HpContext ctx{60};
const HpReal tiny = pow(ctx.make(10L), -50L);

bool close(const HpReal& a, const HpReal& b, const HpReal& tol = tiny) { return abs(a - b) <= tol; }

HpSeq make(long offset, long count, auto&& f) {
    HpSeq s{offset, {}};
    for (long n = offset; n < offset + count; ++n) s.values.push_back(f(n));
    return s;
}

}  // namespace

TEST_CASE("ratios") {
    const HpSeq c = make(0, 5, [](long) { return ctx.make(7L); });
    for (const auto& v : ratios(c).values) CHECK(v == ctx.make(1L));
    const HpSeq p = make(0, 8, [](long n) { return pow(ctx.make(2L), n); });
    const HpSeq r = ratios(p);
    CHECK(r.offset == 1);
    for (const auto& v : r.values) CHECK(v == ctx.make(2L));
    CHECK_THROWS_AS(ratios(make(0, 3, [](long n) { return ctx.make(n); })), Error);
}

TEST_CASE("elim_power") {
    const HpSeq s = make(1, 10, [](long n) { return ctx.make(BigRat(5) + BigRat(3, n)); });
    for (const auto& v : elim_power(s, 1).values) CHECK(close(v, ctx.make(5L)));
    const HpSeq c = make(1, 6, [](long) { return ctx.make(5L); });
    for (int p = 1; p <= 3; ++p)
        for (const auto& v : elim_power(c, p).values) CHECK(close(v, ctx.make(5L)));
    CHECK_THROWS_AS(elim_power(c, 0), Error);
}

TEST_CASE("log-log gradient") {
    const HpSeq s = make(1, 10, [](long n) { return ctx.make(1L) / sqrt(ctx.make(n)); });
    for (const auto& v : loglog_gradient(s).values) CHECK(close(v, ctx.make(BigRat(-1, 2))));
    const HpSeq c = make(1, 5, [](long) { return ctx.make(3L); });
    for (const auto& v : loglog_gradient(c).values) CHECK(v.is_zero());
    CHECK_THROWS_AS(loglog_gradient(make(1, 4, [](long n) { return ctx.make(n - 2); })), Error);
}

TEST_CASE("L-convex ratio diagnostics") {
    const auto l = seqgen::gen_lconvex_area(2000);
    const HpSeq r = ratios(to_hpseq(l, ctx));
    HpSeq rm1{2, {}};
    for (long n = 2; n < r.end_index(); ++n) rm1.values.push_back(r.at(n) - ctx.make(1L));
    const HpSeq grad = loglog_gradient(rm1);
    CHECK(grad.back().to_double() == doctest::Approx(-0.5).epsilon(0.05));
    CHECK(grad.back().to_double() > grad.at(200).to_double() - 0.02);  // trending towards -1/2
}

TEST_CASE("stretched triple fit recovers a planted model") {
    // a = 2, delta = 1, c = e
    const HpSeq lam = make(1, 12, [](long n) {
        const HpReal sc = ctx.pi() * sqrt(ctx.make(n));
        return ctx.make(2L) - log(ctx.make(n)) / sc - ctx.make(1L) / sc;
    });
    const auto fit = stretched_triple_fit(lam);
    for (long k = fit.e1.offset; k < fit.e1.end_index(); ++k) {
        CHECK(close(fit.e1.at(k), ctx.make(2L)));
        CHECK(close(fit.e2.at(k), ctx.make(-1L)));
        CHECK(close(fit.e3.at(k), ctx.make(-1L)));
    }
    const HpSeq pure = make(1, 8, [](long n) { return ctx.make(BigRat(3, 2)) * log(ctx.make(n)) / (ctx.pi() * sqrt(ctx.make(n))); });
    for (const auto& v : stretched_triple_fit(pure).e1.values) CHECK(close(v, ctx.make(0L)));
    CHECK_THROWS_AS(stretched_triple_fit(make(1, 2, [](long) { return ctx.make(1L); })), Error);
}

TEST_CASE("square subsample") {
    const seqgen::Sequence id = [] {
        seqgen::Sequence s{0, {}};
        for (long n = 0; n < 30; ++n) s.terms.push_back(n);
        return s;
    }();
    const auto sq = square_subsample(id);
    CHECK(sq.offset == 1);
    CHECK(sq.terms == std::vector<exact::BigInt>{1, 4, 9, 16, 25});
    CHECK(square_subsample(seqgen::gen_lconvex_area(2000)).size() == 44);
    CHECK(square_subsample(to_hpseq(id, ctx)).values.back() == ctx.make(25L));
}

TEST_CASE("power-law pipeline") {
    const HpReal mu = ctx.make(BigRat(7, 2));
    const HpSeq s = make(1, 60, [&](long n) { return pow(mu, n) / pow(ctx.make(n), 3L); });
    const auto d = powerlaw_pipeline(s, mu);
    CHECK(d.g2.back().to_double() == doctest::Approx(-3).epsilon(0.01));
    const HpSeq flat = make(1, 30, [&](long n) { return pow(mu, n); });
    CHECK(powerlaw_pipeline(flat, mu).g_estimate.value.to_double() == doctest::Approx(0.0));
    CHECK_THROWS_AS(powerlaw_pipeline(flat, ctx.make(0L)), Error);
}

TEST_CASE("Bulirsch-Stoer extrapolation") {
    const auto c = bst_extrapolate(make(1, 6, [](long) { return ctx.make(4L); }), BigRat(1, 2));
    CHECK(c.value == ctx.make(4L));
    CHECK(c.spread.is_zero());
    const auto r = bst_extrapolate(make(1, 12, [](long n) { return ctx.make(1L) + ctx.make(1L) / sqrt(ctx.make(n)); }), BigRat(1, 2));
    CHECK(close(r.value, ctx.make(1L)));
    // three correction terms in n^{-1/2}: settled by column 6
    const HpSeq three = make(1, 10, [](long n) {
        const HpReal q = sqrt(ctx.make(n));
        return ctx.make(2L) + ctx.make(3L) / q - ctx.make(5L) / (q * q) + ctx.make(7L) / (q * q * q);
    });
    const auto tab = bst_tableau(three, BigRat(1, 2));
    for (const auto& v : tab[6]) CHECK(close(v, ctx.make(2L), pow(ctx.make(10L), -40L)));
    // s_n = n with w = 1 makes the first-column factor vanish
    CHECK_THROWS_AS(bst_extrapolate(make(1, 5, [](long n) { return ctx.make(n); }), BigRat(1)), Error);
    CHECK_THROWS_AS(bst_extrapolate(make(1, 3, [](long n) { return ctx.make(n); }), BigRat(1)), Error);
}

TEST_CASE("amplitude fit") {
    const HpReal mu = ctx.make(3L);
    // C = 3, a_1 = 1, g = -2
    const HpSeq s = make(1, 20, [&](long n) {
        const HpReal nn = ctx.make(n);
        return ctx.make(3L) * pow(mu, n) / (nn * nn) * (ctx.make(1L) + ctx.make(1L) / nn);
    });
    const auto m = amplitude_fit(s, mu, BigRat(2), 1, ctx);
    CHECK(close(m.C, ctx.make(3L)));
    CHECK(close(m.a[0], ctx.make(1L)));
    CHECK(m.g == ctx.make(-2L));
    const HpSeq pure = make(1, 15, [&](long n) { return ctx.make(5L) * pow(mu, n); });
    CHECK(close(amplitude_fit(pure, mu, BigRat(0), 0, ctx).C, ctx.make(5L)));
    const HpContext low{20};
    const HpSeq wide = make(1, 40, [&](long n) { return low.make(n); });
    CHECK_THROWS_AS(amplitude_fit(wide, low.make(1L), BigRat(0), 30, low), Error);
}

TEST_CASE("smallest positive root") {
    const auto one = poly_smallest_positive_root(Poly{-1, 1}, 30);
    CHECK(close(one.value, ctx.make(1L)));
    const Poly cubic{1, -8, 5, 1};
    const auto r = poly_smallest_positive_root(cubic, 50);
    CHECK(r.value.to_string(10) == "0.1370633395");
    CHECK(close(r.value, ctx.parse("0.13706333954272467821"), pow(ctx.make(10L), -19L)));
    CHECK(sgn(cubic.eval(r.lo)) * sgn(cubic.eval(r.hi)) <= 0);
    const HpReal val = ctx.make(1L) - ctx.make(8L) * r.value + ctx.make(5L) * r.value * r.value + r.value * r.value * r.value;
    CHECK(abs(val) < pow(ctx.make(10L), -48L));
    CHECK((ctx.make(1L) / r.value).to_string(10) == "7.295896943");
    CHECK_THROWS_AS(poly_smallest_positive_root(Poly{1, 1}, 10), Error);
    CHECK_THROWS_AS(poly_smallest_positive_root(Poly{1, 0, 1}, 10), Error);
    // repeated and zero roots are handled
    const auto rep = poly_smallest_positive_root(Poly{0, 4, -4, 1}, 20);  // x (x - 2)^2
    CHECK(close(rep.value, ctx.make(2L), pow(ctx.make(10L), -18L)));
    CHECK(sturm_count(cubic, BigRat(0), BigRat(10)) == 2);
}

TEST_CASE("built-in functions") {
    CHECK(hp_eval_builtin("exp", ctx.make(0L), ctx) == ctx.make(1L));
    CHECK(close(hp_eval_builtin("cos", ctx.pi() / 3, ctx), ctx.make(BigRat(1, 2))));
    CHECK(close(hp_eval_builtin("pi", ctx.make(0L), ctx), ctx.pi()));
    const HpReal mu = ctx.make(BigRat(14, 3)) * hp_eval_builtin("cos", hp_eval_builtin("arccos", ctx.make(BigRat(13, 14)), ctx) / 3, ctx) +
                      ctx.make(BigRat(8, 3));
    const auto root = poly_smallest_positive_root(Poly{1, -8, 5, 1}, 60);
    CHECK(agreeing_digits(mu, ctx.make(1L) / root.value) >= 40);
    CHECK_THROWS_AS(hp_eval_builtin("log", ctx.make(-1L), ctx), Error);
    CHECK_THROWS_AS(hp_eval_builtin("sqrt", ctx.make(-1L), ctx), Error);
    CHECK_THROWS_AS(hp_eval_builtin("arccos", ctx.make(2L), ctx), Error);
    CHECK_THROWS_AS(hp_eval_builtin("tan", ctx.make(2L), ctx), Error);
}

TEST_CASE("HpReal rendering and parsing") {
    CHECK(ctx.parse("1.25e-3").to_string(5) == "0.00125");
    CHECK(ctx.make(BigRat(-1, 4)).to_string() == "-0.25");
    CHECK(ctx.make(100L).to_string() == "100");
    CHECK(agreeing_digits(ctx.parse("3.14159"), ctx.pi()) == 6);
}

TEST_CASE("expression evaluation") {
    const auto root = poly_smallest_positive_root(Poly{1, -8, 5, 1}, 60);
    CHECK(agreeing_digits(hp_eval("(14/3)cos(arccos(13/14)/3) + 8/3", ctx), ctx.make(1L) / root.value) >= 40);
    CHECK(hp_eval("2^10", ctx) == ctx.make(1024L));
    CHECK(hp_eval("-2^2", ctx) == ctx.make(-4L));
    CHECK(close(hp_eval("8^(1/3)", ctx), ctx.make(2L)));
    CHECK(close(hp_eval("exp(pi*sqrt(13/6))", ctx), exp(ctx.pi() * sqrt(ctx.make(BigRat(13, 6))))));
    CHECK(close(hp_eval("0.125", ctx), ctx.make(BigRat(1, 8))));
    CHECK_THROWS_AS(hp_eval("1/0", ctx), Error);
    CHECK_THROWS_AS(hp_eval("e", ctx), Error);
    CHECK_THROWS_AS(hp_eval("(-8)^(1/3)", ctx), Error);
}
