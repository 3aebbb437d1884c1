#include <doctest.h>

#include <random>

#include "seqexp/error.hpp"
#include "seqexp/exact/bigint.hpp"
#include "seqexp/exact/poly.hpp"
#include "seqexp/exact/series.hpp"

using namespace seqexp;
using namespace seqexp::exact;

namespace {

TruncSeries series(std::initializer_list<long> c, std::size_t order) {
    std::vector<BigRat> v(order, BigRat(0));
    std::size_t i = 0;
    for (long x : c) {
        if (i < order) v[i] = x;
        ++i;
    }
    return TruncSeries(std::move(v));
}

TruncSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant = false) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
    std::vector<BigRat> v(order);
    for (auto& x : v) {
        x = BigRat(num(rng), den(rng));
        x.canonicalize();
    }
    if (unit_constant && v[0] == 0) v[0] = 1;
    return TruncSeries(std::move(v));
}

}  // namespace

TEST_CASE("bigrat parsing and rendering") {
    CHECK(parse_bigrat("3/6") == BigRat(1, 2));
    CHECK(parse_bigrat("-0.125") == BigRat(-1, 8));
    CHECK(parse_bigrat("7") == BigRat(7));
    BigRat r(-4, 6);
    r.canonicalize();
    CHECK(to_string(r) == "-2/3");
    CHECK(to_string(parse_bigint("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_bigint("12a"), Error);
    CHECK(round_div(BigInt(7), BigInt(2)) == 4);
    CHECK(round_div(BigInt(-7), BigInt(2)) == -3);
    CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
}

TEST_CASE("bigrat addition matches a gcd-free cross-multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000), p(1, 1000);
    for (int i = 0; i < 200; ++i) {
        const long a = d(rng), b = p(rng), c = d(rng), e = p(rng);
        BigRat x(a, b), y(c, e);
        x.canonicalize();
        y.canonicalize();
        const BigRat sum = x + y;
        // (a e + c b) / (b e), compared by cross-multiplication
        CHECK(sum.get_num() * BigInt(b) * BigInt(e) == (BigInt(a) * e + BigInt(c) * b) * sum.get_den());
        CHECK(mpz_class(gcd(sum.get_num(), sum.get_den())) == 1);
        CHECK(sum.get_den() > 0);
    }
}

TEST_CASE("series examples") {
    CHECK(ps_add(series({1, 1}, 4), series({1, -1}, 4)) == series({2}, 4));
    CHECK(ps_mul(series({1, 1}, 5), series({1, -1}, 5)) == series({1, 0, -1}, 5));
    CHECK(ps_inv(series({1, -1}, 6)) == series({1, 1, 1, 1, 1, 1}, 6));
    CHECK(ps_inv(series({1}, 3)) == series({1}, 3));
    CHECK_THROWS_AS(ps_inv(series({0, 1}, 3)), Error);
    // (1-x)^2 / (2(1-x)^2 - 1)
    const auto p = ps_mul(ps_inv(series({1, -4, 2}, 5)), series({1, -2, 1}, 5));
    CHECK(p == series({1, 2, 7, 24, 82}, 5));
    CHECK(ps_add(series({1, 2, 3}, 3), series({1}, 2)).order() == 2);
}

TEST_CASE("q-Pochhammer") {
    CHECK(q_pochhammer(0, 5) == series({1}, 5));
    CHECK(q_pochhammer(1, 5) == series({1, -1}, 5));
    CHECK(q_pochhammer(2, 6) == series({1, -1, -1, 1}, 6));
    for (long n = 2; n <= 10; ++n) {
        TruncSeries prev = q_pochhammer(n - 1, 40);
        prev.multiply_one_minus_xk(static_cast<std::size_t>(n));
        CHECK(q_pochhammer(n, 40) == prev);
        CHECK(ps_mul(q_pochhammer(n, 40), ps_inv(q_pochhammer(n, 40))) == series({1}, 40));
    }
}

TEST_CASE("series ring laws on random inputs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_series(rng, 50), b = random_series(rng, 50), c = random_series(rng, 50);
        CHECK(ps_mul(a, b) == ps_mul(b, a));
        CHECK(ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c)));
        CHECK(ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c)));
        CHECK(ps_add(a, b) == ps_add(b, a));
        const auto u = random_series(rng, 30, true);
        CHECK(ps_inv(ps_inv(u)) == u);
    }
}

TEST_CASE("integer series division is exact or refused") {
    IntSeries a(std::vector<BigInt>{1, 0, 0, 0});
    CHECK(ps_inv(IntSeries(std::vector<BigInt>{1, -1, 0, 0})) == IntSeries(std::vector<BigInt>{1, 1, 1, 1}));
    CHECK_THROWS_AS(ps_inv(IntSeries(std::vector<BigInt>{2, 1, 0})), Error);
    a.divide_one_minus_xk(2);
    CHECK(a == IntSeries(std::vector<BigInt>{1, 0, 1, 0}));
}

TEST_CASE("polynomials") {
    const Poly p{1, 2, 1};  // (1 + x)^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigRat(2)) == 9);
    CHECK(p.derivative() == Poly{2, 2});
    CHECK(p.taylor_shift(BigRat(-1)) == Poly{0, 0, 1});
    const auto [q, r] = divmod(p, Poly{1, 1});
    CHECK(q == Poly{1, 1});
    CHECK(r.is_zero());
    CHECK(gcd(p, Poly{-1, 0, 1}) == Poly{1, 1});
    CHECK((Poly{2, 4} * BigRat(1, 2)) == Poly{1, 2});
    CHECK(Poly(std::vector<BigRat>{BigRat(1, 2), BigRat(-3, 4)}).primitive_part() == Poly{2, -3}.primitive_part());
    CHECK(Poly{-2, 0, 1}.to_string() == "x^2 - 2");
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly{0, 0, 3}.valuation() == 2);
}

TEST_CASE("polynomial expressions") {
    CHECK(parse_poly("2n^2 + n", "n") == Poly{0, 1, 2});
    CHECK(parse_poly("-(34n^2 + 263n + 480)", "n") == Poly{-480, -263, -34});
    CHECK(parse_poly("(x-1)^3") == Poly{-1, 3, -3, 1});
    CHECK(parse_poly("3x(x - 1)/2") == Poly(std::vector<BigRat>{0, BigRat(-3, 2), BigRat(3, 2)}));
    CHECK(parse_poly("-x^2") == Poly{0, 0, -1});
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("1/2 + 0.25x") == Poly(std::vector<BigRat>{BigRat(1, 2), BigRat(1, 4)}));
    CHECK_THROWS_AS(parse_poly("y + 1"), Error);
    CHECK_THROWS_AS(parse_poly("1/x"), Error);
    CHECK_THROWS_AS(parse_poly("x^(1/2)"), Error);
    CHECK_THROWS_AS(parse_poly("(x + 1"), Error);
    CHECK_THROWS_AS(parse_poly("x +"), Error);
}
