#include "seqexp/asympt/roots.hpp"

#include <string>
#include <vector>

#include "seqexp/detail/expr_parser.hpp"
#include "seqexp/error.hpp"

namespace seqexp::asympt {

using exact::Poly;

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto [q, r] = exact::divmod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

long variations(const std::vector<Poly>& chain, const BigRat& x) {
    long count = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

Poly squarefree_part(const Poly& p) {
    const Poly g = exact::gcd(p, p.derivative());
    return g.degree() <= 0 ? p : exact::divmod(p, g).first;
}

}  // namespace

long sturm_count(const Poly& p, const BigRat& a, const BigRat& b) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no isolated roots");
    const auto chain = sturm_chain(squarefree_part(p));
    return variations(chain, a) - variations(chain, b);
}

RootIsolation poly_smallest_positive_root(const Poly& p, int digits) {
    if (p.is_zero() || p.degree() < 1) throw Error(ErrorCode::NoPositiveRoot, "polynomial has no roots");
    if (digits < 1) throw Error(ErrorCode::InvalidArgument, "digits must be positive");
    Poly q = squarefree_part(p);
    if (q.valuation() > 0) q = q.drop_low(static_cast<std::size_t>(q.valuation()));
    if (q.degree() < 1) throw Error(ErrorCode::NoPositiveRoot, "only root is zero");
    const auto chain = sturm_chain(q);

    // Cauchy bound on root magnitudes
    BigRat bound = 0;
    for (long i = 0; i < q.degree(); ++i) {
        BigRat r = abs(q[static_cast<std::size_t>(i)] / q.leading());
        if (r > bound) bound = r;
    }
    BigRat lo = 0, hi = bound + 1;
    const long v0 = variations(chain, lo);
    if (v0 - variations(chain, hi) == 0) throw Error(ErrorCode::NoPositiveRoot, "no positive real root");

    // shrink (lo, hi] until it holds exactly one root; (0, lo] stays root-free
    while (v0 - variations(chain, hi) > 1) {
        BigRat mid = (lo + hi) / 2;
        if (v0 - variations(chain, mid) >= 1) hi = mid; else lo = mid;
    }

    const mpfr_prec_t bits = bits_for_digits(digits);
    if (q.eval(hi) == 0) return {HpReal(hi, bits), hi, hi};
    // one simple root in (lo, hi] and q(0) != 0, so q changes sign across it
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 3));
    int sign_hi = sgn(q.eval(hi));
    while ((hi - lo) * scale > hi) {
        BigRat mid = (lo + hi) / 2;
        const int s = sgn(q.eval(mid));
        if (s == 0) return {HpReal(mid, bits), mid, mid};
        if (s == sign_hi) hi = mid; else lo = mid;
    }
    return {HpReal((lo + hi) / 2, bits), lo, hi};
}

HpReal hp_eval_builtin(std::string_view name, const HpReal& x, const HpContext& ctx) {
    const HpReal v = x.with_precision(ctx.bits());
    if (name == "pi") return ctx.pi();
    if (name == "exp") return exp(v);
    if (name == "log") {
        if (v.sign() <= 0) throw Error(ErrorCode::DomainError, "log of non-positive value");
        return log(v);
    }
    if (name == "sqrt") {
        if (v.sign() < 0) throw Error(ErrorCode::DomainError, "sqrt of negative value");
        return sqrt(v);
    }
    if (name == "cos") return cos(v);
    if (name == "arccos" || name == "acos") return acos(v);
    throw Error(ErrorCode::InvalidArgument, "unknown function '" + std::string(name) + "'");
}

namespace {

struct HpAlgebra {
    using Value = HpReal;
    const HpContext& ctx;

    bool is_function(const std::string& name) const {
        return name == "exp" || name == "log" || name == "sqrt" || name == "cos" || name == "arccos" || name == "acos";
    }
    HpReal number(const BigRat& c) const { return ctx.make(c); }
    HpReal symbol(const std::string& name) const {
        if (name == "pi") return ctx.pi();
        throw Error(ErrorCode::InvalidArgument, "unknown symbol '" + name + "'");
    }
    HpReal call(const std::string& name, const HpReal& x) const { return hp_eval_builtin(name, x, ctx); }
    HpReal add(const HpReal& a, const HpReal& b) const { return a + b; }
    HpReal sub(const HpReal& a, const HpReal& b) const { return a - b; }
    HpReal mul(const HpReal& a, const HpReal& b) const { return a * b; }
    HpReal neg(const HpReal& a) const { return -a; }
    HpReal div(const HpReal& a, const HpReal& b) const {
        if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in expression");
        return a / b;
    }
    HpReal pow(const HpReal& a, const HpReal& e) const {
        const BigRat q = e.to_rational();
        if (exact::is_integral(q) && abs(q.get_num()) < 1000000) return asympt::pow(a, q.get_num().get_si());
        if (a.sign() <= 0) throw Error(ErrorCode::DomainError, "non-integer power of a non-positive value");
        return asympt::pow(a, e);
    }
};

}  // namespace

HpReal hp_eval(std::string_view expr, const HpContext& ctx) {
    HpAlgebra alg{ctx};
    return detail::ExprParser<HpAlgebra>(expr, alg).parse();
}

}  // namespace seqexp::asympt
