#include "seqexp/exact/poly.hpp"

#include <sstream>

#include "seqexp/detail/expr_parser.hpp"
#include "seqexp/error.hpp"

namespace seqexp::exact {

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly::Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const std::vector<BigInt>& coeffs) {
    coeffs_.reserve(coeffs.size());
    for (const auto& c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::constant(const BigRat& c) { return Poly(std::vector<BigRat>{c}); }

Poly Poly::monomial(const BigRat& c, std::size_t degree) {
    std::vector<BigRat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat Poly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

long Poly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return static_cast<long>(i);
    }
    return -1;
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt Poly::eval_integer(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (it->get_den() != 1) throw Error(ErrorCode::NonIntegral, "eval_integer on a non-integral polynomial");
        acc = acc * x + it->get_num();
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::taylor_shift(const BigRat& shift) const {
    // Horner in the shifted variable.
    Poly acc;
    const Poly lin(std::vector<BigRat>{shift, BigRat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly::constant(*it);
    return acc;
}

Poly Poly::drop_low(std::size_t k) const {
    if (k >= coeffs_.size()) return {};
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs_[i] != 0) throw Error(ErrorCode::InvalidArgument, "drop_low: x^k does not divide polynomial");
    }
    return Poly(std::vector<BigRat>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

bool Poly::is_integral() const {
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

BigRat Poly::content() const {
    if (is_zero()) return 0;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return {};
    BigRat c = content();
    if (leading() < 0) c = -c;
    Poly p = *this;
    p *= BigRat(1) / c;
    return p;
}

std::vector<BigInt> Poly::integer_coeffs() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) throw Error(ErrorCode::NonIntegral, "polynomial has non-integral coefficients");
        out.push_back(c.get_num());
    }
    return out;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const BigRat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const BigRat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigRat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (i == 0 || !unit) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<BigRat> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<BigRat> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (long i = a.degree(); i >= db; --i) {
        BigRat q = rem[static_cast<std::size_t>(i)] / b.leading();
        quo[static_cast<std::size_t>(i - db)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * (BigRat(1) / x.leading());
}

namespace {

struct PolyAlgebra {
    using Value = Poly;
    std::string var;

    bool is_function(const std::string&) const { return false; }
    Poly number(const BigRat& c) const { return Poly::constant(c); }
    Poly symbol(const std::string& name) const {
        if (name != var) throw Error(ErrorCode::InvalidArgument, "unknown symbol '" + name + "', expected '" + var + "'");
        return Poly::monomial(BigRat(1), 1);
    }
    Poly call(const std::string& name, const Poly&) const {
        throw Error(ErrorCode::InvalidArgument, "function '" + name + "' in a polynomial");
    }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return a * b; }
    Poly neg(const Poly& a) const { return -a; }
    Poly div(const Poly& a, const Poly& b) const {
        if (b.degree() != 0) throw Error(ErrorCode::InvalidArgument, "division by a non-constant polynomial");
        return a * (BigRat(1) / b[0]);
    }
    Poly pow(const Poly& a, const Poly& e) const {
        if (e.degree() > 0 || !exact::is_integral(e[0]) || e[0] < 0 || e[0] > 10000) {
            throw Error(ErrorCode::InvalidArgument, "exponent must be a small non-negative integer");
        }
        Poly out = Poly::constant(BigRat(1));
        for (long k = e[0].get_num().get_si(); k > 0; --k) out = out * a;
        return out;
    }
};

}  // namespace

Poly parse_poly(std::string_view text, const std::string& var) {
    PolyAlgebra alg{var};
    return detail::ExprParser<PolyAlgebra>(text, alg).parse();
}

}  // namespace seqexp::exact
