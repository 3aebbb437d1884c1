#include "seqexp/guess/operators.hpp"

#include <algorithm>
#include <sstream>

#include "seqexp/error.hpp"

namespace seqexp::guess {

namespace {

long max_degree(const std::vector<Poly>& family) {
    long d = -1;
    for (const auto& p : family) d = std::max(d, p.degree());
    return d;
}

std::string render(const std::vector<Poly>& family, const std::string& var, const std::string& term_prefix,
                   const std::string& term_suffix) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < family.size(); ++j) {
        if (family[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << family[j].to_string(var) << ")" << term_prefix << j << term_suffix;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::vector<Poly> normalize_family(const std::vector<Poly>& family, std::size_t lead) {
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& p : family) {
        for (const auto& c : p.coeffs()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    if (num_gcd == 0) return family;
    BigRat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (lead < family.size() && !family[lead].is_zero() && family[lead].leading() < 0) scale = -scale;
    std::vector<Poly> out;
    out.reserve(family.size());
    for (const auto& p : family) out.push_back(p * scale);
    return out;
}

bool proportional(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (a.size() != b.size()) return false;
    BigRat ratio = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const std::size_t n = std::max(a[j].coeffs().size(), b[j].coeffs().size());
        for (std::size_t i = 0; i < n; ++i) {
            BigRat x = a[j][i], y = b[j][i];
            if ((x == 0) != (y == 0)) return false;
            if (x == 0) continue;
            if (ratio == 0) {
                ratio = x / y;
            } else if (x != ratio * y) {
                return false;
            }
        }
    }
    return ratio != 0;
}

// ---- PRecurrence ----

long PRecurrence::degree() const { return max_degree(coeffs); }

PRecurrence PRecurrence::normalized() const {
    if (coeffs.empty() || coeffs.back().is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "recurrence with zero leading coefficient");
    }
    return PRecurrence{normalize_family(coeffs, coeffs.size() - 1)};
}

bool PRecurrence::is_normalized() const { return !coeffs.empty() && normalized() == *this; }

BigInt PRecurrence::apply(const seqgen::Sequence& u, long n) const {
    BigRat acc = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        acc += coeffs[j].eval(BigRat(n)) * BigRat(u.at(n + static_cast<long>(j)));
    }
    if (acc.get_den() != 1) throw Error(ErrorCode::NonIntegral, "recurrence has non-integral coefficients");
    return acc.get_num();
}

std::string PRecurrence::to_string() const { return render(coeffs, "n", "*u(n+", ")"); }

// ---- AlgEq ----

long AlgEq::x_degree() const { return max_degree(coeffs); }

AlgEq AlgEq::normalized() const {
    std::vector<Poly> c = coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low == c.size()) throw Error(ErrorCode::InvalidArgument, "zero algebraic equation");
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    return AlgEq{normalize_family(c, c.size() - 1)};
}

bool AlgEq::is_normalized() const { return !coeffs.empty() && normalized() == *this; }

AlgEq AlgEq::y_derivative() const {
    AlgEq d;
    for (std::size_t j = 1; j < coeffs.size(); ++j) d.coeffs.push_back(coeffs[j] * BigRat(static_cast<long>(j)));
    return d;
}

std::string AlgEq::to_string() const { return render(coeffs, "x", "*y^", ""); }

// ---- LinODE ----

long LinODE::degree() const { return max_degree(coeffs); }

LinODE LinODE::normalized() const {
    std::vector<Poly> c = coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw Error(ErrorCode::InvalidArgument, "zero differential operator");
    return LinODE{normalize_family(c, c.size() - 1)};
}

std::string LinODE::to_string() const { return render(coeffs, "x", "*D^", "f"); }

}  // namespace seqexp::guess
