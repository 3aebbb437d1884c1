#include "seqexp/exact/bigint.hpp"

#include <cctype>

#include "seqexp/error.hpp"

namespace seqexp::exact {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    auto s = trim(text);
    if (!is_integer_literal(s)) {
        throw Error(ErrorCode::InvalidArgument, "not an integer: '" + std::string(text) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

BigRat parse_bigrat(std::string_view text) {
    auto s = trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_bigint(s.substr(0, slash));
        BigInt den = parse_bigint(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
        BigRat r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string digits(s.substr(0, dot));
        std::string frac(s.substr(dot + 1));
        if (!is_integer_literal(frac) || frac.front() == '-' || frac.front() == '+') {
            throw Error(ErrorCode::InvalidArgument, "not a decimal: '" + std::string(text) + "'");
        }
        bool negative = !digits.empty() && digits.front() == '-';
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        BigInt whole = parse_bigint(digits);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        BigInt num = abs(whole) * scale + BigInt(frac, 10);
        if (negative) num = -num;
        BigRat r(num, scale);
        r.canonicalize();
        return r;
    }
    return BigRat(parse_bigint(s));
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRat& value) { return value.get_str(10); }

std::size_t bit_length(const BigInt& value) {
    if (value == 0) return 0;
    return mpz_sizeinbase(value.get_mpz_t(), 2);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt round_div(const BigInt& a, const BigInt& b) {
    // floor((2a + b) / 2b) with b made positive first.
    BigInt num = a, den = b;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return floor_div(2 * num + den, 2 * den);
}

}  // namespace seqexp::exact
