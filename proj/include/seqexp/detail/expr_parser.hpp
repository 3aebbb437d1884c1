#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "seqexp/error.hpp"
#include "seqexp/exact/bigint.hpp"

namespace seqexp::detail {

// Recursive-descent parser for + - * / ^, parentheses, unary minus, function
// calls and implicit multiplication ("2n^2", "3x(x-1)"). The algebra supplies
//   Value number(const BigRat&), symbol(string), call(string, Value),
//   add, sub, mul, div, pow, neg, and is_function(string). A name that is not
//   a function followed by '(' is a product: "x(x-1)".
template <typename Algebra>
class ExprParser {
public:
    using Value = typename Algebra::Value;

    ExprParser(std::string_view text, Algebra& alg) : s_(text), alg_(alg) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::InvalidArgument, "expression '" + std::string(s_) + "': " + msg);
    }

    Value expr() {
        Value v = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Value r = term();
            v = c == '+' ? alg_.add(v, r) : alg_.sub(v, r);
        }
        return v;
    }

    Value term() {
        Value v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                Value r = unary();
                v = c == '*' ? alg_.mul(v, r) : alg_.div(v, r);
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                v = alg_.mul(v, power());
            } else {
                return v;
            }
        }
    }

    Value unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return alg_.neg(unary());
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = primary();
        if (peek() == '^') {
            ++pos_;
            return alg_.pow(base, unary());
        }
        return base;
    }

    Value primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return alg_.number(exact::parse_bigrat(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (alg_.is_function(name) && peek() == '(') {
                ++pos_;
                Value arg = expr();
                if (peek() != ')') fail("missing ')' after argument of " + name);
                ++pos_;
                return alg_.call(name, arg);
            }
            return alg_.symbol(name);
        }
        if (c == '\0') fail("unexpected end");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    Algebra& alg_;
    std::size_t pos_ = 0;
};

}  // namespace seqexp::detail
