/*
   Copyright 2026 The bicanon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BICANON_EXPR_PARSER_HPP
#define BICANON_EXPR_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "ratfunc.hpp"

namespace bicanon {

/// Recursive-descent parser for rational expressions:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Identifiers are variables of the table, `i` (zeta8^2, a square root of
/// -1) and `zeta8`. Errors carry the 0-based character position.
class ExprParser {
public:
    ExprParser(std::string_view text, VarTablePtr vars) : text_(text), vars_(std::move(vars)) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (accept('+')) r = r + term();
            else if (accept('-')) r = r - term();
            else return r;
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) throw parse_error("division by zero", at);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 4) throw parse_error("exponent too large", start);
        const long e = std::stol(digits);
        if (negative && base.is_zero()) throw parse_error("negative power of zero", start);
        return base.pow(negative ? -e : e);
    }

    RatFunc primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RatFunc::constant(vars_, FieldElem(Rational::parse(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (auto v = vars_->find(name)) return RatFunc::variable(vars_, *v);
            if (name == "i") return RatFunc::constant(vars_, FieldElem::imag());
            if (name == "zeta8") return RatFunc::constant(vars_, FieldElem::zeta());
            throw parse_error("unknown identifier '" + std::string(name) + "'", start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    VarTablePtr vars_;
    std::size_t pos_ = 0;
};

inline RatFunc parse_ratfunc(std::string_view text, const VarTablePtr &vars = VarTable::standard()) {
    return ExprParser(text, vars).parse();
}

inline MPoly parse_poly(std::string_view text, const VarTablePtr &vars = VarTable::standard()) {
    RatFunc r = parse_ratfunc(text, vars);
    if (!r.is_polynomial()) throw schema_error("expression is not a polynomial: " + std::string(text));
    return r.as_polynomial();
}

} // namespace bicanon

#endif
