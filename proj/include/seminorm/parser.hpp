/*
   Copyright 2026 The seminorm authors

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

#ifndef SEMINORM_PARSER_HPP
#define SEMINORM_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace seminorm {

// Recursive-descent parser for the polynomial grammar:
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-int)?
//   base   := integer | integer '/' integer | identifier | '(' expr ')'
//
// No implicit multiplication.  Fraction literals are accepted over QQ only.
// Identifiers: [A-Za-z][A-Za-z0-9_]*.  An optional sign before the first
// term keeps printed polynomials re-parseable.
class PolynomialParser {
   public:
    PolynomialParser(std::string_view text, const FieldTag& field,
                     const std::vector<std::string>& var_names)
        : text_(text), field_(field), vars_(var_names) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial expression");
        Polynomial p = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return p;
    }

   private:
    Polynomial parse_expr() {
        bool negate = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial t = parse_term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc *= parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
            unsigned long e = parse_uint();
            if (e > 100000) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_integer();
            skip_ws();
            if (peek() == '/') {
                if (!field_.is_rationals()) fail("fraction literals are only valid over QQ");
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("denominator must be an integer");
                mpz_class den = parse_integer();
                if (den == 0) fail("zero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                return Polynomial::constant(Scalar::from_mpq(field_, q), vars_.size());
            }
            return Polynomial::constant(Scalar::from_mpz(field_, num), vars_.size());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name) return Polynomial::variable(field_, vars_.size(), i);
            }
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        fail("expected a number, variable, or parenthesized expression");
        return Polynomial();  // unreachable
    }

    mpz_class parse_integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    unsigned long parse_uint() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, pos_ + 1);
    }

    std::string_view text_;
    FieldTag field_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial_text(std::string_view text, const FieldTag& field,
                                        const std::vector<std::string>& var_names) {
    return PolynomialParser(text, field, var_names).parse();
}

inline bool is_valid_identifier(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace seminorm

#endif
