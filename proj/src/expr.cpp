/*
   Copyright 2026 The g2ss Authors

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

#include "g2ss/expr.hpp"

#include <cctype>

namespace g2ss {

namespace {

void add_into(SparsePoly& acc, const SparsePoly& b, int sign) {
    for (const auto& [m, c] : b) {
        mpq_class& slot = acc[m];
        if (sign > 0)
            slot += c;
        else
            slot -= c;
        if (slot == 0) acc.erase(m);
    }
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m{ma.x + mb.x, ma.t + mb.t, ma.s + mb.s};
            mpq_class& slot = r[m];
            slot += ca * cb;
            if (slot == 0) r.erase(m);
        }
    return r;
}

SparsePoly constant(const mpq_class& c) {
    SparsePoly r;
    if (c != 0) r[Monomial{}] = c;
    return r;
}

bool is_constant(const SparsePoly& p) { return p.empty() || (p.size() == 1 && p.begin()->first == Monomial{}); }

class Parser {
   public:
    Parser(std::string_view text, char tvar) : s_(text), tvar_(tvar) {}

    SparsePoly parse() {
        SparsePoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) error("unexpected character");
        return r;
    }

   private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::Parse, msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == tvar_ || c == 's';
    }

    SparsePoly expr() {
        SparsePoly acc;
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++pos_;
        }
        add_into(acc, term(), sign);
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            add_into(acc, term(), c == '-' ? -1 : 1);
        }
        return acc;
    }

    SparsePoly term() {
        SparsePoly acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = multiply(acc, power());
            } else if (c == '/') {
                ++pos_;
                SparsePoly d = power();
                if (!is_constant(d) || d.empty()) error("division is only allowed by a nonzero constant");
                acc = multiply(acc, constant(1 / d.begin()->second));
            } else if (starts_atom(c)) {
                acc = multiply(acc, power());
            } else {
                break;
            }
        }
        return acc;
    }

    SparsePoly power() {
        SparsePoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected a non-negative integer exponent");
            const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            if (e > 4096) error("exponent too large");
            SparsePoly r = constant(1);
            for (long i = 0; i < e; ++i) r = multiply(r, base);
            return r;
        }
        return base;
    }

    SparsePoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePoly r = expr();
            if (peek() != ')') error("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '-') {
            ++pos_;
            SparsePoly r = power();
            return multiply(r, constant(-1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        SparsePoly r;
        if (c == 'x') {
            r[Monomial{1, 0, 0}] = 1;
        } else if (c == tvar_) {
            r[Monomial{0, 1, 0}] = 1;
        } else if (c == 's') {
            r[Monomial{0, 0, 1}] = 1;
        } else {
            error(c == '\0' ? "unexpected end of input" : "unexpected character");
        }
        ++pos_;
        return r;
    }

    std::string_view s_;
    char tvar_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_expression(std::string_view text, char tvar) {
    if (tvar == 'x' || tvar == 's') fail(ErrorCode::InvalidArgument, "function-field variable must differ from x and s");
    return Parser(text, tvar).parse();
}

int x_degree(const SparsePoly& p) {
    int d = kZeroDegree;
    for (const auto& [m, c] : p) d = std::max(d, m.x);
    return d;
}

bool mentions_t(const SparsePoly& p) {
    for (const auto& [m, c] : p)
        if (m.t > 0) return true;
    return false;
}

Poly<Poly<Rational>> to_rational_xt(const SparsePoly& p) {
    const Rational one(1);
    const Poly<Rational> tunit = Poly<Rational>::constant(one);
    std::vector<Poly<Rational>> xs(static_cast<std::size_t>(std::max(x_degree(p), 0)) + 1, tunit.zero());
    for (const auto& [m, c] : p) {
        if (m.s > 0) fail(ErrorCode::Parse, "extension generator s is not allowed over Q");
        xs[static_cast<std::size_t>(m.x)] += Poly<Rational>::monomial(Rational(c), m.t);
    }
    return Poly<Poly<Rational>>(std::move(xs), tunit);
}

Poly<Poly<Fq>> to_fq_xt(const SparsePoly& p, const ExtField& field) {
    const Poly<Fq> tunit = Poly<Fq>::constant(field.one());
    std::vector<Poly<Fq>> xs(static_cast<std::size_t>(std::max(x_degree(p), 0)) + 1, tunit.zero());
    for (const auto& [m, c] : p) {
        if (m.s > 0 && field.degree() == 1) fail(ErrorCode::Parse, "extension generator s used over a prime field");
        Fq coef = reduce(Rational(c), field) * field.generator().pow(static_cast<u64>(m.s));
        if (coef.is_zero()) continue;
        xs[static_cast<std::size_t>(m.x)] += Poly<Fq>::monomial(coef, m.t);
    }
    return Poly<Poly<Fq>>(std::move(xs), tunit);
}

Poly<Rational> to_rational_t(const SparsePoly& p) {
    if (x_degree(p) > 0) fail(ErrorCode::Parse, "parameter expression must not contain x");
    return to_rational_xt(p).coeff(0);
}

Poly<Fq> to_fq_t(const SparsePoly& p, const ExtField& field) {
    if (x_degree(p) > 0) fail(ErrorCode::Parse, "parameter expression must not contain x");
    const Poly<Poly<Fq>> r = to_fq_xt(p, field);
    return r.is_zero() ? Poly<Fq>(field.one()) : r.coeff(0);
}

}  // namespace g2ss
