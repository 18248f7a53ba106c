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


#include <random>

#include "doctest.h"
#include "g2ss/brumer.hpp"
#include "g2ss/expr.hpp"

using namespace g2ss;

namespace {

Poly<Rational> qt(const char* s) { return to_rational_t(parse_expression(s)); }
Poly<Fq> ft(const char* s, const ExtField& F) { return to_fq_t(parse_expression(s), F); }

std::string canon(const PolyXT<Rational>& f) { return f.to_string("x"); }
std::string canon(const PolyXT<Fq>& f) { return f.to_string("x"); }

}  // namespace

TEST_CASE("Brumer polynomials over Q and Q(T)") {
    auto f000 = brumer_polynomial(qt("0"), qt("0"), qt("0"), false);
    CHECK(f000.f == to_rational_xt(parse_expression("x^6+2x^4+2x^3+5x^2+6x+1")));
    CHECK(f000.separable);
    CHECK(domain_name(f000) == "Q");
    auto f012 = brumer_polynomial(qt("0"), qt("1"), qt("2"), false);
    CHECK(f012.f == to_rational_xt(parse_expression("x^6+2x^5+5x^4-2x^3+10x^2+8x+1")));
    auto f01T = brumer_polynomial(qt("0"), qt("1"), qt("T"), true);
    CHECK(f01T.f == to_rational_xt(parse_expression("x^6 + 2x^5 + 5x^4 + (6-4T)x^3 + 10x^2 + 8x + 1")));
    CHECK(domain_name(f01T) == "Q(T)");
    CHECK(f01T.separable);
}

TEST_CASE("reduction mod p") {
    auto f01T = brumer_polynomial(qt("0"), qt("1"), qt("T"), true);
    const ExtField& f3 = ExtField::get(3);
    auto r = reduce_mod_p(f01T, 3);
    CHECK(r.f == to_fq_xt(parse_expression("x^6+2x^5+2x^4+2Tx^3+x^2+2x+1"), f3));
    CHECK(domain_name(r) == "F_3(T)");
    auto f012 = brumer_polynomial(qt("0"), qt("1"), qt("2"), false);
    CHECK(reduce_mod_p(f012, 3).f == to_fq_xt(parse_expression("x^6+2x^5+2x^4+x^3+x^2+2x+1"), f3));
    auto f00T3 = brumer_polynomial(qt("0"), qt("0"), qt("T+3"), true);
    CHECK(reduce_mod_p(f00T3, 5).f == to_fq_xt(parse_expression("x^6+2x^4+Tx^3+x+1"), ExtField::get(5)));

    auto half = brumer_polynomial(qt("1/5"), qt("0"), qt("0"), false);
    try {
        reduce_mod_p(half, 5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadReduction);
    }
    CHECK_NOTHROW(reduce_mod_p(half, 7, true));
}

TEST_CASE("separability and the allow-singular flag") {
    const ExtField& f3 = ExtField::get(3);
    auto g = to_fq_xt(parse_expression("x^6 + x^3 + 1"), f3);
    try {
        make_sextic(g, false);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSeparable);
    }
    auto s = make_sextic(g, false, true);
    CHECK_FALSE(s.separable);
    // x^6 + T x^3 + T^2 over F_3(T) is never separable
    auto h = make_sextic(to_fq_xt(parse_expression("x^6 + Tx^3 + T^2"), f3), true, true);
    CHECK_FALSE(h.separable);
    CHECK(discriminant_t(h.f).is_zero());
    // separability witness agrees with the full discriminant on random curves over F_3(T)
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        std::vector<Poly<Fq>> c;
        for (int j = 0; j < 6; ++j) c.push_back(random_poly(f3, static_cast<int>(rng() % 2), false, rng));
        c.push_back(Poly<Fq>::constant(f3.one()));
        if (i % 4 == 0) c[1] = c[2] = c[4] = c[5] = Poly<Fq>(f3.one());
        PolyXT<Fq> f(c, Poly<Fq>::constant(f3.one()));
        CHECK(is_separable(f) == !discriminant_t(f).is_zero());
    }
    CHECK_THROWS_AS(make_sextic(to_fq_xt(parse_expression("x^5 + 1"), f3), false), Error);
    CHECK_THROWS_AS(make_sextic(to_fq_xt(parse_expression("2x^6 + x + 1"), ExtField::get(5)), false), Error);
}

TEST_CASE("random Brumer curves over F_p are monic sextics") {
    std::mt19937_64 rng(31);
    for (u64 p : {5, 7, 11}) {
        const ExtField& F = ExtField::get(p);
        for (int i = 0; i < 100; ++i) {
            auto b = Poly<Fq>::constant(random_element(F, rng));
            auto c = Poly<Fq>::constant(random_element(F, rng));
            auto d = Poly<Fq>::constant(random_element(F, rng));
            auto f = brumer_coefficients(b, c, d);
            CHECK(f.degree() == 6);
            CHECK(f.is_monic());
        }
    }
}

TEST_CASE("char-3 identities") {
    auto r = brumer_char3_identities(reduce_mod_p(brumer_polynomial(qt("0"), qt("1"), qt("T"), true), 3));
    CHECK(r.a1_equals_a5);
    CHECK(r.a4_equals_a2_minus_a1);
    const ExtField& f3 = ExtField::get(3);
    auto s = reduce_mod_p(brumer_polynomial(qt("0"), qt("1"), qt("T"), true), 3);
    CHECK(s.a(1) == ft("2", f3));
    CHECK(s.a(4) == ft("2", f3));
    CHECK_NOTHROW(brumer_char3_identities(reduce_mod_p(brumer_polynomial(qt("1"), qt("1"), qt("2T+1"), true), 3)));
    auto c0 = brumer_polynomial(ft("T", f3), ft("0", f3), ft("T^2+1", f3), true, true);
    CHECK(c0.a(1).is_zero());
    CHECK(c0.a(5).is_zero());

    std::mt19937_64 rng(37);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        auto rp = [&] { return random_poly(f3, static_cast<int>(rng() % 3), false, rng); };
        auto f = brumer_polynomial(rp(), rp(), rp(), true, true);
        auto rep = brumer_char3_identities(f);
        CHECK(rep.a1_equals_a5);
        ++checked;
    }
    CHECK(checked == 1000);
    auto tampered = reduce_mod_p(brumer_polynomial(qt("0"), qt("1"), qt("T"), true), 3);
    std::vector<Poly<Fq>> c = tampered.f.coeffs();
    c[1] = c[1] + c[1].one();
    tampered.f = PolyXT<Fq>(c, tampered.f.unit());
    try {
        brumer_char3_identities(tampered);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IdentityViolation);
    }
    CHECK_THROWS_AS(brumer_char3_identities(reduce_mod_p(brumer_polynomial(qt("0"), qt("1"), qt("T"), true), 5)),
                    Error);
}

TEST_CASE("F9 family") {
    const ExtField& f9 = ExtField::get(3, 2);
    const Fq s = f9.generator();
    const Fq one = f9.one();
    CHECK(is_valid_f9_epsilon(s - one));
    CHECK(is_valid_f9_epsilon(-s - one));
    CHECK_FALSE(is_valid_f9_epsilon(one));
    try {
        brumer_f9_family(ft("1", f9), ft("1", f9), one);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadEpsilon);
    }
    try {
        brumer_f9_family(ft("1", f9), ft("0", f9), s - one);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    auto fam = brumer_f9_family(ft("1", f9), ft("1", f9), s - one);
    CHECK_FALSE(fam.cleared);
    CHECK(fam.curve.f.degree() == 6);
    // the family is Brumer's polynomial with D = (C^2 + (eps+1)C - 1)/B in characteristic 3
    auto same = brumer_coefficients(ft("1", f9), ft("1", f9), fam.bd);
    CHECK(canon(same) == canon(fam.curve.f));

    auto cleared = brumer_f9_family(ft("T", f9), ft("T+1", f9), -s - one);
    CHECK(cleared.cleared);
    CHECK(cleared.curve.clearing == ft("T+1", f9));
    CHECK(cleared.curve.f.is_monic());
}
