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
#include "g2ss/expr.hpp"
#include "g2ss/ffield.hpp"
#include "test_util.hpp"

using namespace g2ss;
using g2ss::testing::fpoly;
using g2ss::testing::qpoly;

namespace {

// Brumer f_{0,1,2} over Q, read off its defining formula by hand.
Poly<Rational> f012() { return qpoly({1, 8, 10, -2, 5, 2, 1}); }

std::vector<u64> primes_from(u64 start, std::size_t count) {
    std::vector<u64> out;
    for (u64 n = start; out.size() < count; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("prime field construction") {
    CHECK(is_prime(3));
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(561));
    CHECK_THROWS_AS(PrimeField(2), Error);
    CHECK_THROWS_AS(PrimeField(9), Error);
    PrimeField f(11);
    CHECK(f.mul(f.inv(7), 7) == 1);
    CHECK(f.reduce(-1) == 10);
}

TEST_CASE("extension fields") {
    const ExtField& f9 = ExtField::get(3, 2);
    CHECK(f9.order() == 9);
    Fq s = f9.generator();
    CHECK(s * s == f9.from_int(-1));
    // Frobenius fixes exactly the prime field.
    int fixed = 0;
    for (u64 i = 0; i < 9; ++i) {
        Fq a = f9.from_index(i);
        if (a.frobenius() == a) ++fixed;
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
    CHECK(fixed == 3);
    const ExtField& f125 = ExtField::get(5, 3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Fq a = random_element(f125, rng), b = random_element(f125, rng);
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    }
    CHECK_THROWS_AS(ExtField(PrimeField(3), {1, 0, 1 + 3 - 1, 1}), Error);
}

TEST_CASE("poly_pow examples") {
    const ExtField& f3 = ExtField::get(3);
    Poly<Fq> f = fpoly(f3, {1, 1, 0, 0, 0, 0, 1});
    CHECK(pow(f, 1) == f);
    CHECK(pow(fpoly(f3, {1, 1}), 3) == fpoly(f3, {1, 0, 0, 1}));
    Poly<Fq> g = fpoly(f3, {1, 2, 1, 1, 2, 2, 1});
    CHECK(pow(g, 1).coeff(2).is_one());
    CHECK(pow(g, 0) == g.one());
    CHECK(pow(g, 5).degree() == 30);
}

TEST_CASE("poly_pow by p equals Frobenius twist composed with x^p") {
    std::mt19937_64 rng(7);
    for (u64 p : {3, 5, 7, 11}) {
        const ExtField& fp = ExtField::get(p);
        for (int i = 0; i < 100; ++i) {
            Poly<Fq> f = random_poly(fp, 1 + static_cast<int>(rng() % 8), false, rng);
            CHECK(pow(f, p) == frobenius_twist(f));
        }
    }
    // Same identity with coefficients in F_25, where the twist moves coefficients too.
    const ExtField& f25 = ExtField::get(5, 2);
    for (int i = 0; i < 20; ++i) {
        Poly<Fq> f = random_poly(f25, 4, false, rng);
        CHECK(pow(f, 5) == frobenius_twist(f));
    }
}

TEST_CASE("polynomial ring axioms") {
    std::mt19937_64 rng(11);
    const ExtField& f7 = ExtField::get(7);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(f7, 5, false, rng), b = random_poly(f7, 3, false, rng), c = random_poly(f7, 4, false, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK((a - a).degree() == kZeroDegree);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    // Nested coefficients: F_7[T][x].
    using PT = Poly<Fq>;
    PT unit = PT::constant(f7.one());
    for (int i = 0; i < 20; ++i) {
        std::vector<PT> ca, cb;
        for (int j = 0; j < 3; ++j) {
            ca.push_back(random_poly(f7, 2, false, rng));
            cb.push_back(random_poly(f7, 1, false, rng));
        }
        Poly<PT> a(ca, unit), b(cb, unit);
        CHECK(a * b == b * a);
        CHECK((a + b) * (a - b) == a * a - b * b);
    }
}

TEST_CASE("Frobenius identity on F_p[T]") {
    std::mt19937_64 rng(5);
    for (u64 p : {3, 5, 7}) {
        const ExtField& fp = ExtField::get(p);
        for (int i = 0; i < 30; ++i) {
            auto u = random_poly(fp, 3, false, rng), v = random_poly(fp, 2, false, rng);
            CHECK(pow(u, p) == frobenius_twist(u));
            CHECK(frobenius_twist(u * v) == frobenius_twist(u) * frobenius_twist(v));
        }
    }
}

TEST_CASE("degree patterns") {
    const ExtField& f3 = ExtField::get(3);
    const ExtField& f5 = ExtField::get(5);
    CHECK(distinct_degree_pattern(fpoly(f3, {1, 0, 1})) == DegreePattern{2});
    CHECK(distinct_degree_pattern(fpoly(f5, {1, 0, 1})) == DegreePattern{1, 1});
    CHECK_THROWS_AS(distinct_degree_pattern(fpoly(f5, {1, 2, 1})), Error);
    try {
        distinct_degree_pattern(fpoly(f5, {1, 2, 1}));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSquarefree);
    }

    std::mt19937_64 rng(13);
    for (u64 p : {3, 5, 7, 11}) {
        const ExtField& fp = ExtField::get(p);
        for (int i = 0; i < 60; ++i) {
            auto f = random_poly(fp, 1 + static_cast<int>(rng() % 9), true, rng);
            if (!is_squarefree(f)) continue;
            auto pat = distinct_degree_pattern(f);
            int sum = 0;
            for (int d : pat) sum += d;
            CHECK(sum == f.degree());
            // The full factorisation agrees with the counted degrees.
            auto factors = factor_squarefree(f, 99);
            DegreePattern from_factors;
            Poly<Fq> prod = f.one();
            for (const auto& g : factors) {
                CHECK(is_irreducible(g));
                from_factors.push_back(g.degree());
                prod = prod * g;
            }
            std::sort(from_factors.begin(), from_factors.end(), std::greater<>());
            CHECK(from_factors == pat);
            CHECK(prod == monic(f));
        }
    }
}

TEST_CASE("discriminant vanishes exactly when gcd(f, f') is nontrivial") {
    const ExtField& f5 = ExtField::get(5);
    CHECK(discriminant(fpoly(f5, {-1, 0, 1})) == f5.from_int(4));
    std::mt19937_64 rng(17);
    for (u64 p : {3, 5, 7}) {
        const ExtField& fp = ExtField::get(p);
        for (int i = 0; i < 200; ++i) {
            auto f = random_poly(fp, 2 + static_cast<int>(rng() % 5), false, rng);
            bool disc_zero = discriminant(f).is_zero();
            bool common = gcd(f, f.derivative()).degree() != 0;
            CHECK(disc_zero == common);
        }
    }
    // x^6 + a3 x^3 + a0 has zero derivative in characteristic 3.
    const ExtField& f3 = ExtField::get(3);
    auto g = fpoly(f3, {2, 0, 0, 1, 0, 0, 1});
    CHECK(g.derivative().is_zero());
    CHECK(discriminant(g).is_zero());
    CHECK_FALSE(is_squarefree(g));
}

TEST_CASE("resultant and discriminant over Q") {
    CHECK(discriminant(qpoly({-1, 0, 1})) == Rational(4));
    CHECK(discriminant(qpoly({1, 1, 1})) == Rational(-3));
    CHECK(resultant(qpoly({-1, 1}), qpoly({-2, 1})) == Rational(-1));
    Rational d = discriminant(f012());
    CHECK_FALSE(d.is_zero());
    CHECK(d.is_integer());
    CHECK(d.value() > 0);
    CHECK(mpz_perfect_square_p(d.num().get_mpz_t()) != 0);
}

TEST_CASE("determinant by fraction-free elimination matches cofactor expansion") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
        for (auto& row : m)
            for (auto& x : row) x = Rational(static_cast<i64>(rng() % 7) - 3);
        Rational expect = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(determinant(m, Rational(1)) == expect);
    }
}

TEST_CASE("f_{0,1,2} Frobenius patterns at good primes stay in the A5 set") {
    const std::vector<DegreePattern> allowed = {{1, 1, 1, 1, 1, 1}, {2, 2, 1, 1}, {3, 3}, {5, 1}};
    const Rational disc = discriminant(f012());
    int good = 0;
    for (u64 p : primes_from(3, 200)) {
        if (good == 50) break;
        if (mpz_divisible_ui_p(disc.num().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const ExtField& fp = ExtField::get(p);
        auto fbar = map_coeffs(f012(), fp.one(), [&](const Rational& c) { return reduce(c, fp); });
        auto pat = distinct_degree_pattern(fbar);
        CHECK(std::find(allowed.begin(), allowed.end(), pat) != allowed.end());
        ++good;
    }
    CHECK(good == 50);
    // reduction mod 3 of f_{0,1,2}
    const ExtField& f3 = ExtField::get(3);
    auto r3 = map_coeffs(f012(), f3.one(), [&](const Rational& c) { return reduce(c, f3); });
    CHECK(r3 == fpoly(f3, {1, 2, 1, 1, 2, 2, 1}));
}

TEST_CASE("reduction rejects denominators divisible by p") {
    const ExtField& f5 = ExtField::get(5);
    CHECK(reduce(Rational(1, 2), f5) == f5.from_int(3));
    CHECK_THROWS_AS(reduce(Rational(mpz_class(1), mpz_class(10)), f5), Error);
}

TEST_CASE("expression parser") {
    auto sp = parse_expression("x^6 + 2x^5 + 5x^4 + (6 - 4T)x^3 + 10x^2 + 8x + 1");
    CHECK(x_degree(sp) == 6);
    CHECK(mentions_t(sp));
    auto f = to_rational_xt(sp);
    CHECK(f.coeff(3).to_string() == "-4*T + 6");
    const ExtField& f9 = ExtField::get(3, 2);
    auto g = to_fq_xt(parse_expression("x^2 - s*T + 1/2"), f9);
    CHECK(g.coeff(0).coeff(0) == f9.from_int(2));
    CHECK(g.coeff(0).coeff(1) == -f9.generator());
    CHECK_THROWS_AS(parse_expression("x^ + 1"), Error);
    CHECK_THROWS_AS(parse_expression("x / T"), Error);
    CHECK_THROWS_AS(to_rational_t(parse_expression("x + 1")), Error);
    CHECK(to_rational_t(parse_expression("4T+3")).to_string() == "4*T + 3");
}
