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
#include "g2ss/quadorder.hpp"

using namespace g2ss;

TEST_CASE("order discriminants") {
    CHECK(order_discriminant(make_quadratic_order(5, 1)) == 5);
    CHECK(order_discriminant(make_quadratic_order(5, 2)) == 20);
    CHECK(order_discriminant(make_quadratic_order(2, 1)) == 8);
    CHECK(order_discriminant(make_quadratic_order(3, 3)) == 108);
    CHECK_THROWS_AS(make_quadratic_order(12, 1), Error);
    CHECK_THROWS_AS(make_quadratic_order(1, 1), Error);
    CHECK_THROWS_AS(make_quadratic_order(5, 0), Error);
}

TEST_CASE("generator minimal polynomial") {
    auto g = generator_minpoly(make_quadratic_order(13, 1));
    CHECK(g.lin == 1);
    CHECK(g.cst == -3);
    auto h = generator_minpoly(make_quadratic_order(7, 2));
    CHECK(h.lin == 0);
    CHECK(h.cst == -28);
}

TEST_CASE("mod 2 tensor class") {
    CHECK(mod2_tensor_class(make_quadratic_order(5, 1)) == Mod2TensorClass::FieldF4);
    CHECK(mod2_tensor_class(make_quadratic_order(5, 2)) != Mod2TensorClass::FieldF4);
    CHECK(mod2_tensor_class(make_quadratic_order(13, 1)) == Mod2TensorClass::FieldF4);
    CHECK(mod2_tensor_class(make_quadratic_order(17, 1)) == Mod2TensorClass::SplitF2xF2);
    CHECK(mod2_tensor_class(make_quadratic_order(2, 1)) == Mod2TensorClass::NonReduced);
    CHECK(mod2_tensor_class(make_quadratic_order(5, 2)) == Mod2TensorClass::NonReduced);
}

TEST_CASE("FieldF4 iff discriminant is 5 mod 8, exhaustively") {
    int checked = 0;
    for (i64 d = 2; d <= 200; ++d) {
        if (!is_squarefree_integer(d)) continue;
        for (i64 c = 1; c <= 20; ++c) {
            auto o = make_quadratic_order(d, c);
            const bool f4 = mod2_tensor_class(o) == Mod2TensorClass::FieldF4;
            const mpz_class disc = order_discriminant(o);
            CHECK(f4 == (mpz_class(disc % 8) == 5));
            CHECK(f4 == (d % 8 == 5 && c % 2 == 1));
            ++checked;
        }
    }
    CHECK(checked > 2000);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(5, 5) == 0);
    CHECK(legendre(5, 11) == 1);
    CHECK(legendre(5, 7) == -1);
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 7) == -1);
    std::mt19937_64 rng(23);
    for (u64 p : {3, 5, 7, 11, 101, 997}) {
        for (int i = 0; i < 50; ++i) {
            i64 a = static_cast<i64>(rng() % 2000) - 1000, b = static_cast<i64>(rng() % 2000) - 1000;
            CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
        }
        // by exhaustion of squares
        for (u64 a = 1; a < std::min<u64>(p, 50); ++a) {
            bool square = false;
            for (u64 x = 1; x < p; ++x) square |= (x * x % p == a);
            CHECK(legendre(static_cast<i64>(a), p) == (square ? 1 : -1));
        }
    }
}

TEST_CASE("splitting types") {
    CHECK(splitting_type(5, 5) == SplittingType::Ramified);
    CHECK(splitting_type(3, 5) == SplittingType::Inert);
    CHECK(splitting_type(7, 5) == SplittingType::Inert);
    CHECK(splitting_type(11, 5) == SplittingType::Split);
    CHECK(splitting_type(2, 5) == SplittingType::Inert);
    CHECK(splitting_type(2, 13) == SplittingType::Inert);
    CHECK_THROWS_AS(splitting_type(2, 17), Error);
    CHECK_THROWS_AS(splitting_type(9, 5), Error);
    for (i64 d : {5, 13, 29, 2, 3}) {
        for (u64 p = 3; p <= 1000; ++p) {
            if (!is_prime(p)) continue;
            SplittingType s = splitting_type(p, d);
            int hits = (s == SplittingType::Split) + (s == SplittingType::Inert) + (s == SplittingType::Ramified);
            CHECK(hits == 1);
            CHECK((s == SplittingType::Ramified) == (d % static_cast<i64>(p) == 0));
        }
    }
}
