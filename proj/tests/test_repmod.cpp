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
#include <set>

#include "doctest.h"
#include "g2ss/repmod.hpp"

using namespace g2ss;

namespace {

const std::vector<Perm>& gens() {
    static const std::vector<Perm> g{psl25_translation(), psl25_inversion()};
    return g;
}

}  // namespace

TEST_CASE("F_4 arithmetic") {
    CHECK(f4_mul(kOmega, kOmega) == f4_add(kOmega, 1));
    for (F4 a = 1; a < 4; ++a) CHECK(f4_mul(a, f4_inv(a)) == 1);
    for (F4 a = 0; a < 4; ++a)
        for (F4 b = 0; b < 4; ++b)
            for (F4 c = 0; c < 4; ++c) CHECK(f4_mul(a, f4_add(b, c)) == f4_add(f4_mul(a, b), f4_mul(a, c)));
}

TEST_CASE("packed F_2 matrices agree with the dense ones") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 500; ++i) {
        Bits16 x = static_cast<Bits16>(rng()), y = static_cast<Bits16>(rng());
        CHECK(from_bits(bits_mul(x, y)) == from_bits(x) * from_bits(y));
        CHECK(to_bits(from_bits(x)) == x);
    }
    CHECK(from_bits(kBitsIdentity) == Matrix::identity(4));
}

TEST_CASE("the heart as a G-module") {
    CHECK(heart_matrix(identity_perm()) == Matrix::identity(4));
    CHECK(heart_point_sets().size() == 16);
    auto group = build_psl25();
    // g -> matrix is a homomorphism and injective
    std::set<Matrix> images;
    for (const Perm& a : group) {
        images.insert(heart_matrix(a));
        for (const Perm& b : {group[3], group[17]})
            CHECK(heart_matrix(compose(a, b)) == heart_matrix(a) * heart_matrix(b));
    }
    CHECK(images.size() == 60);
}

TEST_CASE("commutants") {
    auto c2 = commutant(heart(BaseField::F2, gens()));
    CHECK(c2.dim == 2);
    CHECK(c2.is_field);
    REQUIRE(c2.has_omega);
    CHECK(c2.omega * c2.omega == c2.omega + Matrix::identity(4));

    auto c4 = commutant(heart(BaseField::F4, gens()));
    CHECK(c4.dim == 2);
    CHECK_FALSE(c4.is_field);
    CHECK(c4.split);

    GModule trivial;
    trivial.field = BaseField::F2;
    trivial.dim = 4;
    trivial.gens = {Matrix::identity(4)};
    CHECK(commutant(trivial).dim == 16);
}

TEST_CASE("simplicity") {
    auto s2 = is_simple(heart(BaseField::F2, gens()));
    CHECK(s2.simple);
    CHECK(s2.vectors_checked == 15);
    auto s4 = is_simple(heart(BaseField::F4, gens()));
    CHECK_FALSE(s4.simple);
    CHECK(s4.witness_span_dim > 0);
    CHECK(s4.witness_span_dim < 4);

    auto c2 = commutant(heart(BaseField::F2, gens()));
    GModule absolute = as_f4_module(heart(BaseField::F2, gens()), c2.omega);
    CHECK(absolute.dim == 2);
    CHECK(is_simple(absolute).simple);
    CHECK(commutant(absolute).dim == 1);
}

TEST_CASE("full verification report") {
    RepReport r = verify_representations();
    CHECK(r.group_order == 60);
    CHECK(r.doubly_transitive);
    CHECK(r.faithful);
    CHECK(r.commutant_basis_independent);
    CHECK(r.census.dimension_counts.size() == 4);
    for (const auto& [dim, n] : r.census.dimension_counts) CHECK((dim == 1 || dim == 2 || dim == 8 || dim == 16));
    long total = 0;
    for (const auto& [cls, n] : r.census.generator_counts) total += n;
    CHECK(total == 65536);
    CHECK(r.census.dim2_is_commutant);
    CHECK(r.census.dim8_is_centralizer);
    CHECK(r.census.very_simple_ok);
    CHECK(r.census.joins_checked > 0);
    CHECK(r.passed);
}

TEST_CASE("census seeds for the named generators") {
    auto m = heart(BaseField::F2, gens());
    auto c2 = commutant(m);
    auto census = classify_g_stable_algebras(m, c2.omega, 1, 10);
    // u = 0 and u = 1 give the scalars; u = w gives F_4
    CHECK(census.generator_counts.at(SubalgebraClass::ScalarsF2) >= 2);
    CHECK(census.generator_counts.at(SubalgebraClass::FieldF4) >= 2);
}
