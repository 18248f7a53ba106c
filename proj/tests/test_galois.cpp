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
#include "g2ss/galois.hpp"

using namespace g2ss;

namespace {

SexticQ qcurve(const char* s) { return make_sextic(to_rational_xt(parse_expression(s)), false); }

SexticFq fcurve(const char* s, u64 p) {
    auto sp = parse_expression(s);
    return make_sextic(to_fq_xt(sp, ExtField::get(p)), true);
}

}  // namespace

TEST_CASE("PSL_2(F_5) on the projective line") {
    CHECK(cycle_type(psl25_translation()) == DegreePattern{5, 1});
    Perm inv = psl25_inversion();
    CHECK(cycle_type(inv) == DegreePattern{2, 2, 1, 1});
    // -1/z swaps infinity with 0 and 1 with 4, fixing 2 and 3
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 0);
    CHECK(inv[2] == 5);
    CHECK(inv[3] == 3);
    CHECK(inv[4] == 4);
    auto g = build_psl25();
    CHECK(g.size() == 60);
    CHECK(ordered_pair_orbits(g) == 1);
    for (const Perm& x : g) CHECK(is_even(x));
}

TEST_CASE("cycle type sets are derived, not assumed") {
    const CycleTypeSet& s = a5_cycle_types();
    CHECK(s.a5_census == std::map<DegreePattern, int>{
                             {{1, 1, 1, 1, 1, 1}, 1}, {{2, 2, 1, 1}, 15}, {{3, 3}, 20}, {{5, 1}, 24}});
    CHECK(s.a6_census.at({3, 1, 1, 1}) == 40);
    CHECK(s.a6_census.at({4, 2}) == 90);
    CHECK(s.a6_allowed_count == 230);
    CHECK(s.a6_unique_overgroup);
    CHECK(s.three_types_force_a5);
    int total = 0;
    for (const auto& [pat, n] : s.a5_census) total += n;
    CHECK(total == 60);
}

TEST_CASE("pattern strings") {
    CHECK(pattern_to_string({2, 2, 1, 1}) == "2^2 1^2");
    CHECK(pattern_to_string({5, 1}) == "5 1");
    CHECK(pattern_from_string("1^6") == DegreePattern{1, 1, 1, 1, 1, 1});
    CHECK(pattern_from_string("1 5") == DegreePattern{5, 1});
    CHECK_THROWS_AS(pattern_from_string("2^x"), Error);
}

TEST_CASE("pattern lattice") {
    CHECK(patterns_force_irreducible({{3, 3}, {5, 1}}));
    CHECK_FALSE(patterns_force_irreducible({{2, 2, 1, 1}, {1, 1, 1, 1, 1, 1}}));
    CHECK_FALSE(patterns_force_irreducible({{4, 2}, {2, 2, 2}}));
    CHECK(patterns_force_irreducible({{6}}));
    CHECK_FALSE(patterns_force_irreducible({}));
}

TEST_CASE("square test in F_q[T]") {
    const ExtField& f5 = ExtField::get(5);
    std::mt19937_64 rng(47);
    for (int i = 0; i < 100; ++i) {
        auto u = random_poly(f5, static_cast<int>(rng() % 5), false, rng);
        CHECK(is_square_poly(u * u));
        auto v = u * u * Poly<Fq>::constant(f5.from_int(2));  // 2 is a non-square mod 5
        CHECK_FALSE(is_square_poly(v));
    }
    CHECK_FALSE(is_square_poly(to_fq_t(parse_expression("T^2 + 1"), f5)));
    CHECK(is_square_poly(to_fq_t(parse_expression("4T^2 + 4T + 1"), f5)));
}

TEST_CASE("certification over Q") {
    auto cert = certify_a5_over_q(qcurve("x^6+2x^5+5x^4-2x^3+10x^2+8x+1"));
    CHECK(cert.verdict == GaloisVerdict::CertifiedA5);
    CHECK(cert.samples == 200);
    CHECK(cert.residual < 1e-38);
    CHECK(cert.square_discriminant);
    CHECK(cert.witnesses.size() >= 3);

    auto generic = certify_a5_over_q(qcurve("x^6 + x + 1"));
    CHECK(generic.verdict == GaloisVerdict::RejectedA5);
    auto reducible = certify_a5_over_q(qcurve("(x^2+1)(x^4+1)"));
    CHECK(reducible.verdict == GaloisVerdict::RejectedA5);

    GaloisOptions few;
    few.samples = 3;
    CHECK(certify_a5_over_q(qcurve("x^6+2x^5+5x^4-2x^3+10x^2+8x+1"), few).verdict != GaloisVerdict::CertifiedA5);
    // rational coefficients are cleared first
    auto scaled = certify_a5_over_q(qcurve("x^6 + x^5 + 5/4x^4 - 1/4x^3 + 5/8x^2 + 1/4x + 1/64"));
    CHECK(scaled.verdict == GaloisVerdict::CertifiedA5);
}

TEST_CASE("residual decreases with the sample count") {
    const double r = a5_cycle_types().escape_ratio();
    double prev = 1.0;
    for (int n = 1; n <= 300; n += 37) {
        double cur = std::pow(r, n);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("certification over F_p(T)") {
    auto t2 = certify_a5_over_fpT(fcurve("x^6+2x^5+2x^4+2Tx^3+x^2+2x+1", 3));
    CHECK(t2.verdict == GaloisVerdict::CertifiedA5);
    CHECK(t2.samples == 200);
    CHECK(t2.max_degree_used >= 6);

    auto cyc = certify_a5_over_fpT(fcurve("x^6 + T", 5));
    CHECK(cyc.verdict == GaloisVerdict::RejectedA5);

    GaloisOptions tight;
    tight.max_ext_degree = 2;
    try {
        certify_a5_over_fpT(fcurve("x^6+2x^5+2x^4+2Tx^3+x^2+2x+1", 3), tight);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExhaustedSpecializations);
    }
    // fixed seed gives the same certificate
    auto a = certify_a5_over_fpT(fcurve("x^6+2x^5+(T+1)x^3+3x+1", 5));
    auto b = certify_a5_over_fpT(fcurve("x^6+2x^5+(T+1)x^3+3x+1", 5));
    CHECK(a.verdict == GaloisVerdict::CertifiedA5);
    CHECK(a.counts == b.counts);
    CHECK(a.witnesses == b.witnesses);
}
