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


#include <set>
#include <sstream>

#include "doctest.h"
#include "g2ss/expr.hpp"
#include "g2ss/harness.hpp"
#include "g2ss/serialize.hpp"

using namespace g2ss;

namespace {

const std::vector<FixtureRow>& all_rows() {
    static const auto rows = parse_fixtures(builtin_fixtures_csv());
    return rows;
}

std::vector<FixtureRow> pick(int table, const std::string& b, const std::string& c, const std::string& d) {
    for (const auto& r : all_rows())
        if (r.table_id == table && r.b == b && r.c == c && r.d == d) return {r};
    FAIL("fixture row missing");
    return {};
}

SexticCurve fixture_curve(const FixtureRow& r) {
    return parse_curve(r.expected_poly, r.p);
}

std::vector<std::string> scan_lines(const ScanJob& job, ScanSummary* sum = nullptr) {
    std::vector<std::string> out;
    auto s = scan(job, [&](const ScanHit& h) { out.push_back(report_json(h).dump()); });
    if (sum) *sum = s;
    return out;
}

}  // namespace

TEST_CASE("fixture file: row counts and header handling") {
    const auto& rows = all_rows();
    const std::map<int, std::size_t> expected{{1, 81}, {2, 10}, {3, 22}, {4, 24}, {5, 12}, {6, 8}};
    for (auto [id, n] : expected) CHECK(rows_of_table(rows, id).size() == n);
    for (const auto& r : rows) {
        if (r.table_id == 1) {
            CHECK(r.p == 0);
            CHECK(!r.disc.empty());
        } else {
            CHECK(r.expected_class == (r.table_id == 4 ? "Supersingular" : "NotSupersingular"));
        }
    }
    CHECK(rows_of_table(rows, 2).front().p == 3);
    CHECK(rows_of_table(rows, 6).front().p == 11);

    CHECK_THROWS_AS(parse_fixtures("# only a comment\n"), Error);
    CHECK_THROWS_AS(parse_fixtures("table_id,b,c,d,p,expected_poly,expected_class,disc\n1,0,0\n"), Error);
    const auto one = parse_fixtures(
        "# c\ntable_id,b,c,d,p,expected_poly,expected_class,disc\n\n# c\n4,0,1,T,5,x^6,Supersingular,\n");
    REQUIRE(one.size() == 1);
    CHECK(one[0].line == 5);
    CHECK(one[0].disc.empty());
}

TEST_CASE("fixture invariant: every stored polynomial is a monic sextic in its domain") {
    for (const auto& r : all_rows()) {
        const SexticCurve c = parse_curve(r.expected_poly, r.p, 1, 'T', true);
        std::visit(
            [&](const auto& f) {
                CHECK(f.f.degree() == 6);
                CHECK(f.f.leading().is_one());
            },
            c);
    }
}

TEST_CASE("reproduce_table: single rows") {
    const auto opt = table_galois_options();
    SUBCASE("supersingular row over F_5(T)") {
        auto rep = reproduce_table(4, pick(4, "0", "1", "T"), opt);
        REQUIRE(rep.rows.size() == 1);
        const auto& r = rep.rows[0];
        CHECK(r.poly_match);
        CHECK(r.cartier->verdict == Verdict::Supersingular);
        CHECK(r.galois->verdict == GaloisVerdict::CertifiedA5);
        CHECK(rep.passed);
    }
    SUBCASE("non-supersingular row over F_11(T)") {
        auto rep = reproduce_table(6, pick(6, "0", "0", "T + 6"), opt);
        CHECK(rep.rows[0].poly_match);
        CHECK(rep.rows[0].cartier->verdict == Verdict::NotSupersingular);
        CHECK(rep.passed);
    }
    SUBCASE("row over Q") {
        auto rep = reproduce_table(1, pick(1, "0", "0", "0"), opt);
        const auto& r = rep.rows[0];
        CHECK(r.poly_match);
        CHECK(r.disc_square);
        CHECK(r.galois->verdict == GaloisVerdict::CertifiedA5);
        CHECK(r.galois->residual < 1e-20);
        REQUIRE(rep.coprimality);
        CHECK(rep.coprimality->all_coprime());
        CHECK(rep.passed);
    }
}

TEST_CASE("reproduce_table: corrupted fixtures are reported row by row") {
    auto rows = pick(4, "0", "1", "T");
    rows.push_back(rows[0]);
    rows.push_back(rows[0]);
    rows[1].expected_poly = "x^6 + 2x^5 + (T + 2)x^3 + 3x + 1";
    rows[2].expected_class = "NotSupersingular";
    int seen = 0;
    auto rep = reproduce_table(4, rows, table_galois_options(), [&](const RowReport&) { ++seen; });
    CHECK(seen == 3);
    CHECK(rep.failures == 2);
    CHECK_FALSE(rep.passed);
    CHECK(rep.rows[0].passed);
    CHECK_FALSE(rep.rows[1].poly_match);
    CHECK(rep.rows[1].error.find("FixtureMismatch") == 0);
    CHECK(rep.rows[2].poly_match);
    CHECK_FALSE(rep.rows[2].class_match);
    CHECK(rep.rows[2].error.find("class") != std::string::npos);

    CHECK_THROWS_AS(reproduce_table(7, rows, table_galois_options()), Error);
    CHECK_THROWS_AS(reproduce_table(2, rows, table_galois_options()), Error);
}

TEST_CASE("nonisogeny_gcd_check") {
    const mpz_class a = mpz_class(1061) * 1061, b = mpz_class(2293) * 2293;
    CHECK(nonisogeny_gcd_check({a, b}).all_coprime());
    const auto self = nonisogeny_gcd_check({a, a});
    REQUIRE(self.non_coprime.size() == 1);
    CHECK(self.non_coprime[0] == std::pair<int, int>{0, 1});

    std::vector<mpz_class> column;
    for (const auto& r : rows_of_table(all_rows(), 1)) column.emplace_back(r.disc);
    const auto full = nonisogeny_gcd_check(column);
    CHECK(full.size == 81);
    CHECK(full.all_coprime());
    for (const auto& x : column) CHECK_FALSE(nonisogeny_gcd_check({x, x}).all_coprime());
}

TEST_CASE("grid specs") {
    CHECK(parse_grid("linear").t_degree == 1);
    CHECK(parse_grid("constant").t_degree == 0);
    CHECK(parse_grid("deg=2").t_degree == 2);
    const auto g = parse_grid("linear,sample=300");
    CHECK(g.t_degree == 1);
    CHECK(g.sample == 300);
    for (const char* bad : {"", "cubic", "deg=-1", "deg=9", "linear,constant", "linear,sample=0", "sample=5"})
        CHECK_THROWS_AS(parse_grid(bad), Error);
}

TEST_CASE("scan: constant grid over F_3 has no supersingular Brumer curves") {
    ScanJob job;
    job.p = 3;
    job.grid = parse_grid("constant");
    job.certify_a5 = false;
    ScanSummary sum;
    const auto lines = scan_lines(job, &sum);
    CHECK(sum.grid_points == 27);
    CHECK(sum.enumerated == 27);
    CHECK(sum.separable > 0);
    CHECK(sum.supersingular == 0);
    CHECK(lines.empty());
}

TEST_CASE("scan: deterministic, ordered and thread-count independent") {
    ScanJob job;
    job.p = 5;
    job.grid = parse_grid("linear,sample=400");
    job.only_supersingular = false;
    job.certify_a5 = false;
    job.threads = 1;
    ScanSummary s1, s2, s3;
    const auto a = scan_lines(job, &s1);
    const auto b = scan_lines(job, &s2);
    job.threads = 4;
    const auto c = scan_lines(job, &s3);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(s1.enumerated == 400);
    CHECK(s1.emitted == s1.separable);
    long prev = -1;
    for (const auto& l : a) {
        const long idx = json::parse(l)["index"].get<long>();
        CHECK(idx > prev);
        CHECK(idx < s1.grid_points);
        prev = idx;
    }
    job.seed = 7;
    CHECK(scan_lines(job) != a);
}

TEST_CASE("scan: parameters follow the index and keep the filters") {
    ScanJob job;
    job.p = 5;
    job.grid = parse_grid("linear,sample=2000");
    job.galois.samples = 60;
    std::vector<ScanHit> hits;
    const auto sum = scan(job, [&](const ScanHit& h) { hits.push_back(h); });
    CHECK(sum.red_flags == 0);
    CHECK(sum.order_disagreements == 0);
    for (const auto& h : hits) {
        CHECK(h.curve.separable);
        CHECK(h.cartier.verdict == Verdict::Supersingular);
        REQUIRE(h.galois);
        CHECK(h.splitting == SplittingType::Ramified);
        const auto rebuilt = brumer_polynomial(h.b, h.c, h.d, true);
        CHECK(rebuilt.f == h.curve.f);
        const auto digit = [](const PolyT<Fq>& u) {
            long v = 0;
            for (int k = 1; k >= 0; --k) v = v * 5 + static_cast<long>(u.coeff(k).index());
            return v;
        };
        CHECK(h.index == (digit(h.b) * 25 + digit(h.c)) * 25 + digit(h.d));
    }
}

TEST_CASE("pipeline verdicts") {
    SUBCASE("supersingular branch over F_5(T), 5 ramifies") {
        const auto v = classification_pipeline(fixture_curve(pick(4, "0", "1", "T")[0]), 5);
        CHECK(v.hypotheses_met);
        CHECK(v.outcome == Outcome::Supersingular);
        CHECK(v.splitting == SplittingType::Ramified);
        CHECK_FALSE(v.red_flag);
    }
    SUBCASE("non-supersingular branch over F_3(T), 3 inert") {
        const auto v = classification_pipeline(fixture_curve(pick(2, "0", "1", "T")[0]), 5);
        CHECK(v.hypotheses_met);
        CHECK(v.outcome == Outcome::NonSupersingular);
        CHECK(v.splitting == SplittingType::Inert);
    }
    SUBCASE("11 splits, so a certified curve must be non-supersingular") {
        const auto v = classification_pipeline(fixture_curve(pick(6, "0", "0", "T + 6")[0]), 5);
        CHECK(v.splitting == SplittingType::Split);
        CHECK(v.hypotheses_met);
        CHECK(v.outcome == Outcome::NonSupersingular);
        CHECK(v.consistent());
    }
    SUBCASE("over Q only the characteristic-zero half runs") {
        const auto v = classification_pipeline(fixture_curve(pick(1, "0", "0", "0")[0]), 5);
        CHECK(v.outcome == Outcome::CharacteristicZero);
        CHECK(v.hypotheses_met);
        CHECK_FALSE(v.cartier);
    }
    CHECK_THROWS_AS(classification_pipeline(fixture_curve(pick(1, "0", "0", "0")[0]), 12), Error);
}

TEST_CASE("curve JSON: nested coefficient arrays and round trips") {
    const SexticCurve c = parse_curve("x^6 + 2x^5 + (T + 1)x^3 + 3x + 1", 5);
    const json j = curve_json(c);
    CHECK(j["domain"] == "F_5(T)");
    CHECK(j["coefficients"][3] == json::array({"1", "1"}));
    CHECK(j["coefficients"][2] == json::array());
    CHECK(j["coefficients"][6] == json::array({"1"}));
    CHECK(j["text"] == "x^6 + 2*x^5 + (T + 1)*x^3 + 3*x + 1");
    const SexticCurve back = curve_from_json(j);
    CHECK(std::get<SexticFq>(back).f == std::get<SexticFq>(c).f);
    CHECK(std::get<SexticFq>(back).function_field);

    const SexticCurve q = parse_curve("x^6 + 2x^4 + 2x^3 + 5x^2 + 6x + 1", 0);
    const json jq = curve_json(q);
    CHECK(jq["domain"] == "Q");
    CHECK(jq["coefficients"] == json::array({"1", "6", "5", "2", "2", "0", "1"}));
    CHECK(std::get<SexticQ>(curve_from_json(jq)).f == std::get<SexticQ>(q).f);
    CHECK(std::get<SexticQ>(parse_curve(jq.dump(), 0)).f == std::get<SexticQ>(q).f);

    const SexticCurve u = parse_curve("x^6 + Ux + 1", 7, 1, 'U');
    CHECK(curve_text(u, 'U') == "x^6 + U*x + 1");
    CHECK(curve_json(u, 'U')["var"] == "U");

    const SexticCurve f9 = parse_curve(R"({"p":3,"ext_degree":2,"coefficients":["1","s","0","0","0","0","1"]})", 0);
    CHECK(curve_json(f9)["domain"] == "F_3^2");

    CHECK_THROWS_AS(parse_curve("{\"p\":5", 0), Error);
    CHECK_THROWS_AS(parse_curve(R"({"p":5})", 0), Error);
    CHECK_THROWS_AS(parse_curve("x^6 + 2x^3 + 1", 3), Error);  // (x + 1)^6 in char 3
}
