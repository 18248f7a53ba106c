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


// Table fixtures, table reproduction, the Brumer parameter scan and the
// pipeline tying hypotheses, classification and prime splitting together.

#ifndef G2SS_HARNESS_HPP
#define G2SS_HARNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "g2ss/cartier.hpp"
#include "g2ss/galois.hpp"
#include "g2ss/quadorder.hpp"

namespace g2ss {

struct FixtureRow {
    int table_id = 0;
    std::string b, c, d;
    u64 p = 0;  // 0 for rows over Q
    std::string expected_poly;
    std::string expected_class;  // Supersingular | NotSupersingular | "-"
    std::string disc;            // Table 1 only
    int line = 0;
};

/// CSV with header table_id,b,c,d,p,expected_poly,expected_class,disc; '#' lines are comments.
std::vector<FixtureRow> parse_fixtures(const std::string& csv);
const std::string& builtin_fixtures_csv();
std::vector<FixtureRow> rows_of_table(const std::vector<FixtureRow>& all, int table_id);

/// Reproduction runs use N = 200, seed 0x5EED, residual threshold 1e-20.
GaloisOptions table_galois_options();

struct RowReport {
    FixtureRow row;
    std::string derived_poly;
    std::string expected_canonical;
    bool poly_match = false;
    bool class_match = false;
    bool disc_square = false;  // Table 1: disc(f) a nonzero square integer
    std::optional<CartierManinReport> cartier;
    std::optional<GaloisCertificate> galois;
    std::string error;
    bool passed = false;
};

struct CoprimalityReport {
    int size = 0;
    std::vector<std::pair<int, int>> non_coprime;  // index pairs i < j
    bool all_coprime() const { return non_coprime.empty(); }
};
CoprimalityReport nonisogeny_gcd_check(const std::vector<mpz_class>& discs);

struct TableReport {
    int id = 0;
    std::vector<RowReport> rows;
    int failures = 0;
    std::optional<CoprimalityReport> coprimality;
    std::vector<std::string> notes;
    bool passed = false;
};

/// Per-row results go to on_row as they finish; row failures are recorded, not thrown.
TableReport reproduce_table(int id, const std::vector<FixtureRow>& fixtures, const GaloisOptions& opt,
                            const std::function<void(const RowReport&)>& on_row = {});

struct GridSpec {
    int t_degree = 1;   // parameters range over F_p[T] of degree <= t_degree
    long sample = 0;    // 0: exhaustive, else a seeded sample of this many grid points
};
/// "linear", "constant", "deg=K", optionally followed by ",sample=N".
GridSpec parse_grid(const std::string& text);

struct ScanJob {
    u64 p = 5;
    GridSpec grid;
    bool require_separable = true;
    bool only_supersingular = true;
    bool certify_a5 = true;  // run the Galois sieve on emitted curves
    i64 d = 5;
    u64 seed = 0x5EED;
    GaloisOptions galois = table_galois_options();
    unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanHit {
    long index = 0;
    PolyT<Fq> b, c, d;
    SexticFq curve;
    CartierManinReport cartier;
    std::optional<GaloisCertificate> galois;
    SplittingType splitting = SplittingType::Inert;
    bool red_flag = false;  // CertifiedA5 and Supersingular and p split in Q(sqrt d)
    std::string error;
};

struct ScanSummary {
    u64 p = 0;
    long grid_points = 0;
    long enumerated = 0;
    long separable = 0;
    long supersingular = 0;
    long emitted = 0;
    long certified = 0;
    long supersingular_certified = 0;
    long red_flags = 0;
    long order_disagreements = 0;  // M*M^(p) and M^(p)*M disagree
    long errors = 0;
};

/// Hits reach the sink in grid order regardless of threading.
ScanSummary scan(const ScanJob& job, const std::function<void(const ScanHit&)>& sink);

enum class Outcome { NonSupersingular, Supersingular, CharacteristicZero };
const char* to_string(Outcome o) noexcept;

struct PipelineVerdict {
    std::string domain;
    bool separable = false;
    std::optional<GaloisCertificate> galois;
    std::optional<CartierManinReport> cartier;
    std::optional<SplittingType> splitting;
    i64 d = 5;
    Outcome outcome = Outcome::NonSupersingular;
    bool hypotheses_met = false;  // separable and CertifiedA5
    bool red_flag = false;
    std::vector<std::string> notes;
    bool consistent() const { return !red_flag; }
};

PipelineVerdict classification_pipeline(const SexticCurve& f, i64 d, const GaloisOptions& opt = table_galois_options());

}  // namespace g2ss

#endif
