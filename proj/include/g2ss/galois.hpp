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


// Heuristic certification that a sextic has Galois group A5 acting as
// PSL_2(F_5) on P^1(F_5), from Frobenius cycle types.

#ifndef G2SS_GALOIS_HPP
#define G2SS_GALOIS_HPP

#include <map>
#include <set>
#include <string>

#include "g2ss/brumer.hpp"
#include "g2ss/perm.hpp"

namespace g2ss {

struct CycleTypeSet {
    std::set<DegreePattern> allowed;               // cycle types of PSL_2(F_5) on 6 points
    std::map<DegreePattern, int> a5_census;        // over its 60 elements
    std::map<DegreePattern, int> a6_census;        // over the 360 elements of A_6
    int a6_allowed_count = 0;                      // elements of A_6 with an allowed type
    bool a6_unique_overgroup = false;              // every group strictly between is A_6
    bool three_types_force_a5 = false;             // subgroups of A5 showing 2^2 1^2, 3^2, 5 1 are A5
    double escape_ratio() const { return static_cast<double>(a6_allowed_count) / 360.0; }
};

/// Derived once by enumeration and cached.
const CycleTypeSet& a5_cycle_types();

enum class GaloisVerdict { CertifiedA5, RejectedA5, Inconclusive };
const char* to_string(GaloisVerdict v) noexcept;

struct GaloisOptions {
    int samples = 200;
    u64 seed = 0x5EED;
    unsigned max_ext_degree = 8;
    double residual_threshold = 1e-20;
};

struct GaloisCertificate {
    GaloisVerdict verdict = GaloisVerdict::Inconclusive;
    std::string reason;
    int samples = 0;
    std::map<DegreePattern, std::string> witnesses;  // first sample showing each pattern
    std::map<DegreePattern, int> counts;
    bool square_discriminant = false;
    bool irreducible_evidence = false;
    double residual = 1.0;  // escape_ratio^samples: chance an A_6 group hides under equidistribution
    unsigned max_degree_used = 1;  // largest place degree sampled (function fields)
    bool heuristic = true;
};

/// Sieve over primes p >= 101 not dividing disc(f).
GaloisCertificate certify_a5_over_q(const SexticQ& f, const GaloisOptions& opt = {});

/// Sieve over places t in F_{p^k}, one per Frobenius orbit. Throws ExhaustedSpecializations.
GaloisCertificate certify_a5_over_fpT(const SexticFq& f, const GaloisOptions& opt = {});

/// Dispatch on the coefficient domain.
GaloisCertificate certify_a5(const SexticCurve& f, const GaloisOptions& opt = {});

/// True iff u is a square in F_q[T] (u != 0).
bool is_square_poly(const PolyT<Fq>& u);

/// No k in 1..5 is a sub-sum of every pattern: no proper factor can exist.
bool patterns_force_irreducible(const std::vector<DegreePattern>& patterns);

/// The f with denominators cleared by x -> x/lambda, integral and monic.
PolyXT<Rational> clear_denominators(const PolyXT<Rational>& f, mpz_class* lambda = nullptr);

}  // namespace g2ss

#endif
