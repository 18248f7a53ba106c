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


// Cartier-Manin matrix of y^2 = f(x) in odd characteristic and the
// supersingularity test M * M^(p) = 0.

#ifndef G2SS_CARTIER_HPP
#define G2SS_CARTIER_HPP

#include <array>
#include <vector>

#include "g2ss/brumer.hpp"

namespace g2ss {

enum class Verdict { Supersingular, NotSupersingular };
enum class CaseTag { Case1, Case2, NotSS };

const char* to_string(Verdict v) noexcept;
const char* to_string(CaseTag c) noexcept;

using Mat2 = std::array<std::array<PolyT<Fq>, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_frobenius(const Mat2& a);
bool is_zero(const Mat2& a);

struct CartierManinReport {
    u64 p = 0;
    // coefficients of h = f^((p-1)/2); M is stored without p-th roots
    PolyT<Fq> c_p_minus_1, c_p_minus_2, c_2p_minus_1, c_2p_minus_2;
    Mat2 m;
    Mat2 m_frob;
    Mat2 product;            // M * M^(p), decides the verdict
    Mat2 invariant_product;  // M^(p) * M, unchanged by x -> x/lambda
    Verdict verdict = Verdict::NotSupersingular;
    CaseTag case_tag = CaseTag::NotSS;
    bool orders_agree = true;
};

/// Closed form on the four coefficients, division-free.
CaseTag case_tag_of(const PolyT<Fq>& c_pm1, const PolyT<Fq>& c_pm2, const PolyT<Fq>& c_2pm1,
                    const PolyT<Fq>& c_2pm2, u64 p);

/// Throws NonSeparable, WrongCharacteristic.
CartierManinReport cartier_manin(const SexticFq& f, u64 p);

/// Throws NonSeparable, WrongCharacteristic.
Verdict char3_criterion(const SexticFq& f);

/// Common roots of z^4+1 and z^3+z-1 in F_q, q a power of 3 up to 81.
std::vector<Fq> char3_brumer_obstruction(u64 q);

}  // namespace g2ss

#endif
