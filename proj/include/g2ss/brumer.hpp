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


// Monic sextics y^2 = f(x) with coefficients in K[T], and Brumer's family.

#ifndef G2SS_BRUMER_HPP
#define G2SS_BRUMER_HPP

#include <string>
#include <variant>

#include "g2ss/ffield.hpp"

namespace g2ss {

template <FieldElement K>
using PolyT = Poly<K>;  // a polynomial in T
template <FieldElement K>
using PolyXT = Poly<Poly<K>>;  // a polynomial in x over K[T]

template <FieldElement K>
struct Sextic {
    PolyXT<K> f;
    bool function_field = false;  // declared over K(T), even if no coefficient mentions T
    bool separable = false;
    PolyT<K> clearing;  // f = clearing^6 * f_orig(x / clearing); 1 when nothing was cleared

    PolyT<K> a(int i) const { return f.coeff(i); }
    const K& unit() const { return f.unit().unit(); }
    int t_degree() const;
};

using SexticQ = Sextic<Rational>;
using SexticFq = Sextic<Fq>;
using SexticCurve = std::variant<SexticQ, SexticFq>;

template <FieldElement K>
int Sextic<K>::t_degree() const {
    int d = 0;
    for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

std::string domain_name(const SexticQ& c);
std::string domain_name(const SexticFq& c);

/// Coefficient-wise evaluation T = t.
Poly<Rational> specialize(const PolyXT<Rational>& f, const Rational& t);
Poly<Fq> specialize(const PolyXT<Fq>& f, const Fq& t);

/// disc_x(f) in K[T] by fraction-free elimination.
PolyT<Rational> discriminant_t(const PolyXT<Rational>& f);
PolyT<Fq> discriminant_t(const PolyXT<Fq>& f);

/// Exact: nonzero specialisations prove separability, and more vanishing
/// points than the degree bound of disc_x(f) prove the opposite.
bool is_separable(const PolyXT<Rational>& f);
bool is_separable(const PolyXT<Fq>& f);

/// Validates monic degree 6; NonSeparable unless allow_singular.
SexticQ make_sextic(PolyXT<Rational> f, bool function_field, bool allow_singular = false);
SexticFq make_sextic(PolyXT<Fq> f, bool function_field, bool allow_singular = false);

PolyXT<Rational> brumer_coefficients(const PolyT<Rational>& b, const PolyT<Rational>& c, const PolyT<Rational>& d);
PolyXT<Fq> brumer_coefficients(const PolyT<Fq>& b, const PolyT<Fq>& c, const PolyT<Fq>& d);

SexticQ brumer_polynomial(const PolyT<Rational>& b, const PolyT<Rational>& c, const PolyT<Rational>& d,
                          bool function_field, bool allow_singular = false);
SexticFq brumer_polynomial(const PolyT<Fq>& b, const PolyT<Fq>& c, const PolyT<Fq>& d, bool function_field,
                           bool allow_singular = false);

/// BadReduction when p divides a denominator.
PolyXT<Fq> reduce_coefficients(const PolyXT<Rational>& f, const ExtField& field);
SexticFq reduce_mod_p(const SexticQ& f, u64 p, bool allow_singular = false);

struct Char3IdentityReport {
    bool a1_equals_a5 = false;
    bool a4_equals_a2_minus_a1 = false;
    PolyT<Fq> obstruction;  // a1^4 + a2^4; a Brumer reduction is case-2 supersingular only if it vanishes
};

/// IdentityViolation if either identity fails; WrongCharacteristic off char 3.
Char3IdentityReport brumer_char3_identities(const SexticFq& f);

bool is_valid_f9_epsilon(const Fq& eps);

struct F9FamilyCurve {
    SexticFq curve;
    PolyT<Fq> b;
    PolyT<Fq> bd;  // C^2 + (eps+1)C - 1
    bool cleared = false;
};

/// C, B in F_9[T] (or any F_{3^k}[T] containing eps). Throws BadEpsilon, DivisionByZero,
/// IdentityViolation (case-2 relations fail on a1, a2, a4, a5).
F9FamilyCurve brumer_f9_family(const PolyT<Fq>& c, const PolyT<Fq>& b, const Fq& eps, bool allow_singular = true);

}  // namespace g2ss

#endif
