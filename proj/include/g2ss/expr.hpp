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

// Parsing of textual polynomials such as "x^6 + 2Tx^3 + (T + 1)x^2 - 1/2".
// Variables: x, the function-field variable (T by default) and s, the
// generator of an extension field. Multiplication may be implicit.

#ifndef G2SS_EXPR_HPP
#define G2SS_EXPR_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "g2ss/ffield.hpp"

namespace g2ss {

struct Monomial {
    int x = 0;
    int t = 0;
    int s = 0;
    auto operator<=>(const Monomial&) const = default;
};

using SparsePoly = std::map<Monomial, mpq_class>;

/// Throws Parse with the offending position on malformed input.
SparsePoly parse_expression(std::string_view text, char tvar = 'T');

int x_degree(const SparsePoly& p);
bool mentions_t(const SparsePoly& p);

/// Q[T][x]; rejects `s`.
Poly<Poly<Rational>> to_rational_xt(const SparsePoly& p);
/// F_q[T][x]; `s` maps to the generator of `field`.
Poly<Poly<Fq>> to_fq_xt(const SparsePoly& p, const ExtField& field);

/// Parameter expressions must not mention x.
Poly<Rational> to_rational_t(const SparsePoly& p);
Poly<Fq> to_fq_t(const SparsePoly& p, const ExtField& field);

}  // namespace g2ss

#endif
