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


// Real quadratic fields Q(sqrt d), their orders Z[c*eta], and prime splitting.

#ifndef G2SS_QUADORDER_HPP
#define G2SS_QUADORDER_HPP

#include <string>

#include "g2ss/ffield.hpp"

namespace g2ss {

bool is_squarefree_integer(i64 n);

struct QuadraticOrder {
    i64 d;  // square-free, >= 2
    i64 c;  // conductor, >= 1
};

/// Throws InvalidArgument unless d is square-free and >= 2 and c >= 1.
QuadraticOrder make_quadratic_order(i64 d, i64 c);

enum class Mod2TensorClass { FieldF4, SplitF2xF2, NonReduced };
enum class SplittingType { Split, Inert, Ramified };

const char* to_string(Mod2TensorClass k) noexcept;
const char* to_string(SplittingType s) noexcept;

mpz_class order_discriminant(const QuadraticOrder& o);

// Minimal polynomial X^2 + lin*X + cst of the generator c*eta.
struct MinimalPolynomial {
    mpz_class lin;
    mpz_class cst;
};
MinimalPolynomial generator_minpoly(const QuadraticOrder& o);

Mod2TensorClass mod2_tensor_class(const QuadraticOrder& o);

int legendre(i64 a, u64 p);

/// p = 2 is accepted only for d = 5 mod 8 (Unsupported otherwise).
SplittingType splitting_type(u64 p, i64 d);

}  // namespace g2ss

#endif
