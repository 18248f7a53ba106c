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


#include "g2ss/quadorder.hpp"

namespace g2ss {

bool is_squarefree_integer(i64 n) {
    if (n == 0) return false;
    u64 m = n < 0 ? static_cast<u64>(-n) : static_cast<u64>(n);
    for (u64 q = 2; q * q <= m; ++q) {
        if (m % (q * q) == 0) return false;
        if (m % q == 0) m /= q;
    }
    return true;
}

QuadraticOrder make_quadratic_order(i64 d, i64 c) {
    if (d < 2 || !is_squarefree_integer(d))
        fail(ErrorCode::InvalidArgument, "d = " + std::to_string(d) + " is not a square-free integer >= 2");
    if (c < 1) fail(ErrorCode::InvalidArgument, "conductor must be positive");
    return {d, c};
}

const char* to_string(Mod2TensorClass k) noexcept {
    switch (k) {
        case Mod2TensorClass::FieldF4: return "FieldF4";
        case Mod2TensorClass::SplitF2xF2: return "SplitF2xF2";
        case Mod2TensorClass::NonReduced: return "NonReduced";
    }
    return "?";
}

const char* to_string(SplittingType s) noexcept {
    switch (s) {
        case SplittingType::Split: return "Split";
        case SplittingType::Inert: return "Inert";
        case SplittingType::Ramified: return "Ramified";
    }
    return "?";
}

mpz_class order_discriminant(const QuadraticOrder& o) {
    mpz_class c = o.c, d = o.d;
    if (o.d % 4 == 1) return c * c * d;
    return 4 * c * c * d;
}

MinimalPolynomial generator_minpoly(const QuadraticOrder& o) {
    mpz_class c = o.c, d = o.d;
    if (o.d % 4 == 1) return {c, -(c * c * (d - 1) / 4)};
    return {0, -(c * c * d)};
}

Mod2TensorClass mod2_tensor_class(const QuadraticOrder& o) {
    // factor g(X) mod 2 by counting roots in F_2
    MinimalPolynomial g = generator_minpoly(o);
    const int b = mpz_odd_p(g.lin.get_mpz_t()) ? 1 : 0;
    const int c0 = mpz_odd_p(g.cst.get_mpz_t()) ? 1 : 0;
    int roots = 0;
    for (int x = 0; x < 2; ++x) roots += ((x * x + b * x + c0) % 2 == 0);
    if (roots == 0) return Mod2TensorClass::FieldF4;
    // g is monic of degree 2, so one root in F_2 means it is a square
    return roots == 2 ? Mod2TensorClass::SplitF2xF2 : Mod2TensorClass::NonReduced;
}

int legendre(i64 a, u64 p) {
    PrimeField f(p);
    const u64 r = f.pow(f.reduce(a), (p - 1) / 2);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

SplittingType splitting_type(u64 p, i64 d) {
    if (p == 2) {
        if (((d % 8) + 8) % 8 != 5)
            fail(ErrorCode::Unsupported, "p = 2 is only classified for d = 5 mod 8");
        return SplittingType::Inert;
    }
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    switch (legendre(d, p)) {
        case 0: return SplittingType::Ramified;
        case 1: return SplittingType::Split;
        default: return SplittingType::Inert;
    }
}

}  // namespace g2ss
