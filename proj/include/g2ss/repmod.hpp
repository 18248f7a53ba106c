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


// The heart of the PSL_2(F_5) permutation module on P^1(F_5) over F_2 and F_4:
// commutants, simplicity, and the census of G-stable subalgebras of Mat_4(F_2).

#ifndef G2SS_REPMOD_HPP
#define G2SS_REPMOD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2ss/perm.hpp"

namespace g2ss {

// F_4 = {0, 1, w, w+1} encoded 0..3 as bit pairs, w^2 = w + 1. F_2 is {0, 1}.
using F4 = std::uint8_t;
inline constexpr F4 kOmega = 2;
F4 f4_add(F4 a, F4 b) noexcept;
F4 f4_mul(F4 a, F4 b) noexcept;
F4 f4_inv(F4 a);

enum class BaseField { F2, F4 };
const char* to_string(BaseField f) noexcept;

struct Matrix {
    int n = 0;
    std::vector<F4> a;  // row-major

    Matrix() = default;
    explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size * size), 0) {}
    static Matrix identity(int size);
    F4& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    F4 at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
    bool operator==(const Matrix&) const = default;
    bool operator<(const Matrix& o) const { return a < o.a; }
};

using Vec = std::vector<F4>;

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Vec operator*(const Matrix& m, const Vec& v);
Matrix scale(F4 c, const Matrix& m);
/// Throws InvalidArgument on singular input.
Matrix invert(const Matrix& m);
/// F-dimension of the span of the given vectors (rows).
int rank(std::vector<Vec> rows, BaseField field);

// 4x4 matrices over F_2 packed into 16 bits, row i in bits 4i..4i+3.
using Bits16 = std::uint16_t;
inline constexpr Bits16 kBitsIdentity = 0x8421;
Bits16 bits_mul(Bits16 x, Bits16 y) noexcept;
Bits16 to_bits(const Matrix& m);
Matrix from_bits(Bits16 b);

struct GModule {
    BaseField field = BaseField::F2;
    int dim = 0;
    std::vector<Matrix> gens;
};

/// Action of a permutation of P^1(F_5) on the heart, basis {d_inf + d_z : z = 0..3}.
Matrix heart_matrix(const Perm& g);
GModule heart(BaseField field, const std::vector<Perm>& generators);
/// Elements of the F_2 heart as normalised even subsets (bit 5 cleared by complementation).
std::vector<unsigned> heart_point_sets();

struct CommutantReport {
    int dim = 0;  // over the module's base field
    std::vector<Matrix> basis;
    bool has_omega = false;  // an element with w^2 = w + 1, w != 0, 1 (F_2 modules, dim 2)
    Matrix omega;
    bool is_field = false;   // every nonzero element invertible
    bool split = false;      // contains an idempotent other than 0 and 1
};
CommutantReport commutant(const GModule& m);

struct SimplicityReport {
    bool simple = false;
    int vectors_checked = 0;
    Vec witness;            // spans a proper submodule when not simple
    int witness_span_dim = 0;
};
SimplicityReport is_simple(const GModule& m);

/// View an F_2-module with commuting w (w^2 = w + 1) as an F_4-module of half the dimension.
GModule as_f4_module(const GModule& m, const Matrix& omega);

enum class SubalgebraClass { ScalarsF2, FieldF4, MatTwoOverF4, FullMatFour };
const char* to_string(SubalgebraClass c) noexcept;

struct AlgebraCensus {
    std::map<SubalgebraClass, long> generator_counts;  // over all 2^16 generators u
    std::map<int, long> dimension_counts;
    int joins_checked = 0;
    bool dim2_is_commutant = true;
    bool dim8_is_centralizer = true;
    bool very_simple_ok = true;
    std::vector<std::string> gaps;
};

/// Throws UnexpectedAlgebra if a dimension outside {1, 2, 8, 16} appears.
AlgebraCensus classify_g_stable_algebras(const GModule& m, const Matrix& omega, u64 seed = 0x5EED, int joins = 2000);

struct RepReport {
    int group_order = 0;
    std::map<DegreePattern, int> cycle_census;
    bool doubly_transitive = false;
    bool faithful = false;
    int heart_elements = 0;
    SimplicityReport simple_f2;
    CommutantReport commutant_f2;
    bool omega_relation = false;
    SimplicityReport simple_f4;
    CommutantReport commutant_f4;
    SimplicityReport simple_f4_structure;  // Q_B as a 2-dimensional F_4-space via w
    CommutantReport commutant_f4_structure;
    bool commutant_basis_independent = false;
    AlgebraCensus census;
    bool passed = false;
};

RepReport verify_representations(u64 seed = 0x5EED);

}  // namespace g2ss

#endif
