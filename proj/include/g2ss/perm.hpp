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


// Permutations of the six points of P^1(F_5), indexed 0 = infinity, 1 + z for z in F_5.

#ifndef G2SS_PERM_HPP
#define G2SS_PERM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2ss/ffield.hpp"

namespace g2ss {

inline constexpr int kPoints = 6;
using Perm = std::array<std::uint8_t, kPoints>;

Perm identity_perm();
/// (a*b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_even(const Perm& a);
DegreePattern cycle_type(const Perm& a);
std::string pattern_to_string(const DegreePattern& pat);
/// Accepts "2^2 1^2", "5 1", "1^6".
DegreePattern pattern_from_string(const std::string& text);

std::vector<Perm> closure(const std::vector<Perm>& generators);

Perm psl25_translation();  // z -> z + 1
Perm psl25_inversion();    // z -> -1/z
std::vector<Perm> build_psl25();
std::vector<Perm> alternating_group6();

std::map<DegreePattern, int> cycle_census(const std::vector<Perm>& group);

/// Number of orbits on ordered pairs of distinct points (1 iff doubly transitive).
int ordered_pair_orbits(const std::vector<Perm>& group);

}  // namespace g2ss

#endif
