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


// Small constructors shared by the unit tests.

#ifndef G2SS_TEST_UTIL_HPP
#define G2SS_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "g2ss/ffield.hpp"

namespace g2ss::testing {

inline Poly<Fq> fpoly(const ExtField& f, std::initializer_list<i64> low_to_high) {
    std::vector<Fq> c;
    for (i64 v : low_to_high) c.push_back(f.from_int(v));
    return Poly<Fq>(std::move(c), f.one());
}

inline Poly<Rational> qpoly(std::initializer_list<i64> low_to_high) {
    std::vector<Rational> c(low_to_high.begin(), low_to_high.end());
    return Poly<Rational>(std::move(c), Rational(1));
}

}  // namespace g2ss::testing

#endif
