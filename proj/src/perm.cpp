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


#include "g2ss/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace g2ss {

Perm identity_perm() {
    Perm p{};
    for (int i = 0; i < kPoints; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r{};
    for (int i = 0; i < kPoints; ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r{};
    for (int i = 0; i < kPoints; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

DegreePattern cycle_type(const Perm& a) {
    std::array<bool, kPoints> seen{};
    DegreePattern out;
    for (int i = 0; i < kPoints; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool is_even(const Perm& a) {
    int transpositions = 0;
    for (int len : cycle_type(a)) transpositions += len - 1;
    return transpositions % 2 == 0;
}

std::string pattern_to_string(const DegreePattern& pat) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pat.size();) {
        std::size_t j = i;
        while (j < pat.size() && pat[j] == pat[i]) ++j;
        if (i) out << ' ';
        out << pat[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

DegreePattern pattern_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    DegreePattern out;
    while (in >> tok) {
        auto caret = tok.find('^');
        try {
            int part = std::stoi(tok.substr(0, caret));
            int mult = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            if (part < 1 || mult < 1) throw std::invalid_argument(tok);
            out.insert(out.end(), static_cast<std::size_t>(mult), part);
        } catch (const std::exception&) {
            fail(ErrorCode::Parse, "bad cycle type '" + text + "'");
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Perm> closure(const std::vector<Perm>& generators) {
    std::set<Perm> seen{identity_perm()};
    std::vector<Perm> frontier{identity_perm()};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& g : frontier)
            for (const Perm& s : generators) {
                Perm h = compose(s, g);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Perm psl25_translation() {
    Perm p{};
    p[0] = 0;
    for (int z = 0; z < 5; ++z) p[1 + z] = static_cast<std::uint8_t>(1 + (z + 1) % 5);
    return p;
}

Perm psl25_inversion() {
    const PrimeField f5(5);
    Perm p{};
    p[0] = 1;  // infinity -> 0
    p[1] = 0;  // 0 -> infinity
    for (u64 z = 1; z < 5; ++z) p[1 + z] = static_cast<std::uint8_t>(1 + f5.neg(f5.inv(z)));
    return p;
}

std::vector<Perm> build_psl25() { return closure({psl25_translation(), psl25_inversion()}); }

std::vector<Perm> alternating_group6() {
    std::vector<Perm> out;
    Perm p = identity_perm();
    do {
        if (is_even(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::map<DegreePattern, int> cycle_census(const std::vector<Perm>& group) {
    std::map<DegreePattern, int> out;
    for (const Perm& g : group) ++out[cycle_type(g)];
    return out;
}

int ordered_pair_orbits(const std::vector<Perm>& group) {
    std::set<std::pair<int, int>> seen;
    int orbits = 0;
    for (int a = 0; a < kPoints; ++a)
        for (int b = 0; b < kPoints; ++b) {
            if (a == b || seen.count({a, b})) continue;
            ++orbits;
            for (const Perm& g : group) seen.insert({g[a], g[b]});
        }
    return orbits;
}

}  // namespace g2ss
