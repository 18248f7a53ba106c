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


#include "g2ss/repmod.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <thread>

namespace g2ss {

F4 f4_add(F4 a, F4 b) noexcept { return a ^ b; }

F4 f4_mul(F4 a, F4 b) noexcept {
    const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    const int c0 = (a0 & b0) ^ (a1 & b1);
    const int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return static_cast<F4>(c0 | (c1 << 1));
}

F4 f4_inv(F4 a) {
    for (F4 b = 1; b < 4; ++b)
        if (f4_mul(a, b) == 1) return b;
    fail(ErrorCode::DivisionByZero, "0 has no inverse in F_4");
}

const char* to_string(BaseField f) noexcept { return f == BaseField::F2 ? "F2" : "F4"; }

const char* to_string(SubalgebraClass c) noexcept {
    switch (c) {
        case SubalgebraClass::ScalarsF2: return "ScalarsF2";
        case SubalgebraClass::FieldF4: return "FieldF4";
        case SubalgebraClass::MatTwoOverF4: return "MatTwoOverF4";
        case SubalgebraClass::FullMatFour: return "FullMatFour";
    }
    return "?";
}

Matrix Matrix::identity(int size) {
    Matrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const F4 a = x.at(i, k);
            if (!a) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) ^= f4_mul(a, y.at(k, j));
        }
    return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] ^= y.a[i];
    return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
    Vec r(static_cast<std::size_t>(m.n), 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[static_cast<std::size_t>(i)] ^= f4_mul(m.at(i, j), v[static_cast<std::size_t>(j)]);
    return r;
}

Matrix scale(F4 c, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a) x = f4_mul(c, x);
    return r;
}

namespace {

// Row reduction in place; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(c)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const F4 inv = f4_inv(rows[r][static_cast<std::size_t>(c)]);
        for (auto& x : rows[r]) x = f4_mul(inv, x);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const F4 f = rows[i][static_cast<std::size_t>(c)];
            if (!f) continue;
            for (int j = 0; j < cols; ++j)
                rows[i][static_cast<std::size_t>(j)] ^= f4_mul(f, rows[r][static_cast<std::size_t>(j)]);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<Vec> nullspace(std::vector<Vec> rows, int cols) {
    std::vector<int> pivots = rref(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec> out;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = rows[r][static_cast<std::size_t>(free)];
        out.push_back(v);
    }
    return out;
}

int scalar_count(BaseField f) { return f == BaseField::F2 ? 2 : 4; }

// every vector of length n over the field, in lexicographic order
std::vector<Vec> all_vectors(int n, BaseField f) {
    const int q = scalar_count(f);
    int total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    std::vector<Vec> out;
    for (int idx = 0; idx < total; ++idx) {
        Vec v(static_cast<std::size_t>(n));
        for (int i = 0, r = idx; i < n; ++i, r /= q) v[static_cast<std::size_t>(i)] = static_cast<F4>(r % q);
        out.push_back(v);
    }
    return out;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](F4 x) { return x == 0; });
}

Matrix combine(const std::vector<Matrix>& basis, const Vec& coeffs) {
    Matrix r(basis[0].n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i]) r = r + scale(coeffs[i], basis[i]);
    return r;
}

int spin_dim(const GModule& m, const Vec& v) {
    std::vector<Vec> basis{v}, echelon{v};
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const Matrix& s : m.gens) {
            Vec w = s * basis[i];
            auto trial = echelon;
            trial.push_back(w);
            if (rank(trial, m.field) > static_cast<int>(echelon.size())) {
                echelon = std::move(trial);
                basis.push_back(w);
            }
        }
    return static_cast<int>(echelon.size());
}

// Linear span of packed 4x4 matrices over F_2, basis indexed by leading bit.
struct BitSpan {
    std::array<Bits16, 16> row{};
    int dim = 0;
    bool insert(Bits16 x) {
        for (int b = 15; b >= 0 && x; --b) {
            if (!((x >> b) & 1)) continue;
            if (!row[static_cast<std::size_t>(b)]) {
                row[static_cast<std::size_t>(b)] = x;
                ++dim;
                return true;
            }
            x ^= row[static_cast<std::size_t>(b)];
        }
        return false;
    }
    bool contains(Bits16 x) const {
        for (int b = 15; b >= 0 && x; --b)
            if ((x >> b) & 1) {
                if (!row[static_cast<std::size_t>(b)]) return false;
                x ^= row[static_cast<std::size_t>(b)];
            }
        return x == 0;
    }
    std::vector<Bits16> basis() const {
        std::vector<Bits16> out;
        for (Bits16 r : row)
            if (r) out.push_back(r);
        return out;
    }
    // fully reduced echelon form, unique per subspace
    std::vector<Bits16> canonical() const {
        std::array<Bits16, 16> r = row;
        for (int b = 15; b >= 0; --b) {
            if (!r[static_cast<std::size_t>(b)]) continue;
            for (int c = 15; c >= 0; --c)
                if (c != b && r[static_cast<std::size_t>(c)] && ((r[static_cast<std::size_t>(c)] >> b) & 1))
                    r[static_cast<std::size_t>(c)] ^= r[static_cast<std::size_t>(b)];
        }
        std::vector<Bits16> out;
        for (Bits16 x : r)
            if (x) out.push_back(x);
        return out;
    }
};

void close_algebra(BitSpan& s) {
    for (bool grew = true; grew && s.dim < 16;) {
        grew = false;
        const auto b = s.basis();
        for (Bits16 x : b)
            for (Bits16 y : b)
                if (s.insert(bits_mul(x, y))) grew = true;
    }
}

SubalgebraClass class_of_dim(int dim) {
    switch (dim) {
        case 1: return SubalgebraClass::ScalarsF2;
        case 2: return SubalgebraClass::FieldF4;
        case 8: return SubalgebraClass::MatTwoOverF4;
        case 16: return SubalgebraClass::FullMatFour;
        default: fail(ErrorCode::UnexpectedAlgebra, "G-stable algebra of F_2-dimension " + std::to_string(dim));
    }
}

}  // namespace

Matrix invert(const Matrix& m) {
    std::vector<Vec> rows;
    for (int i = 0; i < m.n; ++i) {
        Vec r(static_cast<std::size_t>(2 * m.n), 0);
        for (int j = 0; j < m.n; ++j) r[static_cast<std::size_t>(j)] = m.at(i, j);
        r[static_cast<std::size_t>(m.n + i)] = 1;
        rows.push_back(r);
    }
    auto piv = rref(rows);
    if (static_cast<int>(piv.size()) < m.n || piv[static_cast<std::size_t>(m.n - 1)] != m.n - 1)
        fail(ErrorCode::InvalidArgument, "matrix is singular");
    Matrix out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(m.n + j)];
    return out;
}

int rank(std::vector<Vec> rows, BaseField) { return static_cast<int>(rref(rows).size()); }

Bits16 bits_mul(Bits16 x, Bits16 y) noexcept {
    Bits16 r = 0;
    for (int i = 0; i < 4; ++i) {
        const unsigned row = (x >> (4 * i)) & 0xF;
        unsigned acc = 0;
        for (int k = 0; k < 4; ++k)
            if ((row >> k) & 1) acc ^= (y >> (4 * k)) & 0xF;
        r |= static_cast<Bits16>(acc << (4 * i));
    }
    return r;
}

Bits16 to_bits(const Matrix& m) {
    if (m.n != 4) fail(ErrorCode::InvalidArgument, "bit packing needs 4x4 matrices");
    Bits16 b = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (m.at(i, j) > 1) fail(ErrorCode::InvalidArgument, "bit packing needs F_2 entries");
            if (m.at(i, j)) b |= static_cast<Bits16>(1u << (4 * i + j));
        }
    return b;
}

Matrix from_bits(Bits16 b) {
    Matrix m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = (b >> (4 * i + j)) & 1;
    return m;
}

namespace {

// even subset of the six points -> heart coordinates
Vec heart_coords(unsigned set) {
    if (set & (1u << 5)) set ^= 0x3F;
    Vec v(4, 0);
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = (set >> (i + 1)) & 1;
    return v;
}

}  // namespace

Matrix heart_matrix(const Perm& g) {
    Matrix m(4);
    for (int j = 0; j < 4; ++j) {
        const unsigned image = (1u << g[0]) | (1u << g[static_cast<std::size_t>(j + 1)]);
        Vec col = heart_coords(image);
        for (int i = 0; i < 4; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

GModule heart(BaseField field, const std::vector<Perm>& generators) {
    GModule m;
    m.field = field;
    m.dim = 4;
    for (const Perm& g : generators) m.gens.push_back(heart_matrix(g));
    return m;
}

std::vector<unsigned> heart_point_sets() {
    std::set<unsigned> out;
    for (unsigned s = 0; s < 64; ++s) {
        if (__builtin_popcount(s) % 2) continue;
        out.insert((s & (1u << 5)) ? s ^ 0x3F : s);
    }
    return {out.begin(), out.end()};
}

CommutantReport commutant(const GModule& m) {
    const int n = m.dim, unknowns = n * n;
    std::vector<Vec> eqs;
    for (const Matrix& s : m.gens)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // (X S - S X)_{ij} = sum_k X_ik S_kj - S_ik X_kj
                Vec row(static_cast<std::size_t>(unknowns), 0);
                for (int k = 0; k < n; ++k) {
                    row[static_cast<std::size_t>(i * n + k)] ^= s.at(k, j);
                    row[static_cast<std::size_t>(k * n + j)] ^= s.at(i, k);
                }
                eqs.push_back(row);
            }
    CommutantReport r;
    for (const Vec& v : nullspace(eqs, unknowns)) {
        Matrix x(n);
        x.a = v;
        r.basis.push_back(x);
    }
    r.dim = static_cast<int>(r.basis.size());
    if (r.dim == 0) return r;

    const Matrix id = Matrix::identity(n), zero(n);
    r.is_field = true;
    for (const Vec& c : all_vectors(r.dim, m.field)) {
        if (is_zero_vec(c)) continue;
        Matrix x = combine(r.basis, c);
        std::vector<Vec> rows;
        for (int i = 0; i < n; ++i) rows.emplace_back(x.a.begin() + i * n, x.a.begin() + (i + 1) * n);
        if (rank(rows, m.field) < n) r.is_field = false;
        if (x * x == x && x != id) r.split = true;
        if (m.field == BaseField::F2 && !r.has_omega && x != id && x * x == x + id) {
            r.has_omega = true;
            r.omega = x;
        }
    }
    return r;
}

SimplicityReport is_simple(const GModule& m) {
    SimplicityReport r;
    r.simple = true;
    for (const Vec& v : all_vectors(m.dim, m.field)) {
        if (is_zero_vec(v)) continue;
        ++r.vectors_checked;
        const int d = spin_dim(m, v);
        if (d < m.dim) {
            r.simple = false;
            r.witness = v;
            r.witness_span_dim = d;
            return r;
        }
    }
    return r;
}

GModule as_f4_module(const GModule& m, const Matrix& omega) {
    if (m.field != BaseField::F2 || m.dim % 2) fail(ErrorCode::InvalidArgument, "need an even-dimensional F_2-module");
    const int n = m.dim, h = n / 2;
    // F_2-basis v1, w v1, v2, w v2, ...
    std::vector<Vec> cols;
    for (int j = 0; j < n && static_cast<int>(cols.size()) < n; ++j) {
        Vec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j)] = 1;
        auto trial = cols;
        trial.push_back(e);
        trial.push_back(omega * e);
        if (rank(trial, BaseField::F2) == static_cast<int>(trial.size())) cols = std::move(trial);
    }
    if (static_cast<int>(cols.size()) != n) fail(ErrorCode::InvalidArgument, "w does not give an F_4-structure");
    Matrix p(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) p.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    const Matrix pinv = invert(p);
    GModule out;
    out.field = BaseField::F4;
    out.dim = h;
    for (const Matrix& s : m.gens) {
        if (s * omega != omega * s) fail(ErrorCode::InvalidArgument, "w does not commute with the action");
        const Matrix c = pinv * s * p;
        Matrix g(h);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j)
                g.at(i, j) = static_cast<F4>(c.at(2 * i, 2 * j) | (c.at(2 * i + 1, 2 * j) << 1));
        out.gens.push_back(g);
    }
    return out;
}

AlgebraCensus classify_g_stable_algebras(const GModule& m, const Matrix& omega, u64 seed, int joins) {
    if (m.field != BaseField::F2 || m.dim != 4) fail(ErrorCode::InvalidArgument, "census runs on the 4-dimensional F_2 heart");
    std::vector<Bits16> group, group_inv;
    {
        std::vector<Matrix> elems{Matrix::identity(4)};
        std::set<Matrix> seen{elems[0]};
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (const Matrix& s : m.gens) {
                Matrix x = s * elems[i];
                if (seen.insert(x).second) elems.push_back(x);
            }
        for (const Matrix& x : elems) {
            group.push_back(to_bits(x));
            group_inv.push_back(to_bits(invert(x)));
        }
    }

    std::vector<int> dim_of(1u << 16);
    std::vector<std::vector<Bits16>> canon_of(1u << 16);
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            // many generators share the span of their conjugates; close each span once
            std::map<std::vector<Bits16>, std::pair<int, std::vector<Bits16>>> memo;
            for (unsigned u = w; u < (1u << 16); u += workers) {
                BitSpan s;
                s.insert(kBitsIdentity);
                for (std::size_t g = 0; g < group.size(); ++g)
                    s.insert(bits_mul(bits_mul(group[g], static_cast<Bits16>(u)), group_inv[g]));
                auto [it, fresh] = memo.try_emplace(s.canonical());
                if (fresh) {
                    close_algebra(s);
                    it->second = {s.dim, s.canonical()};
                }
                dim_of[u] = it->second.first;
                canon_of[u] = it->second.second;
            }
        });
    for (auto& t : pool) t.join();

    AlgebraCensus census;
    std::map<std::vector<Bits16>, int> algebras;
    for (unsigned u = 0; u < (1u << 16); ++u) {
        ++census.generator_counts[class_of_dim(dim_of[u])];
        ++census.dimension_counts[dim_of[u]];
        algebras.emplace(canon_of[u], dim_of[u]);
    }

    const Bits16 w = to_bits(omega);
    BitSpan f4;
    f4.insert(kBitsIdentity);
    f4.insert(w);
    BitSpan centralizer;
    for (unsigned x = 0; x < (1u << 16); ++x)
        if (bits_mul(static_cast<Bits16>(x), w) == bits_mul(w, static_cast<Bits16>(x))) centralizer.insert(static_cast<Bits16>(x));

    auto check = [&](const BitSpan& s) {
        const SubalgebraClass cls = class_of_dim(s.dim);
        if (s.dim == 2 && s.canonical() != f4.canonical()) census.dim2_is_commutant = false;
        if (s.dim == 8 && s.canonical() != centralizer.canonical()) census.dim8_is_centralizer = false;
        bool w_central = s.contains(w);
        for (Bits16 b : s.basis()) w_central = w_central && bits_mul(b, w) == bits_mul(w, b);
        if (w_central && cls != SubalgebraClass::FieldF4 && cls != SubalgebraClass::MatTwoOverF4)
            census.very_simple_ok = false;
    };
    std::vector<BitSpan> distinct;
    for (const auto& [basis, dim] : algebras) {
        BitSpan s;
        for (Bits16 b : basis) s.insert(b);
        check(s);
        distinct.push_back(s);
    }

    std::mt19937_64 rng(seed);
    auto join = [&](const BitSpan& a, const BitSpan& b) {
        BitSpan s = a;
        for (Bits16 x : b.basis()) s.insert(x);
        close_algebra(s);
        check(s);
        ++census.joins_checked;
    };
    for (const auto& a : distinct)
        for (const auto& b : distinct) join(a, b);
    for (int i = 0; i < joins; ++i) {
        const unsigned u = static_cast<unsigned>(rng() & 0xFFFF), v = static_cast<unsigned>(rng() & 0xFFFF);
        BitSpan a, b;
        for (Bits16 x : canon_of[u]) a.insert(x);
        for (Bits16 x : canon_of[v]) b.insert(x);
        join(a, b);
    }
    census.gaps.push_back("census covers algebras generated by one G-orbit plus sampled joins; the full lattice of G-stable subalgebras is not enumerated");
    return census;
}

RepReport verify_representations(u64 seed) {
    RepReport r;
    const std::vector<Perm> group = build_psl25();
    r.group_order = static_cast<int>(group.size());
    r.cycle_census = cycle_census(group);
    r.doubly_transitive = ordered_pair_orbits(group) == 1;
    std::set<Matrix> images;
    for (const Perm& g : group) images.insert(heart_matrix(g));
    r.faithful = images.size() == group.size() && heart_matrix(identity_perm()) == Matrix::identity(4);
    r.heart_elements = static_cast<int>(heart_point_sets().size());

    const std::vector<Perm> gens{psl25_translation(), psl25_inversion()};
    const GModule q2 = heart(BaseField::F2, gens);
    const GModule q4 = heart(BaseField::F4, gens);
    r.simple_f2 = is_simple(q2);
    r.commutant_f2 = commutant(q2);
    r.omega_relation = r.commutant_f2.has_omega &&
                       r.commutant_f2.omega * r.commutant_f2.omega == r.commutant_f2.omega + Matrix::identity(4);
    r.simple_f4 = is_simple(q4);
    r.commutant_f4 = commutant(q4);
    if (r.commutant_f2.has_omega) {
        const GModule absolute = as_f4_module(q2, r.commutant_f2.omega);
        r.simple_f4_structure = is_simple(absolute);
        r.commutant_f4_structure = commutant(absolute);
    }

    // commutant dimension after a random change of basis
    std::mt19937_64 rng(seed);
    r.commutant_basis_independent = true;
    for (int trial = 0; trial < 5; ++trial) {
        Matrix p(4);
        std::vector<Vec> rows;
        do {
            for (auto& x : p.a) x = static_cast<F4>(rng() & 1);
            rows.clear();
            for (int i = 0; i < 4; ++i) rows.emplace_back(p.a.begin() + i * 4, p.a.begin() + (i + 1) * 4);
        } while (rank(rows, BaseField::F2) < 4);
        const Matrix pinv = invert(p);
        for (BaseField f : {BaseField::F2, BaseField::F4}) {
            GModule moved = heart(f, gens);
            for (auto& s : moved.gens) s = p * s * pinv;
            const int expect = f == BaseField::F2 ? r.commutant_f2.dim : r.commutant_f4.dim;
            if (commutant(moved).dim != expect) r.commutant_basis_independent = false;
        }
    }

    if (r.commutant_f2.has_omega) r.census = classify_g_stable_algebras(q2, r.commutant_f2.omega, seed);

    const std::map<DegreePattern, int> expected_census{
        {{1, 1, 1, 1, 1, 1}, 1}, {{2, 2, 1, 1}, 15}, {{3, 3}, 20}, {{5, 1}, 24}};
    std::set<SubalgebraClass> realised;
    for (const auto& [cls, n] : r.census.generator_counts) realised.insert(cls);
    r.passed = r.group_order == 60 && r.cycle_census == expected_census && r.doubly_transitive && r.faithful &&
               r.heart_elements == 16 && r.simple_f2.simple && r.commutant_f2.dim == 2 && r.commutant_f2.is_field &&
               r.omega_relation && !r.simple_f4.simple && r.commutant_f4.dim == 2 && r.commutant_f4.split &&
               r.simple_f4_structure.simple && r.commutant_f4_structure.dim == 1 && r.commutant_basis_independent &&
               realised.size() == 4 && r.census.dim2_is_commutant && r.census.dim8_is_centralizer &&
               r.census.very_simple_ok;
    return r;
}

}  // namespace g2ss
