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


#include "g2ss/brumer.hpp"

namespace g2ss {

namespace {

template <FieldElement K>
PolyXT<K> brumer_impl(const PolyT<K>& B, const PolyT<K>& C, const PolyT<K>& D) {
    const PolyT<K> one = B.one();
    auto k = [&](i64 n) { return one.from_int(n); };
    const PolyT<K> BD = B * D, C2 = C * C;
    std::vector<PolyT<K>> a(7, B.zero());
    a[6] = one;
    a[5] = k(2) * C;
    a[4] = k(2) + k(2) * C + C2 - k(4) * BD;
    a[3] = k(2) + k(4) * B + k(2) * C + k(2) * C2 - k(4) * D - k(8) * BD;
    a[2] = k(5) + k(12) * B + k(4) * C + C2 - k(4) * BD;
    a[1] = k(6) + k(12) * B + k(2) * C;
    a[0] = k(4) * B + k(1);
    return PolyXT<K>(std::move(a), one);
}

template <FieldElement K>
Poly<K> specialize_impl(const PolyXT<K>& f, const K& t) {
    return map_coeffs(f, t.one(), [&](const PolyT<K>& c) { return c(t); });
}

template <FieldElement K>
int max_t_degree(const PolyXT<K>& f) {
    int d = 0;
    for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

// disc_x is a polynomial of degree at most 2n-1 in the coefficients of f
int disc_degree_bound(const PolyXT<Rational>& f) { return (2 * f.degree() - 1) * max_t_degree(f); }
int disc_degree_bound(const PolyXT<Fq>& f) { return (2 * f.degree() - 1) * max_t_degree(f); }

template <FieldElement K>
void check_shape(const PolyXT<K>& f) {
    if (f.degree() != 6) fail(ErrorCode::InvalidArgument, "f must have degree 6 in x, got " + std::to_string(f.degree()));
    if (!f.is_monic()) fail(ErrorCode::InvalidArgument, "f must be monic");
}

template <FieldElement K>
Sextic<K> make_impl(PolyXT<K> f, bool function_field, bool allow_singular) {
    check_shape(f);
    Sextic<K> s;
    s.separable = is_separable(f);
    s.function_field = function_field || max_t_degree(f) > 0;
    s.clearing = f.unit();
    s.f = std::move(f);
    if (!s.separable && !allow_singular) fail(ErrorCode::NonSeparable, "f has a repeated root (disc = 0)");
    return s;
}

bool prime_field_coefficients(const PolyXT<Fq>& f) {
    for (const auto& c : f.coeffs())
        for (const auto& a : c.coeffs())
            if (!a.in_prime_field()) return false;
    return true;
}

}  // namespace

std::string domain_name(const SexticQ& c) { return c.function_field ? "Q(T)" : "Q"; }

std::string domain_name(const SexticFq& c) {
    const ExtField& F = c.unit().field();
    std::string base = F.degree() == 1 ? "F_" + std::to_string(F.characteristic())
                                       : "F_" + std::to_string(F.characteristic()) + "^" + std::to_string(F.degree());
    return c.function_field ? base + "(T)" : base;
}

Poly<Rational> specialize(const PolyXT<Rational>& f, const Rational& t) { return specialize_impl(f, t); }
Poly<Fq> specialize(const PolyXT<Fq>& f, const Fq& t) {
    if (&t.field() == &f.unit().unit().field()) return specialize_impl(f, t);
    const ExtField& target = t.field();
    return map_coeffs(f, target.one(), [&](const PolyT<Fq>& c) {
        Fq acc = target.zero();
        for (int i = c.degree(); i >= 0; --i) acc = acc * t + embed(c.coeff(i), target);
        return acc;
    });
}

PolyT<Rational> discriminant_t(const PolyXT<Rational>& f) { return discriminant(f); }
PolyT<Fq> discriminant_t(const PolyXT<Fq>& f) { return discriminant(f); }

bool is_separable(const PolyXT<Rational>& f) {
    const int bound = disc_degree_bound(f);
    for (i64 t = 0; t <= bound; ++t) {
        Poly<Rational> g = specialize(f, Rational(t));
        if (gcd(g, g.derivative()).degree() == 0) return true;
        if (bound == 0) return false;
    }
    return false;
}

bool is_separable(const PolyXT<Fq>& f) {
    const int bound = disc_degree_bound(f);
    const ExtField& F = f.unit().unit().field();
    if (bound == 0) return is_squarefree(specialize(f, F.zero()));
    int vanishing = 0;
    auto try_points = [&](const ExtField& E, bool skip_prime_field) -> int {
        const u64 n = E.order();
        for (u64 i = 0; i < n; ++i) {
            Fq t = E.from_index(i);
            if (skip_prime_field && t.in_prime_field()) continue;
            if (is_squarefree(specialize(f, t))) return 1;
            if (++vanishing > bound) return 0;
        }
        return -1;
    };
    int r = try_points(F, false);
    if (r >= 0) return r == 1;
    if (prime_field_coefficients(f)) {
        // prime degrees only, so the new points are disjoint from earlier ones
        for (unsigned k : {2u, 3u, 5u, 7u}) {
            r = try_points(ExtField::get(F.characteristic(), k), true);
            if (r >= 0) return r == 1;
        }
    }
    return !discriminant_t(f).is_zero();
}

SexticQ make_sextic(PolyXT<Rational> f, bool function_field, bool allow_singular) {
    return make_impl(std::move(f), function_field, allow_singular);
}
SexticFq make_sextic(PolyXT<Fq> f, bool function_field, bool allow_singular) {
    return make_impl(std::move(f), function_field, allow_singular);
}

PolyXT<Rational> brumer_coefficients(const PolyT<Rational>& b, const PolyT<Rational>& c, const PolyT<Rational>& d) {
    return brumer_impl(b, c, d);
}
PolyXT<Fq> brumer_coefficients(const PolyT<Fq>& b, const PolyT<Fq>& c, const PolyT<Fq>& d) {
    return brumer_impl(b, c, d);
}

SexticQ brumer_polynomial(const PolyT<Rational>& b, const PolyT<Rational>& c, const PolyT<Rational>& d,
                          bool function_field, bool allow_singular) {
    return make_sextic(brumer_impl(b, c, d), function_field, allow_singular);
}
SexticFq brumer_polynomial(const PolyT<Fq>& b, const PolyT<Fq>& c, const PolyT<Fq>& d, bool function_field,
                           bool allow_singular) {
    return make_sextic(brumer_impl(b, c, d), function_field, allow_singular);
}

PolyXT<Fq> reduce_coefficients(const PolyXT<Rational>& f, const ExtField& field) {
    const PolyT<Fq> unit = PolyT<Fq>::constant(field.one());
    return map_coeffs(f, unit, [&](const PolyT<Rational>& c) {
        return map_coeffs(c, field.one(), [&](const Rational& a) { return reduce(a, field); });
    });
}

SexticFq reduce_mod_p(const SexticQ& f, u64 p, bool allow_singular) {
    const ExtField& field = ExtField::get(p);
    SexticFq out = make_sextic(reduce_coefficients(f.f, field), f.function_field, allow_singular);
    if (!f.clearing.is_one())
        out.clearing = map_coeffs(f.clearing, field.one(), [&](const Rational& a) { return reduce(a, field); });
    return out;
}

Char3IdentityReport brumer_char3_identities(const SexticFq& f) {
    if (f.unit().field().characteristic() != 3)
        fail(ErrorCode::WrongCharacteristic, "char-3 identities need characteristic 3");
    Char3IdentityReport r;
    r.a1_equals_a5 = f.a(1) == f.a(5);
    r.a4_equals_a2_minus_a1 = f.a(4) == f.a(2) - f.a(1);
    r.obstruction = pow(f.a(1), 4) + pow(f.a(2), 4);
    if (!r.a1_equals_a5) fail(ErrorCode::IdentityViolation, "a1 != a5 in a reduced Brumer curve");
    if (!r.a4_equals_a2_minus_a1) fail(ErrorCode::IdentityViolation, "a4 != a2 - a1 in a reduced Brumer curve");
    return r;
}

bool is_valid_f9_epsilon(const Fq& eps) {
    if (eps.field().characteristic() != 3) return false;
    return (eps.pow(4) + eps.one()).is_zero() && (eps.pow(3) + eps - eps.one()).is_zero();
}

F9FamilyCurve brumer_f9_family(const PolyT<Fq>& C, const PolyT<Fq>& B, const Fq& eps, bool allow_singular) {
    if (!is_valid_f9_epsilon(eps))
        fail(ErrorCode::BadEpsilon, "eps = " + eps.to_string() + " does not solve z^4+1 = z^3+z-1 = 0");
    if (B.is_zero()) fail(ErrorCode::DivisionByZero, "B = 0 leaves D undetermined");
    const PolyT<Fq> one = B.one();
    const PolyT<Fq> e = PolyT<Fq>::constant(eps);
    F9FamilyCurve out;
    out.b = B;
    out.bd = C * C + (e + one) * C - one;

    std::vector<PolyT<Fq>> a(7, B.zero());
    a[6] = one;
    a[5] = -C;
    a[4] = (one - e) * C;
    a[2] = -(e * C);
    a[1] = -C;
    a[0] = B + one;

    // Only a1, a2, a4, a5 enter the char-3 Cartier matrix, and they never involve D.
    const bool case1 = a[2].is_zero() && a[4].is_zero() && a[5].is_zero();
    const bool case2 = !a[5].is_zero() && a[1] * pow(a[5], 3) == -pow(a[2], 4) && a[4] * pow(a[5], 2) == -pow(a[2], 3);
    if (!case1 && !case2) fail(ErrorCode::IdentityViolation, "F9 family curve misses the char-3 case-2 relations");

    auto [D, r] = divmod(out.bd, B);
    PolyT<Fq> lambda = one;
    if (r.is_zero()) {
        a[3] = one + e * C + B - D;
    } else {
        // x -> x/B clears the denominator of D
        out.cleared = true;
        lambda = B;
        const PolyT<Fq> B2 = B * B;
        a[3] = (one + e * C + B) * B2 * B - out.bd * B2;
        for (int i = 0; i < 6; ++i)
            if (i != 3) a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * pow(B, static_cast<u64>(6 - i));
    }
    out.curve = make_sextic(PolyXT<Fq>(std::move(a), one), true, allow_singular);
    out.curve.clearing = lambda;
    return out;
}

}  // namespace g2ss
