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

// Exact arithmetic in F_p, F_{p^k}, Q and dense univariate polynomials over
// any of them. Polynomials nest, so Poly<Poly<Fq>> is F_q[T][x], which is how
// sextics with T-dependent coefficients are stored throughout the library.

#ifndef G2SS_FFIELD_HPP
#define G2SS_FFIELD_HPP

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g2ss/error.hpp"

namespace g2ss {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

class PrimeField {
   public:
    /// Throws InvalidArgument unless p is an odd prime below 2^61.
    explicit PrimeField(u64 p);

    u64 p() const noexcept { return p_; }

    u64 reduce(i64 a) const noexcept;
    u64 reduce(const mpz_class& a) const;

    u64 add(u64 a, u64 b) const noexcept {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const noexcept { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
    u64 pow(u64 a, u64 e) const noexcept;
    u64 inv(u64 a) const;

    bool operator==(const PrimeField&) const = default;

   private:
    u64 p_;
};

inline constexpr unsigned kMaxExtDegree = 8;

class Fq;

/// F_{p^k} = F_p[s]/(m(s)). Degree 1 is the prime field itself.
///
/// Elements keep a raw pointer to their field, so a field must outlive every
/// element built from it. Fields obtained from get() are interned for the
/// lifetime of the process.
class ExtField {
   public:
    /// `modulus` is monic, low-to-high, of degree 1..kMaxExtDegree, and must
    /// be irreducible over the base field.
    ExtField(const PrimeField& base, std::vector<u64> modulus);

    /// Interned F_{p^k} whose modulus is the first monic irreducible
    /// polynomial in base-p index order (for F_9 that is s^2 + 1).
    static const ExtField& get(u64 p, unsigned k = 1);

    const PrimeField& base() const noexcept { return base_; }
    u64 characteristic() const noexcept { return base_.p(); }
    unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.size() - 1); }
    const std::vector<u64>& modulus() const noexcept { return modulus_; }
    /// p^k; throws Unsupported when it does not fit in 63 bits.
    u64 order() const;

    Fq zero() const;
    Fq one() const;
    Fq from_int(i64 n) const;
    Fq from_mpz(const mpz_class& n) const;
    /// The class of s, a root of the modulus.
    Fq generator() const;
    Fq element(std::span<const u64> coeffs) const;
    /// Inverse of Fq::index(): base-p digits become coefficients.
    Fq from_index(u64 index) const;

    bool operator==(const ExtField& o) const noexcept {
        return base_ == o.base_ && modulus_ == o.modulus_;
    }

   private:
    friend class Fq;
    PrimeField base_;
    std::vector<u64> modulus_;
};

/// Element of an ExtField.
class Fq {
   public:
    Fq() = default;

    const ExtField& field() const noexcept { return *f_; }
    bool has_field() const noexcept { return f_ != nullptr; }
    unsigned degree() const noexcept { return f_ ? f_->degree() : 1; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    Fq zero() const { return f_->zero(); }
    Fq one() const { return f_->one(); }
    Fq from_int(i64 n) const { return f_->from_int(n); }

    u64 coeff(unsigned i) const noexcept { return c_[i]; }
    /// Base-p integer whose digits are the coefficients; enumerates F_q.
    u64 index() const noexcept;
    /// True when the element lies in the prime subfield.
    bool in_prime_field() const noexcept;

    Fq operator-() const;
    Fq& operator+=(const Fq& o);
    Fq& operator-=(const Fq& o);
    Fq& operator*=(const Fq& o);
    Fq& operator/=(const Fq& o) { return *this *= o.inv(); }
    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
    bool operator==(const Fq& o) const noexcept;

    /// Throws DivisionByZero on zero.
    Fq inv() const;
    Fq pow(u64 e) const;
    Fq pow(const mpz_class& e) const;
    Fq frobenius() const { return pow(f_->characteristic()); }

    /// Integers for the prime field, otherwise a polynomial in `s`.
    std::string to_string() const;

   private:
    friend class ExtField;
    void check_same(const Fq& o) const;

    const ExtField* f_ = nullptr;
    std::array<u64, kMaxExtDegree> c_{};
};

/// Exact rational number; the coefficient domain for characteristic zero.
class Rational {
   public:
    Rational() = default;
    Rational(i64 n) : v_(static_cast<long>(n)) {}  // NOLINT: integers embed implicitly
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);

    const mpq_class& value() const noexcept { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(i64 n) const { return Rational(n); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    bool operator==(const Rational& o) const { return v_ == o.v_; }

    Rational inv() const;
    std::string to_string() const { return v_.get_str(); }

   private:
    mpq_class v_{0};
};

template <class R>
concept RingElement = std::copyable<R> && std::equality_comparable<R> &&
                      requires(const R& a, const R& b, i64 n) {
                          { a + b } -> std::convertible_to<R>;
                          { a - b } -> std::convertible_to<R>;
                          { a * b } -> std::convertible_to<R>;
                          { -a } -> std::convertible_to<R>;
                          { a.is_zero() } -> std::convertible_to<bool>;
                          { a.zero() } -> std::convertible_to<R>;
                          { a.one() } -> std::convertible_to<R>;
                          { a.from_int(n) } -> std::convertible_to<R>;
                          { a.to_string() } -> std::convertible_to<std::string>;
                      };

template <class R>
concept FieldElement = RingElement<R> && requires(const R& a) {
    { a.inv() } -> std::convertible_to<R>;
};

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial, coefficients low-to-high with no trailing
/// zeros. Carries the unit of its coefficient ring so that zero polynomials
/// still know where they live.
template <RingElement R>
class Poly {
   public:
    using Coeff = R;

    Poly() = default;
    explicit Poly(const R& unit) : one_(unit.one()) {}
    Poly(std::vector<R> coeffs, const R& unit) : c_(std::move(coeffs)), one_(unit.one()) { trim(); }

    static Poly constant(const R& c) { return Poly(std::vector<R>{c}, c); }
    static Poly monomial(const R& c, int deg) {
        std::vector<R> v(static_cast<std::size_t>(deg) + 1, c.zero());
        v.back() = c;
        return Poly(std::move(v), c);
    }
    static Poly variable(const R& unit) { return monomial(unit.one(), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    R coeff(int i) const { return (i < 0 || i > degree()) ? one_.zero() : c_[static_cast<std::size_t>(i)]; }
    const R& leading() const { return c_.back(); }
    const std::vector<R>& coeffs() const noexcept { return c_; }
    const R& unit() const noexcept { return one_; }
    bool is_monic() const { return !c_.empty() && c_.back() == one_; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == one_; }

    Poly zero() const { return Poly(one_); }
    Poly one() const { return constant(one_); }
    Poly from_int(i64 n) const { return constant(one_.from_int(n)); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), one_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), one_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const R& s) {
        for (auto& x : c_) x = x * s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const R& s) { return a *= s; }
    friend Poly operator*(const R& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return a.zero();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, a.one_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r), a.one_);
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<R> r(c_.size() - 1, one_.zero());
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * one_.from_int(static_cast<i64>(i));
        return Poly(std::move(r), one_);
    }

    /// Horner evaluation at a point of the coefficient ring.
    R operator()(const R& x) const {
        R acc = one_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Plain rendering such as "x^2 + 2*x + 1"; used as a ring element
    /// string when polynomials nest.
    std::string to_string() const { return to_string("T"); }
    std::string to_string(const std::string& var) const;

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<R> c_;
    R one_{};
};

namespace detail {
inline bool is_compound(const std::string& s) { return s.find(' ') != std::string::npos; }
}  // namespace detail

template <RingElement R>
std::string Poly<R>::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const R& a = c_[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        std::string s = a.to_string();
        bool negative = !detail::is_compound(s) && !s.empty() && s[0] == '-';
        if (negative) s.erase(0, 1);
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty()) {
            out += s;
        } else if (s == "1") {
            out += mono;
        } else {
            out += (detail::is_compound(s) ? "(" + s + ")" : s) + "*" + mono;
        }
    }
    return out;
}

template <RingElement R>
Poly<R> pow(const Poly<R>& f, u64 e) {
    Poly<R> result = f.one();
    Poly<R> base = f;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

template <FieldElement K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {a.zero(), a};
    std::vector<K> r = a.coeffs();
    std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), a.unit().zero());
    const K lead_inv = b.leading().inv();
    const auto& bc = b.coeffs();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        const K t = r[static_cast<std::size_t>(i + b.degree())] * lead_inv;
        q[static_cast<std::size_t>(i)] = t;
        if (t.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            r[static_cast<std::size_t>(i + j)] = r[static_cast<std::size_t>(i + j)] - t * bc[static_cast<std::size_t>(j)];
    }
    return {Poly<K>(std::move(q), a.unit()), Poly<K>(std::move(r), a.unit())};
}

template <FieldElement K>
Poly<K> rem(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

template <FieldElement K>
Poly<K> monic(const Poly<K>& a) {
    if (a.is_zero()) return a;
    return a * a.leading().inv();
}

/// Monic gcd; gcd(0, 0) = 0.
template <FieldElement K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <FieldElement K>
Poly<K> powmod(const Poly<K>& base, u64 e, const Poly<K>& m) {
    Poly<K> result = rem(base.one(), m);
    Poly<K> b = rem(base, m);
    while (e) {
        if (e & 1) result = rem(result * b, m);
        e >>= 1;
        if (e) b = rem(b * b, m);
    }
    return result;
}

template <FieldElement K>
Poly<K> powmod(const Poly<K>& base, const mpz_class& e, const Poly<K>& m) {
    Poly<K> result = rem(base.one(), m);
    Poly<K> b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
    }
    return result;
}

// Exact division in an integral domain; the caller guarantees divisibility.
template <FieldElement K>
K exact_div(const K& a, const K& b) {
    return a / b;
}

template <FieldElement K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "exact_div: inexact polynomial division");
    return q;
}

/// Fraction-free (Bareiss) determinant over an integral domain.
template <RingElement R>
R determinant(std::vector<std::vector<R>> m, const R& unit) {
    const std::size_t n = m.size();
    if (n == 0) return unit.one();
    R prev = unit.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return unit.zero();
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester matrix of f and g taken with formal degrees (m, n); the formal
/// degree may exceed the actual one (leading zeros are kept).
template <RingElement R>
std::vector<std::vector<R>> sylvester(const Poly<R>& f, int m, const Poly<R>& g, int n) {
    const std::size_t size = static_cast<std::size_t>(m + n);
    const R zero = f.unit().zero();
    std::vector<std::vector<R>> s(size, std::vector<R>(size, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.coeff(n - j);
    return s;
}

template <RingElement R>
R resultant(const Poly<R>& f, int m, const Poly<R>& g, int n) {
    return determinant(sylvester(f, m, g, n), f.unit());
}

template <RingElement R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
    if (f.is_zero() || g.is_zero()) return f.unit().zero();
    return resultant(f, f.degree(), g, g.degree());
}

/// disc(f) = (-1)^(n(n-1)/2) Res_{n,n-1}(f, f') / lc(f). The derivative is
/// taken with formal degree n-1, so the formula stays valid when p divides n.
template <RingElement R>
R discriminant(const Poly<R>& f) {
    const int n = f.degree();
    if (n < 1) fail(ErrorCode::InvalidArgument, "discriminant of a constant");
    if (n == 1) return f.unit().one();
    R res = resultant(f, n, f.derivative(), n - 1);
    R d = exact_div(res, f.leading());
    return ((n * (n - 1) / 2) % 2) ? -d : d;
}

/// Sizes of the irreducible factors, sorted in decreasing order.
using DegreePattern = std::vector<int>;

/// Factor degrees of a squarefree polynomial over a finite field, read off
/// distinct-degree factorization. Throws NotSquarefree when gcd(f, f') != 1.
DegreePattern distinct_degree_pattern(const Poly<Fq>& f);

bool is_squarefree(const Poly<Fq>& f);
bool is_irreducible(const Poly<Fq>& f);

/// Complete factorization of a monic squarefree polynomial into monic
/// irreducibles (distinct-degree, then Cantor-Zassenhaus equal-degree
/// splitting). The seed makes the splitting reproducible.
std::vector<Poly<Fq>> factor_squarefree(const Poly<Fq>& f, u64 seed);

/// u -> u^p on F_q[T]: Frobenius on the coefficients and T -> T^p.
Poly<Fq> frobenius_twist(const Poly<Fq>& u);

/// Reduction Q -> F_p, then into `target`. Throws BadReduction when p
/// divides the denominator.
Fq reduce(const Rational& a, const ExtField& target);

/// Embeds a prime-field element (or an element of `target` itself).
Fq embed(const Fq& a, const ExtField& target);

template <RingElement S, RingElement R, class Fn>
Poly<S> map_coeffs(const Poly<R>& f, const S& unit, Fn&& fn) {
    std::vector<S> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(fn(c));
    return Poly<S>(std::move(out), unit);
}

/// Uniformly random polynomial of exact degree `deg` (monic if requested).
Poly<Fq> random_poly(const ExtField& field, int deg, bool monic_flag, std::mt19937_64& rng);
Fq random_element(const ExtField& field, std::mt19937_64& rng);

}  // namespace g2ss

#endif
