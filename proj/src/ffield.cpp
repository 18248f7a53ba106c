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

#include "g2ss/ffield.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace g2ss {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::NonSeparable: return "NonSeparable";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::IdentityViolation: return "IdentityViolation";
        case ErrorCode::BadEpsilon: return "BadEpsilon";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ExhaustedSpecializations: return "ExhaustedSpecializations";
        case ErrorCode::UnexpectedAlgebra: return "UnexpectedAlgebra";
        case ErrorCode::FixtureMismatch: return "FixtureMismatch";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven witness set below 3.3 * 10^24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p == 2) fail(ErrorCode::InvalidArgument, "characteristic 2 is not supported");
    if (p >= (1ULL << 61)) fail(ErrorCode::InvalidArgument, "prime must be below 2^61");
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

u64 PrimeField::reduce(i64 a) const noexcept {
    i64 r = a % static_cast<i64>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
}

u64 PrimeField::reduce(const mpz_class& a) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
    return r.get_ui();
}

u64 PrimeField::pow(u64 a, u64 e) const noexcept { return powmod_u64(a, e, p_); }

u64 PrimeField::inv(u64 a) const {
    if (a % p_ == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
    return powmod_u64(a, p_ - 2, p_);
}

// ---------------------------------------------------------------------------
// ExtField

ExtField::ExtField(const PrimeField& base, std::vector<u64> modulus) : base_(base), modulus_(std::move(modulus)) {
    if (modulus_.size() < 2 || modulus_.size() > kMaxExtDegree + 1)
        fail(ErrorCode::InvalidArgument, "extension degree must be between 1 and " + std::to_string(kMaxExtDegree));
    for (auto& c : modulus_) c %= base_.p();
    if (modulus_.back() != 1) fail(ErrorCode::InvalidArgument, "field modulus must be monic");
    if (degree() > 1) {
        const ExtField& fp = get(base_.p(), 1);
        std::vector<Fq> coeffs;
        for (u64 c : modulus_) coeffs.push_back(fp.from_int(static_cast<i64>(c)));
        if (!is_irreducible(Poly<Fq>(std::move(coeffs), fp.one())))
            fail(ErrorCode::InvalidArgument, "field modulus is reducible");
    }
}

const ExtField& ExtField::get(u64 p, unsigned k) {
    static std::recursive_mutex mu;
    static std::map<std::pair<u64, unsigned>, std::unique_ptr<ExtField>> interned;
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, k);
    if (auto it = interned.find(key); it != interned.end()) return *it->second;
    PrimeField base(p);
    std::unique_ptr<ExtField> field;
    if (k == 1) {
        field = std::make_unique<ExtField>(base, std::vector<u64>{0, 1});
    } else {
        if (k == 0 || k > kMaxExtDegree) fail(ErrorCode::InvalidArgument, "unsupported extension degree");
        const ExtField& fp = get(p, 1);
        u64 count = 1;
        for (unsigned i = 0; i < k; ++i) count *= p;
        for (u64 idx = 0; idx < count && !field; ++idx) {
            std::vector<Fq> coeffs;
            u64 rest = idx;
            for (unsigned i = 0; i < k; ++i) {
                coeffs.push_back(fp.from_int(static_cast<i64>(rest % p)));
                rest /= p;
            }
            coeffs.push_back(fp.one());
            Poly<Fq> m(coeffs, fp.one());
            if (m.coeff(0).is_zero() || !is_irreducible(m)) continue;
            std::vector<u64> mod;
            for (const auto& c : coeffs) mod.push_back(c.coeff(0));
            field = std::make_unique<ExtField>(base, std::move(mod));
        }
    }
    auto& slot = interned[key];
    slot = std::move(field);
    return *slot;
}

u64 ExtField::order() const {
    u128 q = 1;
    for (unsigned i = 0; i < degree(); ++i) {
        q *= base_.p();
        if (q >= (static_cast<u128>(1) << 63)) fail(ErrorCode::Unsupported, "field order exceeds 63 bits");
    }
    return static_cast<u64>(q);
}

Fq ExtField::zero() const {
    Fq r;
    r.f_ = this;
    return r;
}

Fq ExtField::one() const { return from_int(1); }

Fq ExtField::from_int(i64 n) const {
    Fq r = zero();
    r.c_[0] = base_.reduce(n);
    return r;
}

Fq ExtField::from_mpz(const mpz_class& n) const {
    Fq r = zero();
    r.c_[0] = base_.reduce(n);
    return r;
}

Fq ExtField::generator() const {
    if (degree() == 1) {
        Fq r = zero();
        r.c_[0] = base_.neg(modulus_[0]);
        return r;
    }
    Fq r = zero();
    r.c_[1] = 1;
    return r;
}

Fq ExtField::element(std::span<const u64> coeffs) const {
    Fq r = zero();
    if (coeffs.size() > degree()) fail(ErrorCode::InvalidArgument, "too many coefficients for field element");
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.c_[i] = coeffs[i] % base_.p();
    return r;
}

Fq ExtField::from_index(u64 index) const {
    Fq r = zero();
    for (unsigned i = 0; i < degree(); ++i) {
        r.c_[i] = index % base_.p();
        index /= base_.p();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fq

void Fq::check_same(const Fq& o) const {
    if (f_ == o.f_) return;
    if (f_ == nullptr || o.f_ == nullptr || !(*f_ == *o.f_))
        fail(ErrorCode::InvalidArgument, "arithmetic between elements of different fields");
}

bool Fq::is_zero() const noexcept {
    const unsigned k = degree();
    for (unsigned i = 0; i < k; ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Fq::is_one() const noexcept {
    if (c_[0] != 1) return false;
    const unsigned k = degree();
    for (unsigned i = 1; i < k; ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Fq::in_prime_field() const noexcept {
    const unsigned k = degree();
    for (unsigned i = 1; i < k; ++i)
        if (c_[i] != 0) return false;
    return true;
}

u64 Fq::index() const noexcept {
    u64 idx = 0;
    const u64 p = f_->characteristic();
    for (unsigned i = degree(); i-- > 0;) idx = idx * p + c_[i];
    return idx;
}

Fq Fq::operator-() const {
    Fq r = *this;
    const unsigned k = degree();
    for (unsigned i = 0; i < k; ++i) r.c_[i] = f_->base_.neg(c_[i]);
    return r;
}

Fq& Fq::operator+=(const Fq& o) {
    check_same(o);
    const unsigned k = degree();
    for (unsigned i = 0; i < k; ++i) c_[i] = f_->base_.add(c_[i], o.c_[i]);
    return *this;
}

Fq& Fq::operator-=(const Fq& o) {
    check_same(o);
    const unsigned k = degree();
    for (unsigned i = 0; i < k; ++i) c_[i] = f_->base_.sub(c_[i], o.c_[i]);
    return *this;
}

Fq& Fq::operator*=(const Fq& o) {
    check_same(o);
    const PrimeField& fp = f_->base_;
    const unsigned k = degree();
    if (k == 1) {
        c_[0] = fp.mul(c_[0], o.c_[0]);
        return *this;
    }
    const u64 p = fp.p();
    std::array<u64, 2 * kMaxExtDegree> t{};
    // At most kMaxExtDegree products below 2^122 each, so no u128 overflow.
    for (unsigned i = 0; i < 2 * k - 1; ++i) {
        u128 acc = 0;
        const unsigned lo = i >= k ? i - k + 1 : 0;
        const unsigned hi = std::min(i, k - 1);
        for (unsigned j = lo; j <= hi; ++j) {
            acc += static_cast<u128>(c_[j]) * o.c_[i - j];
        }
        t[i] = static_cast<u64>(acc % p);
    }
    const auto& m = f_->modulus_;
    for (unsigned i = 2 * k - 2; i >= k; --i) {
        const u64 top = t[i];
        if (top == 0) continue;
        for (unsigned j = 0; j < k; ++j) t[i - k + j] = fp.sub(t[i - k + j], fp.mul(top, m[j]));
        t[i] = 0;
    }
    for (unsigned i = 0; i < k; ++i) c_[i] = t[i];
    return *this;
}

bool Fq::operator==(const Fq& o) const noexcept {
    if (f_ != o.f_) {
        if (f_ == nullptr || o.f_ == nullptr) return is_zero() && o.is_zero();
        if (!(*f_ == *o.f_)) return false;
    }
    const unsigned k = degree();
    for (unsigned i = 0; i < k; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Fq Fq::inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in F_q");
    if (degree() == 1) {
        Fq r = *this;
        r.c_[0] = f_->base_.inv(c_[0]);
        return r;
    }
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), f_->characteristic(), degree());
    return pow(mpz_class(q - 2));
}

Fq Fq::pow(u64 e) const {
    Fq result = one();
    Fq base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Fq Fq::pow(const mpz_class& e) const {
    if (sgn(e) < 0) return inv().pow(mpz_class(-e));
    Fq result = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result *= result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
    }
    return result;
}

std::string Fq::to_string() const {
    if (f_ == nullptr || degree() == 1) return std::to_string(c_[0]);
    std::string out;
    for (unsigned i = degree(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string coef = std::to_string(c_[i]);
        if (i == 0)
            out += coef;
        else {
            const std::string mono = i == 1 ? "s" : "s^" + std::to_string(i);
            out += c_[i] == 1 ? mono : coef + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

// ---------------------------------------------------------------------------
// Polynomial algorithms over finite fields

bool is_squarefree(const Poly<Fq>& f) {
    if (f.degree() < 1) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

DegreePattern distinct_degree_pattern(const Poly<Fq>& f) {
    if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "degree pattern of a constant");
    if (!is_squarefree(f)) fail(ErrorCode::NotSquarefree, "polynomial is not squarefree");
    const u64 q = f.unit().field().order();
    Poly<Fq> g = monic(f);
    const Poly<Fq> x = Poly<Fq>::variable(f.unit());
    Poly<Fq> h = x;
    DegreePattern pattern;
    for (int i = 1; 2 * i <= g.degree(); ++i) {
        h = powmod(h, q, g);
        Poly<Fq> d = gcd(h - x, g);
        if (d.degree() > 0) {
            for (int j = 0; j < d.degree() / i; ++j) pattern.push_back(i);
            g = divmod(g, d).first;
            h = rem(h, g);
        }
    }
    if (g.degree() > 0) pattern.push_back(g.degree());
    std::sort(pattern.begin(), pattern.end(), std::greater<>());
    return pattern;
}

bool is_irreducible(const Poly<Fq>& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (!is_squarefree(f)) return false;
    const DegreePattern pat = distinct_degree_pattern(f);
    return pat.size() == 1;
}

Fq random_element(const ExtField& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(0, field.characteristic() - 1);
    std::array<u64, kMaxExtDegree> c{};
    for (unsigned i = 0; i < field.degree(); ++i) c[i] = dist(rng);
    return field.element(std::span<const u64>(c.data(), field.degree()));
}

Poly<Fq> random_poly(const ExtField& field, int deg, bool monic_flag, std::mt19937_64& rng) {
    std::vector<Fq> c;
    for (int i = 0; i < deg; ++i) c.push_back(random_element(field, rng));
    Fq lead = field.one();
    if (!monic_flag) {
        do {
            lead = random_element(field, rng);
        } while (lead.is_zero());
    }
    c.push_back(lead);
    return Poly<Fq>(std::move(c), field.one());
}

namespace {

void equal_degree_split(const Poly<Fq>& g, int d, std::mt19937_64& rng, std::vector<Poly<Fq>>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const ExtField& field = g.unit().field();
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), field.order(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        Poly<Fq> a = random_poly(field, g.degree() - 1, false, rng);
        Poly<Fq> b = powmod(a, e, g) - g.one();
        Poly<Fq> h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(divmod(g, h).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly<Fq>> factor_squarefree(const Poly<Fq>& f, u64 seed) {
    if (f.degree() < 1) return {};
    if (!is_squarefree(f)) fail(ErrorCode::NotSquarefree, "polynomial is not squarefree");
    std::mt19937_64 rng(seed);
    const u64 q = f.unit().field().order();
    Poly<Fq> g = monic(f);
    const Poly<Fq> x = Poly<Fq>::variable(f.unit());
    Poly<Fq> h = x;
    std::vector<Poly<Fq>> factors;
    for (int i = 1; 2 * i <= g.degree(); ++i) {
        h = powmod(h, q, g);
        Poly<Fq> d = gcd(h - x, g);
        if (d.degree() > 0) {
            equal_degree_split(d, i, rng, factors);
            g = divmod(g, d).first;
            h = rem(h, g);
        }
    }
    if (g.degree() > 0) factors.push_back(g);
    std::sort(factors.begin(), factors.end(), [](const Poly<Fq>& a, const Poly<Fq>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            const u64 ai = a.coeff(i).index(), bi = b.coeff(i).index();
            if (ai != bi) return ai < bi;
        }
        return false;
    });
    return factors;
}

Poly<Fq> frobenius_twist(const Poly<Fq>& u) {
    if (u.is_zero()) return u;
    const u64 p = u.unit().field().characteristic();
    std::vector<Fq> out(static_cast<std::size_t>(u.degree()) * p + 1, u.unit().zero());
    for (int i = 0; i <= u.degree(); ++i) out[static_cast<std::size_t>(i) * p] = u.coeff(i).frobenius();
    return Poly<Fq>(std::move(out), u.unit());
}

Fq reduce(const Rational& a, const ExtField& target) {
    const PrimeField& fp = target.base();
    const u64 den = fp.reduce(a.den());
    if (den == 0)
        fail(ErrorCode::BadReduction,
             "denominator of " + a.to_string() + " is divisible by " + std::to_string(fp.p()));
    return target.from_int(static_cast<i64>(fp.mul(fp.reduce(a.num()), fp.inv(den))));
}

Fq embed(const Fq& a, const ExtField& target) {
    if (&a.field() == &target || a.field() == target) {
        if (&a.field() == &target) return a;
        std::array<u64, kMaxExtDegree> c{};
        for (unsigned i = 0; i < target.degree(); ++i) c[i] = a.coeff(i);
        return target.element(std::span<const u64>(c.data(), target.degree()));
    }
    if (a.field().characteristic() != target.characteristic())
        fail(ErrorCode::WrongCharacteristic, "cannot embed across characteristics");
    if (!a.in_prime_field()) fail(ErrorCode::Unsupported, "only prime-field elements embed into other extensions");
    return target.from_int(static_cast<i64>(a.coeff(0)));
}

}  // namespace g2ss
