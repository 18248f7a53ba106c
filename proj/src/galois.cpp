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


#include "g2ss/galois.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace g2ss {

namespace {

CycleTypeSet derive_cycle_types() {
    CycleTypeSet s;
    const std::vector<Perm> g = build_psl25();
    if (g.size() != 60) fail(ErrorCode::UnexpectedAlgebra, "PSL_2(F_5) closure has order " + std::to_string(g.size()));
    s.a5_census = cycle_census(g);
    for (const auto& [pat, n] : s.a5_census) s.allowed.insert(pat);

    const std::vector<Perm> a6 = alternating_group6();
    s.a6_census = cycle_census(a6);
    for (const auto& [pat, n] : s.a6_census)
        if (s.allowed.count(pat)) s.a6_allowed_count += n;

    // PSL_2(F_5) is maximal in A_6: adjoining any outside element gives all of A_6
    const std::set<Perm> in_g(g.begin(), g.end());
    s.a6_unique_overgroup = true;
    for (const Perm& x : a6) {
        if (in_g.count(x)) continue;
        if (closure({psl25_translation(), psl25_inversion(), x}).size() != 360) {
            s.a6_unique_overgroup = false;
            break;
        }
    }

    // every subgroup is 2-generated; those meeting all three nontrivial types are the whole group
    const DegreePattern t2{2, 2, 1, 1}, t3{3, 3}, t5{5, 1};
    s.three_types_force_a5 = true;
    for (std::size_t i = 0; i < g.size() && s.three_types_force_a5; ++i)
        for (std::size_t j = i; j < g.size(); ++j) {
            auto h = closure({g[i], g[j]});
            auto census = cycle_census(h);
            if (census.count(t2) && census.count(t3) && census.count(t5) && h.size() != 60) {
                s.three_types_force_a5 = false;
                break;
            }
        }
    return s;
}

bool has_subset_sum(const DegreePattern& pat, int k) {
    unsigned reach = 1;  // bit i set: sum i reachable
    for (int d : pat) reach |= reach << d;
    return (reach >> k) & 1u;
}

struct Sample {
    DegreePattern pattern;
    std::string label;
};

void decide(GaloisCertificate& cert, const std::vector<Sample>& samples, const GaloisOptions& opt) {
    const CycleTypeSet& types = a5_cycle_types();
    cert.samples = static_cast<int>(samples.size());
    std::vector<DegreePattern> pats;
    for (const auto& s : samples) {
        ++cert.counts[s.pattern];
        cert.witnesses.emplace(s.pattern, s.label);
        pats.push_back(s.pattern);
    }
    cert.residual = std::pow(types.escape_ratio(), static_cast<double>(cert.samples));
    cert.irreducible_evidence = patterns_force_irreducible(pats);

    for (const auto& s : samples) {
        if (!types.allowed.count(s.pattern)) {
            cert.verdict = GaloisVerdict::RejectedA5;
            cert.reason = "cycle type " + pattern_to_string(s.pattern) + " at " + s.label + " does not occur in A5";
            return;
        }
    }
    if (!cert.square_discriminant) {
        cert.verdict = GaloisVerdict::RejectedA5;
        cert.reason = "discriminant is not a square, so the group is not inside A6";
        return;
    }
    std::vector<std::string> missing;
    for (const auto& pat : types.allowed)
        if (pat.front() > 1 && !cert.counts.count(pat)) missing.push_back(pattern_to_string(pat));
    if (!missing.empty()) {
        std::string m;
        for (const auto& x : missing) m += (m.empty() ? "" : ", ") + x;
        cert.verdict = GaloisVerdict::Inconclusive;
        cert.reason = "cycle types not yet witnessed: " + m;
        return;
    }
    if (!cert.irreducible_evidence) {
        cert.verdict = GaloisVerdict::Inconclusive;
        cert.reason = "observed cycle types do not rule out a proper factor";
        return;
    }
    if (cert.residual > opt.residual_threshold) {
        cert.verdict = GaloisVerdict::Inconclusive;
        cert.reason = "too few samples for the residual threshold";
        return;
    }
    cert.verdict = GaloisVerdict::CertifiedA5;
    cert.reason = "heuristic: all A5 cycle types seen, none outside A5, square discriminant";
}

// t has exact degree k over F_p and is the least-index member of its Frobenius orbit
bool is_orbit_representative(const Fq& t, unsigned k) {
    Fq c = t;
    for (unsigned j = 1; j < k; ++j) {
        c = c.frobenius();
        if (c == t) return false;
        if (c.index() < t.index()) return false;
    }
    return true;
}

}  // namespace

const CycleTypeSet& a5_cycle_types() {
    static const CycleTypeSet s = derive_cycle_types();
    return s;
}

const char* to_string(GaloisVerdict v) noexcept {
    switch (v) {
        case GaloisVerdict::CertifiedA5: return "CertifiedA5";
        case GaloisVerdict::RejectedA5: return "RejectedA5";
        case GaloisVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

bool patterns_force_irreducible(const std::vector<DegreePattern>& patterns) {
    if (patterns.empty()) return false;
    for (int k = 1; k < kPoints; ++k) {
        bool everywhere = true;
        for (const auto& pat : patterns) everywhere = everywhere && has_subset_sum(pat, k);
        if (everywhere) return false;
    }
    return true;
}

bool is_square_poly(const PolyT<Fq>& u) {
    if (u.is_zero()) fail(ErrorCode::InvalidArgument, "zero is not tested for squareness");
    if (u.degree() % 2) return false;
    const Fq lc = u.leading();
    mpz_class half = mpz_class(std::to_string(lc.field().order())) - 1;
    half /= 2;
    if (!lc.pow(half).is_one()) return false;
    const PolyT<Fq> m = monic(u);
    const int n = m.degree() / 2;
    const Fq two_inv = lc.from_int(2).inv();
    std::vector<Fq> s(static_cast<std::size_t>(n) + 1, lc.zero());
    s[static_cast<std::size_t>(n)] = lc.one();
    for (int k = 1; k <= n; ++k) {
        // coefficient of T^(2n-k) in the square of the part already found
        Fq acc = lc.zero();
        for (int i = n - k + 1; i <= n; ++i) {
            const int j = 2 * n - k - i;
            if (j > n - k && j <= n) acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        s[static_cast<std::size_t>(n - k)] = (m.coeff(2 * n - k) - acc) * two_inv;
    }
    const PolyT<Fq> root(std::move(s), lc.one());
    return root * root == m;
}

PolyXT<Rational> clear_denominators(const PolyXT<Rational>& f, mpz_class* lambda_out) {
    mpz_class lambda = 1;
    for (const auto& c : f.coeffs())
        for (const auto& a : c.coeffs()) mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), a.den().get_mpz_t());
    if (lambda_out) *lambda_out = lambda;
    std::vector<PolyT<Rational>> out;
    const Rational l(lambda, 1);
    std::vector<Rational> powers(static_cast<std::size_t>(f.degree()) + 1, Rational(1));
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * l;
    for (int i = 0; i <= f.degree(); ++i) out.push_back(f.coeff(i) * powers[static_cast<std::size_t>(f.degree() - i)]);
    return PolyXT<Rational>(std::move(out), f.unit());
}

GaloisCertificate certify_a5_over_q(const SexticQ& f, const GaloisOptions& opt) {
    if (f.function_field) fail(ErrorCode::InvalidArgument, "certify_a5_over_q needs constant coefficients");
    if (!f.separable) fail(ErrorCode::NonSeparable, "curve is not separable");
    if (opt.samples < 1) fail(ErrorCode::InvalidArgument, "need at least one sample");
    const Poly<Rational> g = specialize(clear_denominators(f.f), Rational(0));
    const Rational disc = discriminant(g);
    GaloisCertificate cert;
    cert.square_discriminant = sgn(disc.value()) > 0 && mpz_perfect_square_p(disc.num().get_mpz_t()) &&
                               mpz_perfect_square_p(disc.den().get_mpz_t());
    std::vector<Sample> samples;
    for (u64 p = 101; static_cast<int>(samples.size()) < opt.samples; ++p) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(disc.num().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const ExtField& F = ExtField::get(p);
        auto gp = map_coeffs(g, F.one(), [&](const Rational& a) { return reduce(a, F); });
        samples.push_back({distinct_degree_pattern(gp), "p=" + std::to_string(p)});
    }
    decide(cert, samples, opt);
    return cert;
}

GaloisCertificate certify_a5_over_fpT(const SexticFq& f, const GaloisOptions& opt) {
    if (!f.separable) fail(ErrorCode::NonSeparable, "curve is not separable");
    if (opt.samples < 1) fail(ErrorCode::InvalidArgument, "need at least one sample");
    if (opt.max_ext_degree < 1 || opt.max_ext_degree > kMaxExtDegree)
        fail(ErrorCode::InvalidArgument, "max_ext_degree must lie in 1.." + std::to_string(kMaxExtDegree));
    const ExtField& F = f.unit().field();
    const u64 p = F.characteristic();
    GaloisCertificate cert;
    cert.square_discriminant = is_square_poly(discriminant_t(f.f));

    std::vector<Sample> samples;
    const std::size_t want = static_cast<std::size_t>(opt.samples);
    auto sample_level = [&](const ExtField& E, std::vector<Fq> places, unsigned k) {
        if (samples.size() + places.size() > want) {
            std::mt19937_64 rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * k));
            std::shuffle(places.begin(), places.end(), rng);
        }
        for (const Fq& t : places) {
            if (samples.size() == want) break;
            Poly<Fq> ft = specialize(f.f, t);
            if (!is_squarefree(ft)) continue;
            std::string label = "t=" + t.to_string();
            if (E.degree() > 1 && &E != &F) label += " in F_" + std::to_string(p) + "^" + std::to_string(E.degree());
            samples.push_back({distinct_degree_pattern(ft), label});
            cert.max_degree_used = k;
        }
    };

    if (F.degree() > 1) {
        // coefficients outside F_p: only places rational over the coefficient field
        std::vector<Fq> places;
        for (u64 i = 0; i < F.order(); ++i) places.push_back(F.from_index(i));
        sample_level(F, std::move(places), 1);
    } else {
        for (unsigned k = 1; k <= opt.max_ext_degree && samples.size() < want; ++k) {
            const ExtField& E = ExtField::get(p, k);
            std::vector<Fq> places;
            for (u64 i = 0; i < E.order(); ++i) {
                Fq t = E.from_index(i);
                if (is_orbit_representative(t, k)) places.push_back(t);
            }
            sample_level(E, std::move(places), k);
        }
    }
    if (samples.size() < want)
        fail(ErrorCode::ExhaustedSpecializations, "only " + std::to_string(samples.size()) +
                                                      " good specializations up to the degree cap, need " +
                                                      std::to_string(want));
    decide(cert, samples, opt);
    return cert;
}

GaloisCertificate certify_a5(const SexticCurve& f, const GaloisOptions& opt) {
    return std::visit(
        [&](const auto& c) {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SexticQ>)
                return certify_a5_over_q(c, opt);
            else
                return certify_a5_over_fpT(c, opt);
        },
        f);
}

}  // namespace g2ss
