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


#include "g2ss/cartier.hpp"

namespace g2ss {

const char* to_string(Verdict v) noexcept {
    return v == Verdict::Supersingular ? "Supersingular" : "NotSupersingular";
}

const char* to_string(CaseTag c) noexcept {
    switch (c) {
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::NotSS: return "NotSS";
    }
    return "?";
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 mat_frobenius(const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = frobenius_twist(a[i][j]);
    return r;
}

bool is_zero(const Mat2& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

CaseTag case_tag_of(const PolyT<Fq>& a, const PolyT<Fq>& b, const PolyT<Fq>& c, const PolyT<Fq>& d, u64 p) {
    if (a.is_zero() && c.is_zero() && d.is_zero()) return CaseTag::Case1;
    if (c.is_zero()) return CaseTag::NotSS;
    const PolyT<Fq> ap = pow(a, p);
    const PolyT<Fq> cpm1 = pow(c, p - 1);
    if (b * cpm1 * c == -(ap * a) && d * cpm1 == -ap) return CaseTag::Case2;
    return CaseTag::NotSS;
}

namespace {

void check_domain(const SexticFq& f, u64 p) {
    if (f.unit().field().characteristic() != p)
        fail(ErrorCode::WrongCharacteristic, "curve is over " + domain_name(f) + ", not characteristic " +
                                                 std::to_string(p));
    if (!f.separable) fail(ErrorCode::NonSeparable, "curve is not separable");
}

}  // namespace

CartierManinReport cartier_manin(const SexticFq& f, u64 p) {
    check_domain(f, p);
    const auto h = pow(f.f, (p - 1) / 2);
    CartierManinReport r;
    r.p = p;
    const int ip = static_cast<int>(p);
    r.c_p_minus_1 = h.coeff(ip - 1);
    r.c_p_minus_2 = h.coeff(ip - 2);
    r.c_2p_minus_1 = h.coeff(2 * ip - 1);
    r.c_2p_minus_2 = h.coeff(2 * ip - 2);
    r.m = {{{r.c_p_minus_1, r.c_p_minus_2}, {r.c_2p_minus_1, r.c_2p_minus_2}}};
    r.m_frob = mat_frobenius(r.m);
    r.product = mat_mul(r.m, r.m_frob);
    r.invariant_product = mat_mul(r.m_frob, r.m);
    r.verdict = is_zero(r.product) ? Verdict::Supersingular : Verdict::NotSupersingular;
    r.orders_agree = is_zero(r.product) == is_zero(r.invariant_product);
    r.case_tag = case_tag_of(r.c_p_minus_1, r.c_p_minus_2, r.c_2p_minus_1, r.c_2p_minus_2, p);
    if ((r.case_tag != CaseTag::NotSS) != (r.verdict == Verdict::Supersingular))
        fail(ErrorCode::IdentityViolation, "closed-form case criterion disagrees with M*M^(p)");
    return r;
}

Verdict char3_criterion(const SexticFq& f) {
    check_domain(f, 3);
    const auto a1 = f.a(1), a2 = f.a(2), a4 = f.a(4), a5 = f.a(5);
    if (a2.is_zero() && a4.is_zero() && a5.is_zero()) return Verdict::Supersingular;
    if (!a5.is_zero() && a1 * pow(a5, 3) == -pow(a2, 4) && a4 * a5 * a5 == -pow(a2, 3))
        return Verdict::Supersingular;
    return Verdict::NotSupersingular;
}

std::vector<Fq> char3_brumer_obstruction(u64 q) {
    unsigned k = 0;
    for (u64 n = q; n > 1; n /= 3) {
        if (n % 3 != 0) fail(ErrorCode::InvalidArgument, std::to_string(q) + " is not a power of 3");
        ++k;
    }
    if (k == 0 || k > 4) fail(ErrorCode::InvalidArgument, "q must be one of 3, 9, 27, 81");
    const ExtField& F = ExtField::get(3, k);
    std::vector<Fq> out;
    for (u64 i = 0; i < F.order(); ++i) {
        Fq z = F.from_index(i);
        if ((z.pow(4) + z.one()).is_zero() && (z.pow(3) + z - z.one()).is_zero()) out.push_back(z);
    }
    return out;
}

}  // namespace g2ss
