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


#include "g2ss/serialize.hpp"

#include <algorithm>

#include "g2ss/expr.hpp"

namespace g2ss {

namespace {

template <class K>
json t_poly(const PolyT<K>& u) {
    json a = json::array();
    for (const auto& c : u.coeffs()) a.push_back(c.to_string());
    return a;
}

template <class K>
json xt_poly(const PolyXT<K>& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(t_poly(c));
    return a;
}

template <class K>
json flat_poly(const PolyXT<K>& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) {
        if (c.degree() > 0) fail(ErrorCode::InvalidArgument, "coefficient depends on T");
        a.push_back(c.is_zero() ? std::string("0") : c.coeff(0).to_string());
    }
    return a;
}

json pattern_map(const std::map<DegreePattern, int>& m) {
    json o = json::object();
    for (const auto& [pat, n] : m) o[pattern_to_string(pat)] = n;
    return o;
}

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(static_cast<int>(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json simplicity(const SimplicityReport& s) {
    json j = {{"simple", s.simple}, {"vectors_checked", s.vectors_checked}};
    if (!s.simple) {
        json w = json::array();
        for (F4 x : s.witness) w.push_back(static_cast<int>(x));
        j["witness"] = w;
        j["witness_span_dim"] = s.witness_span_dim;
    }
    return j;
}

json commutant_json(const CommutantReport& c) {
    json j = {{"dim", c.dim}, {"is_field", c.is_field}, {"split", c.split}, {"has_omega", c.has_omega}};
    if (c.has_omega) j["omega"] = matrix_rows(c.omega);
    return j;
}

char var_of(const json& j) {
    const std::string v = j.value("var", std::string("T"));
    if (v.size() != 1 || v == "x" || v == "s") fail(ErrorCode::Parse, "var must be a single letter other than x and s");
    return v[0];
}

template <class K, class Conv>
PolyXT<K> from_coefficients(const json& arr, char var, const K& unit, Conv&& conv, bool* nested) {
    if (!arr.is_array()) fail(ErrorCode::Parse, "coefficients must be an array");
    std::vector<PolyT<K>> coeffs;
    const PolyT<K> tunit = PolyT<K>::constant(unit.one());
    for (const auto& c : arr) {
        if (c.is_array()) {
            *nested = true;
            PolyT<K> u = tunit.zero();
            PolyT<K> mono = tunit;
            for (const auto& t : c) {
                if (!t.is_string()) fail(ErrorCode::Parse, "coefficients must be strings");
                u += mono * conv(parse_expression(t.get<std::string>(), var));
                mono = mono * PolyT<K>::variable(unit.one());
            }
            coeffs.push_back(u);
        } else if (c.is_string()) {
            coeffs.push_back(conv(parse_expression(c.get<std::string>(), var)));
        } else {
            fail(ErrorCode::Parse, "coefficients must be strings or arrays of strings");
        }
    }
    return PolyXT<K>(std::move(coeffs), tunit);
}

}  // namespace

json poly_json(const PolyT<Rational>& u) { return t_poly(u); }
json poly_json(const PolyT<Fq>& u) { return t_poly(u); }
json poly_json(const PolyXT<Rational>& f) { return xt_poly(f); }
json poly_json(const PolyXT<Fq>& f) { return xt_poly(f); }
json flat_poly_json(const PolyXT<Rational>& f) { return flat_poly(f); }
json flat_poly_json(const PolyXT<Fq>& f) { return flat_poly(f); }

std::string curve_text(const SexticCurve& c, char var) {
    std::string s = std::visit([](const auto& f) { return f.f.to_string("x"); }, c);
    if (var != 'T') std::replace(s.begin(), s.end(), 'T', var);
    return s;
}

json curve_json(const SexticCurve& c, char var) {
    return std::visit(
        [&](const auto& f) {
            json j;
            j["domain"] = domain_name(f);
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, SexticQ>) {
                j["p"] = 0;
                j["ext_degree"] = 1;
            } else {
                j["p"] = f.unit().field().characteristic();
                j["ext_degree"] = f.unit().field().degree();
            }
            j["var"] = std::string(1, var);
            j["function_field"] = f.function_field;
            j["coefficients"] = f.function_field ? poly_json(f.f) : flat_poly_json(f.f);
            j["separable"] = f.separable;
            j["clearing"] = poly_json(f.clearing);
            j["text"] = curve_text(c, var);
            return j;
        },
        c);
}

SexticCurve curve_from_json(const json& j, bool allow_singular) {
    if (!j.is_object()) fail(ErrorCode::Parse, "curve JSON must be an object");
    try {
        const u64 p = j.value("p", u64{0});
        const unsigned k = j.value("ext_degree", 1u);
        const char var = var_of(j);
        const bool has_coeffs = j.contains("coefficients");
        if (!has_coeffs && !j.contains("text")) fail(ErrorCode::Parse, "curve JSON needs coefficients or text");
        if (p == 0) {
            bool nested = false;
            PolyXT<Rational> f = has_coeffs
                                     ? from_coefficients(j["coefficients"], var, Rational(1),
                                                         [](const SparsePoly& e) { return to_rational_t(e); }, &nested)
                                     : to_rational_xt(parse_expression(j["text"].get<std::string>(), var));
            if (!has_coeffs) nested = mentions_t(parse_expression(j["text"].get<std::string>(), var));
            return make_sextic(std::move(f), j.value("function_field", nested), allow_singular);
        }
        const ExtField& F = ExtField::get(p, k);
        bool nested = false;
        PolyXT<Fq> f = has_coeffs ? from_coefficients(j["coefficients"], var, F.one(),
                                                      [&](const SparsePoly& e) { return to_fq_t(e, F); }, &nested)
                                  : to_fq_xt(parse_expression(j["text"].get<std::string>(), var), F);
        if (!has_coeffs) nested = mentions_t(parse_expression(j["text"].get<std::string>(), var));
        return make_sextic(std::move(f), j.value("function_field", nested), allow_singular);
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("curve JSON: ") + e.what());
    }
}

SexticCurve parse_curve(const std::string& text, u64 p, unsigned ext_degree, char var, bool allow_singular) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            fail(ErrorCode::Parse, std::string("curve JSON: ") + e.what());
        }
        if (!j.contains("p") && p != 0) j["p"] = p;
        if (!j.contains("ext_degree")) j["ext_degree"] = ext_degree;
        if (!j.contains("var")) j["var"] = std::string(1, var);
        return curve_from_json(j, allow_singular);
    }
    json j = {{"p", p}, {"ext_degree", ext_degree}, {"var", std::string(1, var)}, {"text", text}};
    return curve_from_json(j, allow_singular);
}

json report_json(const Mat2& m) {
    return json::array({json::array({poly_json(m[0][0]), poly_json(m[0][1])}),
                        json::array({poly_json(m[1][0]), poly_json(m[1][1])})});
}

json report_json(const CartierManinReport& r) {
    json j;
    j["p"] = r.p;
    j["verdict"] = to_string(r.verdict);
    j["case"] = to_string(r.case_tag);
    j["c_p_minus_1"] = poly_json(r.c_p_minus_1);
    j["c_p_minus_2"] = poly_json(r.c_p_minus_2);
    j["c_2p_minus_1"] = poly_json(r.c_2p_minus_1);
    j["c_2p_minus_2"] = poly_json(r.c_2p_minus_2);
    j["m"] = report_json(r.m);
    j["m_frob"] = report_json(r.m_frob);
    j["product"] = report_json(r.product);
    j["invariant_product"] = report_json(r.invariant_product);
    j["orders_agree"] = r.orders_agree;
    return j;
}

json report_json(const GaloisCertificate& c) {
    json j;
    j["verdict"] = to_string(c.verdict);
    j["reason"] = c.reason;
    j["samples"] = c.samples;
    j["counts"] = pattern_map(c.counts);
    json w = json::object();
    for (const auto& [pat, label] : c.witnesses) w[pattern_to_string(pat)] = label;
    j["witnesses"] = w;
    j["square_discriminant"] = c.square_discriminant;
    j["irreducible_evidence"] = c.irreducible_evidence;
    j["residual"] = c.residual;
    j["max_degree_used"] = c.max_degree_used;
    j["heuristic"] = c.heuristic;
    return j;
}

json report_json(const RowReport& r) {
    json j;
    j["table_id"] = r.row.table_id;
    j["line"] = r.row.line;
    j["b"] = r.row.b;
    j["c"] = r.row.c;
    j["d"] = r.row.d;
    j["p"] = r.row.p;
    j["derived_poly"] = r.derived_poly;
    j["expected_poly"] = r.expected_canonical;
    j["poly_match"] = r.poly_match;
    if (r.row.p == 0) {
        j["disc_square"] = r.disc_square;
    } else {
        j["expected_class"] = r.row.expected_class;
        j["class_match"] = r.class_match;
    }
    if (r.cartier) {
        j["verdict"] = to_string(r.cartier->verdict);
        j["case"] = to_string(r.cartier->case_tag);
        j["orders_agree"] = r.cartier->orders_agree;
    }
    if (r.galois) j["galois"] = report_json(*r.galois);
    if (!r.error.empty()) j["error"] = r.error;
    j["passed"] = r.passed;
    return j;
}

json report_json(const CoprimalityReport& r) {
    json pairs = json::array();
    for (auto [a, b] : r.non_coprime) pairs.push_back(json::array({a, b}));
    return {{"size", r.size}, {"all_coprime", r.all_coprime()}, {"non_coprime", pairs}};
}

json report_json(const TableReport& t) {
    json j;
    j["summary"] = true;
    j["table_id"] = t.id;
    j["rows"] = t.rows.size();
    j["failures"] = t.failures;
    if (t.coprimality) j["coprimality"] = report_json(*t.coprimality);
    j["notes"] = t.notes;
    j["passed"] = t.passed;
    return j;
}

json report_json(const ScanHit& h) {
    json j;
    j["index"] = h.index;
    j["b"] = poly_json(h.b);
    j["c"] = poly_json(h.c);
    j["d"] = poly_json(h.d);
    j["curve"] = h.curve.f.to_string("x");
    j["coefficients"] = poly_json(h.curve.f);
    if (h.error.empty() || h.cartier.p != 0) {
        j["verdict"] = to_string(h.cartier.verdict);
        j["case"] = to_string(h.cartier.case_tag);
        j["orders_agree"] = h.cartier.orders_agree;
    }
    if (h.galois) j["galois"] = report_json(*h.galois);
    j["splitting"] = to_string(h.splitting);
    j["red_flag"] = h.red_flag;
    if (!h.error.empty()) j["error"] = h.error;
    return j;
}

json report_json(const ScanSummary& s) {
    json j;
    j["summary"] = true;
    j["p"] = s.p;
    j["grid_points"] = s.grid_points;
    j["enumerated"] = s.enumerated;
    j["separable"] = s.separable;
    j["supersingular"] = s.supersingular;
    j["emitted"] = s.emitted;
    j["certified"] = s.certified;
    j["supersingular_certified"] = s.supersingular_certified;
    j["red_flags"] = s.red_flags;
    j["order_disagreements"] = s.order_disagreements;
    j["errors"] = s.errors;
    return j;
}

json report_json(const PipelineVerdict& v) {
    json j;
    j["domain"] = v.domain;
    j["d"] = v.d;
    j["separable"] = v.separable;
    if (v.galois) j["galois"] = report_json(*v.galois);
    if (v.cartier) j["cartier"] = report_json(*v.cartier);
    if (v.splitting) j["splitting"] = to_string(*v.splitting);
    j["hypotheses_met"] = v.hypotheses_met;
    j["outcome"] = to_string(v.outcome);
    if (v.outcome != Outcome::CharacteristicZero)
        j["branch"] = v.outcome == Outcome::Supersingular ? "ii" : "i";
    j["red_flag"] = v.red_flag;
    j["consistent"] = v.consistent();
    j["notes"] = v.notes;
    return j;
}

json report_json(const RepReport& r) {
    json j;
    j["group_order"] = r.group_order;
    j["cycle_census"] = pattern_map(r.cycle_census);
    j["doubly_transitive"] = r.doubly_transitive;
    j["faithful"] = r.faithful;
    j["heart_elements"] = r.heart_elements;
    j["simple_f2"] = simplicity(r.simple_f2);
    j["commutant_f2"] = commutant_json(r.commutant_f2);
    j["omega_relation"] = r.omega_relation;
    j["simple_f4"] = simplicity(r.simple_f4);
    j["commutant_f4"] = commutant_json(r.commutant_f4);
    j["simple_f4_structure"] = simplicity(r.simple_f4_structure);
    j["commutant_f4_structure"] = commutant_json(r.commutant_f4_structure);
    j["commutant_basis_independent"] = r.commutant_basis_independent;
    json census;
    json gen = json::object();
    for (const auto& [cls, n] : r.census.generator_counts) gen[to_string(cls)] = n;
    census["generator_counts"] = gen;
    json dims = json::object();
    for (const auto& [d, n] : r.census.dimension_counts) dims[std::to_string(d)] = n;
    census["dimension_counts"] = dims;
    census["joins_checked"] = r.census.joins_checked;
    census["dim2_is_commutant"] = r.census.dim2_is_commutant;
    census["dim8_is_centralizer"] = r.census.dim8_is_centralizer;
    census["very_simple_ok"] = r.census.very_simple_ok;
    census["gaps"] = r.census.gaps;
    j["census"] = census;
    j["passed"] = r.passed;
    return j;
}

json report_json(const Char3IdentityReport& r) {
    return {{"a1_equals_a5", r.a1_equals_a5},
            {"a4_equals_a2_minus_a1", r.a4_equals_a2_minus_a1},
            {"obstruction", poly_json(r.obstruction)},
            {"obstruction_vanishes", r.obstruction.is_zero()}};
}

json report_json(const F9FamilyCurve& f) {
    json j;
    j["curve"] = curve_json(f.curve);
    j["b"] = poly_json(f.b);
    j["bd"] = poly_json(f.bd);
    j["cleared"] = f.cleared;
    return j;
}

json report_json(const QuadraticOrder& o, u64 p) {
    json j;
    j["d"] = o.d;
    j["c"] = o.c;
    j["discriminant"] = order_discriminant(o).get_str();
    const MinimalPolynomial mp = generator_minpoly(o);
    j["minpoly"] = json::array({mp.cst.get_str(), mp.lin.get_str(), "1"});
    j["mod2_tensor"] = to_string(mod2_tensor_class(o));
    if (p != 0) j["splitting"] = to_string(splitting_type(p, o.d));
    return j;
}

}  // namespace g2ss
