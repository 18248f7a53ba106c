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


#include "g2ss/g2ss.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "g2ss/expr.hpp"
#include "g2ss/serialize.hpp"

struct g2ss_curve {
    g2ss::SexticCurve curve;
    char var = 'T';
};

namespace {

using namespace g2ss;

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
g2ss_status guarded(Fn&& fn) noexcept {
    try {
        last_error.clear();
        return fn();
    } catch (const Error& e) {
        last_error = std::string(error_code_name(e.code())) + ": " + e.what();
        return static_cast<g2ss_status>(static_cast<int>(e.code()));
    } catch (const std::exception& e) {
        last_error = std::string("internal: ") + e.what();
        return G2SS_INTERNAL;
    } catch (...) {
        last_error = "internal: unknown exception";
        return G2SS_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char var_letter(const char* var) {
    if (!var || !*var) return 'T';
    if (std::strlen(var) != 1 || *var == 'x' || *var == 's')
        fail(ErrorCode::InvalidArgument, "var must be a single letter other than x and s");
    return *var;
}

g2ss_status checked(bool ok, const char* what) {
    if (ok) return G2SS_OK;
    last_error = what;
    return G2SS_CHECK_FAILED;
}

const SexticFq& fq_curve(const g2ss_curve* c, u64 p) {
    const auto* f = std::get_if<SexticFq>(&c->curve);
    if (!f) fail(ErrorCode::WrongCharacteristic, "curve is over Q; reduce it modulo p first");
    if (p != 0 && f->unit().field().characteristic() != p)
        fail(ErrorCode::WrongCharacteristic, "curve is not in characteristic " + std::to_string(p));
    return *f;
}

}  // namespace

extern "C" {

const char* g2ss_version(void) { return "0.1.0"; }

const char* g2ss_status_name(g2ss_status status) {
    switch (status) {
        case G2SS_OK: return "OK";
        case G2SS_CHECK_FAILED: return "CheckFailed";
        case G2SS_INTERNAL: return "Internal";
        default:
            if (status >= G2SS_INVALID_ARGUMENT && status <= G2SS_IO)
                return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
            return "Unknown";
    }
}

const char* g2ss_last_error(void) { return last_error.c_str(); }

void g2ss_string_free(char* s) { std::free(s); }

g2ss_status g2ss_curve_parse(const char* text, uint64_t p, unsigned ext_degree, const char* var, int allow_singular,
                             g2ss_curve** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        const char v = var_letter(var);
        auto c = std::make_unique<g2ss_curve>(g2ss_curve{parse_curve(text, p, ext_degree ? ext_degree : 1, v, allow_singular != 0), v});
        *out = c.release();
        return G2SS_OK;
    });
}

void g2ss_curve_free(g2ss_curve* curve) { delete curve; }

g2ss_status g2ss_curve_to_json(const g2ss_curve* curve, char** out_json) {
    return guarded([&] {
        need(curve, "curve");
        need(out_json, "out_json");
        *out_json = dup(curve_json(curve->curve, curve->var).dump());
        return G2SS_OK;
    });
}

g2ss_status g2ss_curve_reduce(const g2ss_curve* curve, uint64_t p, g2ss_curve** out) {
    return guarded([&] {
        need(curve, "curve");
        need(out, "out");
        const auto* q = std::get_if<SexticQ>(&curve->curve);
        if (!q) fail(ErrorCode::WrongCharacteristic, "only curves over Q or Q(T) reduce modulo p");
        auto c = std::make_unique<g2ss_curve>(g2ss_curve{reduce_mod_p(*q, p, true), curve->var});
        *out = c.release();
        return G2SS_OK;
    });
}

g2ss_status g2ss_brumer_gen(const char* b, const char* c, const char* d, uint64_t p, const char* var,
                            int function_field, int allow_singular, g2ss_curve** out) {
    return guarded([&] {
        need(b, "b");
        need(c, "c");
        need(d, "d");
        need(out, "out");
        const char v = var_letter(var);
        const SparsePoly eb = parse_expression(b, v), ec = parse_expression(c, v), ed = parse_expression(d, v);
        const bool ff = function_field != 0 || mentions_t(eb) || mentions_t(ec) || mentions_t(ed);
        SexticCurve curve;
        if (p == 0) {
            curve = brumer_polynomial(to_rational_t(eb), to_rational_t(ec), to_rational_t(ed), ff, allow_singular != 0);
        } else {
            const ExtField& F = ExtField::get(p);
            curve = brumer_polynomial(to_fq_t(eb, F), to_fq_t(ec, F), to_fq_t(ed, F), ff, allow_singular != 0);
        }
        *out = new g2ss_curve{std::move(curve), v};
        return G2SS_OK;
    });
}

g2ss_status g2ss_brumer_report(const g2ss_curve* curve, char** out_json) {
    return guarded([&] {
        need(curve, "curve");
        need(out_json, "out_json");
        json j = curve_json(curve->curve, curve->var);
        if (const auto* f = std::get_if<SexticFq>(&curve->curve); f && f->unit().field().characteristic() == 3)
            j["char3_identities"] = report_json(brumer_char3_identities(*f));
        *out_json = dup(j.dump());
        return G2SS_OK;
    });
}

g2ss_status g2ss_brumer_f9(const char* c, const char* b, const char* eps, char** out_json) {
    return guarded([&] {
        need(c, "c");
        need(b, "b");
        need(eps, "eps");
        need(out_json, "out_json");
        const ExtField& F9 = ExtField::get(3, 2);
        const PolyT<Fq> cc = to_fq_t(parse_expression(c), F9);
        const PolyT<Fq> bb = to_fq_t(parse_expression(b), F9);
        const PolyT<Fq> e = to_fq_t(parse_expression(eps), F9);
        if (e.degree() > 0) fail(ErrorCode::BadEpsilon, "eps must be a constant");
        const F9FamilyCurve fam = brumer_f9_family(cc, bb, e.is_zero() ? F9.zero() : e.coeff(0));
        json j = report_json(fam);
        if (fam.curve.separable) j["cartier"] = report_json(cartier_manin(fam.curve, 3));
        *out_json = dup(j.dump());
        return G2SS_OK;
    });
}

g2ss_status g2ss_classify(const g2ss_curve* curve, uint64_t p, char** out_json) {
    return guarded([&] {
        need(curve, "curve");
        need(out_json, "out_json");
        SexticFq reduced;
        const SexticFq* f = nullptr;
        if (const auto* q = std::get_if<SexticQ>(&curve->curve)) {
            if (p == 0) fail(ErrorCode::WrongCharacteristic, "classification needs a prime p");
            reduced = reduce_mod_p(*q, p);
            f = &reduced;
        } else {
            f = &fq_curve(curve, p);
        }
        const u64 ch = f->unit().field().characteristic();
        const CartierManinReport r = cartier_manin(*f, ch);
        json j;
        j["curve"] = curve_json(SexticCurve(*f), curve->var);
        j["cartier"] = report_json(r);
        bool ok = true;
        if (ch == 3) {
            const Verdict v3 = char3_criterion(*f);
            j["char3_criterion"] = to_string(v3);
            ok = v3 == r.verdict;
        }
        *out_json = dup(j.dump());
        return checked(ok, "closed-form characteristic 3 criterion disagrees with the Cartier-Manin test");
    });
}

g2ss_status g2ss_galois(const g2ss_curve* curve, int samples, uint64_t seed, double threshold, char** out_json) {
    return guarded([&] {
        need(curve, "curve");
        need(out_json, "out_json");
        GaloisOptions opt;
        if (samples > 0) opt.samples = samples;
        opt.seed = seed;
        if (threshold > 0) opt.residual_threshold = threshold;
        const GaloisCertificate cert = certify_a5(curve->curve, opt);
        json j;
        j["curve"] = curve_json(curve->curve, curve->var);
        j["galois"] = report_json(cert);
        *out_json = dup(j.dump());
        return checked(cert.verdict == GaloisVerdict::CertifiedA5, "A5 certificate not granted");
    });
}

g2ss_status g2ss_pipeline(const g2ss_curve* curve, int64_t d, char** out_json) {
    return guarded([&] {
        need(curve, "curve");
        need(out_json, "out_json");
        const PipelineVerdict v = classification_pipeline(curve->curve, d);
        json j;
        j["curve"] = curve_json(curve->curve, curve->var);
        j["verdict"] = report_json(v);
        *out_json = dup(j.dump());
        return checked(v.consistent(), "red flag: supersingular, A5-certified and p splits");
    });
}

g2ss_status g2ss_table_reproduce(int id, const char* fixtures_csv, g2ss_line_sink sink, void* user,
                                 char** out_summary) {
    return guarded([&] {
        need(out_summary, "out_summary");
        const auto rows = parse_fixtures(fixtures_csv ? std::string(fixtures_csv) : builtin_fixtures_csv());
        const TableReport rep = reproduce_table(id, rows, table_galois_options(), [&](const RowReport& r) {
            if (sink) sink(report_json(r).dump().c_str(), user);
        });
        *out_summary = dup(report_json(rep).dump());
        return checked(rep.passed, "table reproduction had failing rows");
    });
}

void g2ss_scan_options_init(g2ss_scan_options* opt) {
    if (!opt) return;
    opt->p = 5;
    opt->grid = "linear";
    opt->seed = 0x5EED;
    opt->d = 5;
    opt->require_separable = 1;
    opt->only_supersingular = 1;
    opt->certify_a5 = 1;
    opt->threads = 0;
}

g2ss_status g2ss_scan(const g2ss_scan_options* opt, g2ss_line_sink sink, void* user, char** out_summary) {
    return guarded([&] {
        need(opt, "opt");
        need(out_summary, "out_summary");
        ScanJob job;
        job.p = opt->p;
        job.grid = parse_grid(opt->grid ? opt->grid : "linear");
        job.seed = opt->seed;
        job.d = opt->d;
        job.require_separable = opt->require_separable != 0;
        job.only_supersingular = opt->only_supersingular != 0;
        job.certify_a5 = opt->certify_a5 != 0;
        job.threads = opt->threads;
        const ScanSummary s = scan(job, [&](const ScanHit& h) {
            if (sink) sink(report_json(h).dump().c_str(), user);
        });
        *out_summary = dup(report_json(s).dump());
        if (s.red_flags) return checked(false, "red flag: supersingular, A5-certified and p splits");
        return checked(s.errors == 0, "some curves failed with errors");
    });
}

g2ss_status g2ss_rep_verify(uint64_t seed, char** out_json) {
    return guarded([&] {
        need(out_json, "out_json");
        const RepReport r = verify_representations(seed);
        *out_json = dup(report_json(r).dump());
        return checked(r.passed, "representation checks failed");
    });
}

g2ss_status g2ss_quadorder(int64_t d, int64_t c, uint64_t p, char** out_json) {
    return guarded([&] {
        need(out_json, "out_json");
        *out_json = dup(report_json(make_quadratic_order(d, c), p).dump());
        return G2SS_OK;
    });
}

}  // extern "C"
