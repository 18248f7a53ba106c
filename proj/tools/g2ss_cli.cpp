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


// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g2ss/g2ss.h"

namespace {

struct CurveDeleter {
    void operator()(g2ss_curve* c) const { g2ss_curve_free(c); }
};
using CurvePtr = std::unique_ptr<g2ss_curve, CurveDeleter>;

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { g2ss_string_free(s); }
};

// 0 all checks passed, 1 a check failed, 2 the computation itself failed.
int exit_code(g2ss_status st) {
    if (st == G2SS_OK) return 0;
    return st == G2SS_CHECK_FAILED ? 1 : 2;
}

int report_error(g2ss_status st) {
    std::cerr << (st == G2SS_CHECK_FAILED ? "check failed: " : "error: ") << g2ss_last_error() << "\n";
    return exit_code(st);
}

// Emits the JSON and, on a failed check, the reason on stderr.
int finish(g2ss_status st, const OwnedString& out) {
    if (out.s) std::cout << out.s << "\n";
    if (st != G2SS_OK) return report_error(st);
    return 0;
}

// --curve takes inline text or JSON, or the path of a file holding either.
std::string curve_argument(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return arg;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

g2ss_status load_curve(const std::string& arg, uint64_t p, unsigned k, const std::string& var, CurvePtr& out) {
    g2ss_curve* c = nullptr;
    const g2ss_status st = g2ss_curve_parse(curve_argument(arg).c_str(), p, k, var.c_str(), 0, &c);
    out.reset(c);
    return st;
}

void print_line(const char* line, void* user) {
    auto* os = static_cast<std::ostream*>(user);
    *os << line << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g2ss: genus 2 curves with real multiplication, supersingularity and A5 certificates"};
    app.require_subcommand(1);
    int rc = 0;

    // brumer
    auto* brumer = app.add_subcommand("brumer", "Brumer's sextic family");
    brumer->require_subcommand(1);
    auto* gen = brumer->add_subcommand("gen", "build the sextic for parameters b, c, d");
    uint64_t gen_p = 0;
    std::string gb, gc, gd, gvar = "T";
    bool gen_ff = false;
    gen->add_option("--p", gen_p, "prime, or 0 for Q")->required();
    gen->add_option("--b", gb)->required();
    gen->add_option("--c", gc)->required();
    gen->add_option("--d", gd)->required();
    gen->add_option("--var", gvar, "function-field variable");
    gen->add_flag("--function-field", gen_ff, "treat constant parameters as elements of K(T)");
    gen->callback([&] {
        g2ss_curve* raw = nullptr;
        g2ss_status st = g2ss_brumer_gen(gb.c_str(), gc.c_str(), gd.c_str(), gen_p, gvar.c_str(), gen_ff, 0, &raw);
        CurvePtr c(raw);
        if (st != G2SS_OK) {
            rc = report_error(st);
            return;
        }
        OwnedString out;
        st = g2ss_brumer_report(c.get(), &out.s);
        rc = finish(st, out);
    });
    auto* f9 = brumer->add_subcommand("f9", "the eps-family over F_9(T), s^2 = -1");
    std::string f9c, f9b, f9eps;
    f9->add_option("--C", f9c)->required();
    f9->add_option("--B", f9b)->required();
    f9->add_option("--eps", f9eps, "-1 + s or -1 - s")->required();
    f9->callback([&] {
        OwnedString out;
        rc = finish(g2ss_brumer_f9(f9c.c_str(), f9b.c_str(), f9eps.c_str(), &out.s), out);
    });

    // classify
    auto* classify = app.add_subcommand("classify", "supersingularity via the Cartier-Manin matrix");
    uint64_t cl_p = 0;
    unsigned cl_k = 1;
    std::string cl_curve, cl_var = "T";
    classify->add_option("--p", cl_p, "characteristic")->required();
    classify->add_option("--curve", cl_curve, "JSON, expression, or a file holding either")->required();
    classify->add_option("--ext", cl_k, "coefficient field F_{p^k}");
    classify->add_option("--var", cl_var);
    classify->callback([&] {
        CurvePtr c;
        if (g2ss_status st = load_curve(cl_curve, cl_p, cl_k, cl_var, c); st != G2SS_OK) {
            rc = report_error(st);
            return;
        }
        OwnedString out;
        rc = finish(g2ss_classify(c.get(), cl_p, &out.s), out);
    });

    // galois
    auto* galois = app.add_subcommand("galois", "Frobenius cycle-type certificate for A5");
    uint64_t ga_p = 0, ga_seed = 0x5EED;
    unsigned ga_k = 1;
    int ga_samples = 200;
    double ga_threshold = 1e-20;
    std::string ga_curve, ga_var = "T";
    galois->add_option("--p", ga_p, "prime, or 0 for Q")->required();
    galois->add_option("--curve", ga_curve)->required();
    galois->add_option("--samples", ga_samples)->check(CLI::PositiveNumber);
    galois->add_option("--seed", ga_seed);
    galois->add_option("--threshold", ga_threshold, "largest accepted residual");
    galois->add_option("--ext", ga_k);
    galois->add_option("--var", ga_var);
    galois->callback([&] {
        CurvePtr c;
        if (g2ss_status st = load_curve(ga_curve, ga_p, ga_k, ga_var, c); st != G2SS_OK) {
            rc = report_error(st);
            return;
        }
        OwnedString out;
        rc = finish(g2ss_galois(c.get(), ga_samples, ga_seed, ga_threshold, &out.s), out);
    });

    // rep
    auto* rep = app.add_subcommand("rep", "the PSL_2(F_5) permutation module over F_2 and F_4");
    rep->require_subcommand(1);
    auto* verify = rep->add_subcommand("verify", "group, commutants, simplicity and the algebra census");
    uint64_t rep_seed = 0x5EED;
    verify->add_option("--seed", rep_seed);
    verify->callback([&] {
        OwnedString out;
        rc = finish(g2ss_rep_verify(rep_seed, &out.s), out);
    });

    // table
    auto* table = app.add_subcommand("table", "fixture tables");
    table->require_subcommand(1);
    auto* reproduce = table->add_subcommand("reproduce", "rebuild and check every row of a table");
    int tb_id = 0;
    std::string tb_fixtures, tb_out;
    reproduce->add_option("--id", tb_id)->required()->check(CLI::Range(1, 6));
    reproduce->add_option("--fixtures", tb_fixtures, "CSV replacing the built-in tables")->check(CLI::ExistingFile);
    reproduce->add_option("--out", tb_out, "JSON-lines destination (default stdout)");
    reproduce->callback([&] {
        std::string csv;
        if (!tb_fixtures.empty()) csv = curve_argument(tb_fixtures);
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!tb_out.empty()) {
            file.open(tb_out);
            if (!file) {
                std::cerr << "error: cannot write " << tb_out << "\n";
                rc = 2;
                return;
            }
            os = &file;
        }
        OwnedString summary;
        const g2ss_status st =
            g2ss_table_reproduce(tb_id, csv.empty() ? nullptr : csv.c_str(), print_line, os, &summary.s);
        if (summary.s && os != &std::cout) *os << summary.s << "\n";
        rc = finish(st, summary);
    });

    // scan
    auto* scan = app.add_subcommand("scan", "enumerate Brumer parameters over F_p[T]");
    g2ss_scan_options so;
    g2ss_scan_options_init(&so);
    std::string sc_grid = "linear", sc_out;
    bool sc_all = false, sc_no_galois = false, sc_keep_singular = false;
    scan->add_option("--p", so.p)->required();
    scan->add_option("--grid", sc_grid, "linear | constant | deg=K, optionally ,sample=N");
    scan->add_option("--out", sc_out, "JSON-lines destination")->required();
    scan->add_option("--seed", so.seed);
    scan->add_option("--d", so.d, "square-free d of Q(sqrt d)");
    scan->add_option("--threads", so.threads);
    scan->add_flag("--all", sc_all, "emit every curve, not only supersingular ones");
    scan->add_flag("--no-galois", sc_no_galois, "skip the A5 certificate");
    scan->add_flag("--keep-singular", sc_keep_singular, "emit non-separable curves as errors");
    scan->callback([&] {
        std::ofstream file(sc_out);
        if (!file) {
            std::cerr << "error: cannot write " << sc_out << "\n";
            rc = 2;
            return;
        }
        so.grid = sc_grid.c_str();
        so.only_supersingular = !sc_all;
        so.certify_a5 = !sc_no_galois;
        so.require_separable = !sc_keep_singular;
        OwnedString summary;
        const g2ss_status st = g2ss_scan(&so, print_line, &file, &summary.s);
        if (summary.s) file << summary.s << "\n";
        rc = finish(st, summary);
    });

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "hypotheses, classification and the splitting condition");
    std::string pl_curve, pl_var = "T";
    int64_t pl_d = 5;
    uint64_t pl_p = 0;
    unsigned pl_k = 1;
    pipeline->add_option("--curve", pl_curve)->required();
    pipeline->add_option("--d", pl_d)->required();
    pipeline->add_option("--p", pl_p, "characteristic for inline curves (JSON carries its own)");
    pipeline->add_option("--ext", pl_k);
    pipeline->add_option("--var", pl_var);
    pipeline->callback([&] {
        CurvePtr c;
        if (g2ss_status st = load_curve(pl_curve, pl_p, pl_k, pl_var, c); st != G2SS_OK) {
            rc = report_error(st);
            return;
        }
        OwnedString out;
        rc = finish(g2ss_pipeline(c.get(), pl_d, &out.s), out);
    });

    // quadorder
    auto* quad = app.add_subcommand("quadorder", "the order Z[c*eta] in Q(sqrt d)");
    int64_t qd = 5, qc = 1;
    uint64_t qp = 0;
    quad->add_option("--d", qd)->required();
    quad->add_option("--c", qc);
    quad->add_option("--p", qp, "report how p splits");
    quad->callback([&] {
        OwnedString out;
        rc = finish(g2ss_quadorder(qd, qc, qp, &out.s), out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    return rc;
}
