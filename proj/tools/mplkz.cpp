// Command line front end: evaluation, continuation and identity checks.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "mplkz/continuation.hpp"
#include "mplkz/hypergeometric.hpp"
#include "mplkz/identities.hpp"
#include "mplkz/parse.hpp"
#include "mplkz/report.hpp"
#include "mplkz/series.hpp"
#include "mplkz/suite.hpp"

using namespace mplkz;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

cplx complex_arg(const std::string& text, const char* flag) {
    try {
        return parse_complex(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("cannot parse ") + flag + " '" + text + "'");
    }
}

void print_value(const ValueWithError& v) {
    std::cout << "value       " << format_complex(v.value) << "\n";
    std::cout << "error_bound " << g(v.error_bound) << "\n";
}

// Writes to the file, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text << "\n";
}

Word word_arg(const std::string& index, const std::string& word) {
    if (!index.empty() && !word.empty()) throw UsageError("give either --index or --word");
    if (index.empty() && word.empty()) throw UsageError("one of --index or --word is required");
    try {
        return index.empty() ? Word::parse(word) : MultiIndex::parse(index).to_word();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

struct VerifyArgs {
    int k = 1, l = 1, m = 1, n = 1, K = 40;
    std::string z, alpha = "0.1", beta = "0.2", gamma = "0.9", route = "principal";
    std::optional<double> tol;
    long mzv_terms = EvalParams{}.mzv_terms;
    std::string json, csv;
};

VerificationReport run_verify(const std::string& id, const VerifyArgs& a) {
    EvalParams ep;
    ep.mzv_terms = a.mzv_terms;
    auto tol = [&a](double d) { return a.tol.value_or(d); };
    auto zarg = [&a](const char* d) { return complex_arg(a.z.empty() ? d : a.z, "--z"); };
    const ParamSet ps{complex_arg(a.alpha, "--alpha"), complex_arg(a.beta, "--beta"), complex_arg(a.gamma, "--gamma")};
    auto real_z = [&](const char* d) {
        const cplx z = zarg(d);
        if (z.imag() != 0.0) throw UsageError("--z must be real for " + id);
        return z.real();
    };

    if (id == "thm-mplrel01") return verify_thm_mplrel01(a.k, a.l, a.m, zarg("0.5"), ep, tol(1e-6));
    if (id == "ohno-zagier") return verify_ohno_zagier(a.k, a.l, a.m, ep, tol(1e-4));
    if (id == "sum-formula") return verify_sum_formula(a.k, a.n, zarg("1"), ep, tol(1e-4));
    if (id == "euler-inversion") return verify_euler_inversion(a.k, zarg("0.5"), ep, tol(1e-6));
    if (id == "euler-zeta") return verify_euler_zeta(a.k, ep, tol(1e-4));
    if (id == "zveven") return verify_zveven(a.k, ep);
    if (id == "rel0infty-1") return verify_rel0infty(Rel0InftyVariant::Rel1, a.m, 0, real_z("0.4"), ep, tol(1e-6));
    if (id == "rel0infty-2") return verify_rel0infty(Rel0InftyVariant::Rel2, a.m, a.n, real_z("0.4"), ep, tol(1e-6));
    for (auto v : {Mzv0InftyVariant::N1Odd, Mzv0InftyVariant::N1Even, Mzv0InftyVariant::N2Odd,
                   Mzv0InftyVariant::N2Even, Mzv0InftyVariant::N2OddPrinted, Mzv0InftyVariant::N2EvenPrinted}) {
        if (id == to_string(v)) return verify_mzv0infty(v, a.m, ep, tol(1e-4));
    }
    if (id == "connection-01") return verify_connection_full(ConnectionTag::C01, ps, zarg("0.5"), ep, tol(1e-6));
    if (id == "connection-0infty") {
        ConnectionRoute route;
        if (a.route == "principal") {
            route = ConnectionRoute::Principal;
        } else if (a.route == "lower") {
            route = ConnectionRoute::LowerHalfPlane;
        } else {
            throw UsageError("--route must be principal or lower");
        }
        return verify_connection_full(ConnectionTag::C0Infinity, ps, zarg("0.5-0.5i"), ep, tol(1e-5), route);
    }
    if (id == "theorem31") return verify_hypergeom_mpl(ps, zarg("0.3"), a.K, ep, tol(1e-8));
    if (id == "corollary-phi01") return verify_phi01_mpl(ps, zarg("0.3"), a.K, ep, tol(1e-8));
    throw UsageError("unknown identity '" + id + "'");
}

Point point_arg(const std::string& s) {
    if (s == "0") return Point::Zero;
    if (s == "1") return Point::One;
    if (s == "inf") return Point::Infinity;
    throw UsageError("--at must be 0, 1 or inf");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiple polylogarithms, multiple zeta values and the Gauss hypergeometric equation"};
    app.require_subcommand(1);

    // eval
    std::string index, word, z = "0.5";
    std::optional<int> terms;
    double tol = 1e-15;
    auto* eval = app.add_subcommand("eval", "Li(w; z) with its truncation bound");
    eval->add_option("--index", index, "multi-index, e.g. 2,1");
    eval->add_option("--word", word, "word over x, y, e.g. xxy");
    eval->add_option("--z", z, "argument, e.g. 0.5 or 0.3+0.2i")->required();
    eval->add_option("--terms", terms, "series terms (default: enough for --tol)");
    eval->add_option("--tol", tol, "target truncation error when --terms is absent")->capture_default_str();

    // mzv
    std::string mzv_index;
    long mzv_terms = EvalParams{}.mzv_terms;
    auto* mzv_cmd = app.add_subcommand("mzv", "multiple zeta value by nested sums");
    mzv_cmd->add_option("--index", mzv_index, "admissible multi-index, e.g. 2,1")->required();
    mzv_cmd->add_option("--terms", mzv_terms, "outer summation bound")->capture_default_str();

    // hyp
    std::string alpha = "0.1", beta = "0.2", gamma = "0.9", hz = "0.5", at;
    auto* hyp = app.add_subcommand("hyp", "Gauss hypergeometric function or a fundamental matrix");
    hyp->add_option("--alpha", alpha)->capture_default_str();
    hyp->add_option("--beta", beta)->capture_default_str();
    hyp->add_option("--gamma", gamma)->capture_default_str();
    hyp->add_option("--z", hz)->capture_default_str();
    hyp->add_option("--at", at, "print the fundamental matrix at 0, 1 or inf instead");

    // continue
    std::string path_text, cindex, cword;
    double ctol = 1e-12;
    auto* cont = app.add_subcommand("continue", "Li(w) continued along a polyline starting in (0, 1)");
    cont->add_option("--path", path_text, "e.g. \"0.5 -> 1i -> 2\"")->required();
    cont->add_option("--index", cindex);
    cont->add_option("--word", cword);
    cont->add_option("--tol", ctol, "ODE tolerance")->capture_default_str();

    // verify
    std::string id;
    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check one identity");
    verify->add_option("id", id,
                       "thm-mplrel01, ohno-zagier, sum-formula, euler-inversion, euler-zeta, zveven, rel0infty-1, "
                       "rel0infty-2, mzv0infty-{n1odd,n1even,n2odd,n2even}[-printed], connection-01, "
                       "connection-0infty, theorem31, corollary-phi01")
        ->required();
    verify->add_option("--k", va.k);
    verify->add_option("--l", va.l);
    verify->add_option("--m", va.m);
    verify->add_option("--n", va.n);
    verify->add_option("--z", va.z);
    verify->add_option("--alpha", va.alpha)->capture_default_str();
    verify->add_option("--beta", va.beta)->capture_default_str();
    verify->add_option("--gamma", va.gamma)->capture_default_str();
    verify->add_option("--K", va.K, "truncation weight of the MPL expansions")->capture_default_str();
    verify->add_option("--route", va.route, "principal or lower (connection-0infty)")->capture_default_str();
    verify->add_option("--tol", va.tol);
    verify->add_option("--mzv-terms", va.mzv_terms)->capture_default_str();
    verify->add_option("--json", va.json, "write the report as JSON (- for stdout)");
    verify->add_option("--csv", va.csv, "write the report as CSV (- for stdout)");

    // suite
    SuiteOptions so;
    std::string sjson, scsv;
    auto* suite = app.add_subcommand("suite", "run the acceptance battery");
    suite->add_option("--max-weight", so.max_weight, "cap on the weight of every criterion");
    suite->add_option("--jobs", so.jobs, "criteria run in parallel")->capture_default_str();
    suite->add_option("--only", so.only, "criterion numbers")->delimiter(',');
    suite->add_option("--mzv-terms", so.eval.mzv_terms)->capture_default_str();
    suite->add_option("--json", sjson, "write results as JSON (- for stdout)");
    suite->add_option("--csv", scsv, "write failing reports as CSV (- for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval) {
            const Word w = word_arg(index, word);
            const cplx zz = complex_arg(z, "--z");
            EvalParams ep;
            ep.series_terms = terms.value_or(terms_for(std::abs(zz), tol));
            print_value(w.in_h1() ? mpl(w, zz, ep) : mpl_extended(w, zz, ep));
        } else if (*mzv_cmd) {
            EvalParams ep;
            ep.mzv_terms = mzv_terms;
            MultiIndex idx;
            try {
                idx = MultiIndex::parse(mzv_index);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            print_value(mzv(idx, ep));
        } else if (*hyp) {
            const ParamSet ps{complex_arg(alpha, "--alpha"), complex_arg(beta, "--beta"), complex_arg(gamma, "--gamma")};
            const cplx zz = complex_arg(hz, "--z");
            if (at.empty()) {
                print_value(hypergeom_2f1(ps, zz));
            } else {
                std::cout << to_string(fundamental_matrix(ps, point_arg(at), zz)) << "\n";
            }
        } else if (*cont) {
            const Word w = word_arg(cindex, cword);
            std::optional<Path> path;
            try {
                path = Path::parse(path_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::cout << "value " << format_complex(continue_extended(w, *path, ctol)) << "\n";
        } else if (*verify) {
            const VerificationReport r = run_verify(id, va);
            if (!va.json.empty()) emit(va.json, to_json(r, 2));
            if (!va.csv.empty()) emit(va.csv, csv_header() + "\n" + to_csv_row(r));
            if (va.json != "-" && va.csv != "-") std::cout << to_text(r) << "\n";
            if (r.verdict == Verdict::Error) {
                std::cerr << "error: " << r.note << "\n";
                return kDomain;
            }
            return r.passed() ? kOk : kFail;
        } else if (*suite) {
            if (so.jobs < 1) throw UsageError("--jobs must be >= 1");
            for (int c : so.only) {
                if (c < 1 || c > kCriterionCount) throw UsageError("--only takes numbers 1..11");
            }
            const auto results = run_suite(so);
            bool all = true;
            for (const auto& r : results) {
                if (sjson != "-" && scsv != "-") std::cout << to_text(r) << "\n";
                all = all && r.ok();
            }
            if (!sjson.empty()) emit(sjson, suite_to_json(results));
            if (!scsv.empty()) emit(scsv, suite_to_csv(results));
            return all ? kOk : kFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kOk;
}
