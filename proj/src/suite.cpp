#include "mplkz/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <numbers>
#include <random>
#include <thread>
#include <unordered_map>

#include "mplkz/continuation.hpp"
#include "mplkz/identities.hpp"
#include "mplkz/kz.hpp"
#include "mplkz/parse.hpp"
#include "mplkz/word_algebra.hpp"

namespace mplkz {

namespace {

struct CriterionInfo {
    const char* title;
    double time_limit;
    int default_weight;
};

// Titles, wall-clock limits (s) and the default weight/order of each criterion.
const CriterionInfo kCriteria[kCriterionCount] = {
    {"shuffle algebra and regularization, exact", 10, 5},
    {"rho0 closed form equals the matrix product", 30, 8},
    {"MPL expansions of the local solutions at 0", 60, 40},
    {"shuffle product is multiplicative on MPLs", 60, 6},
    {"analytic continuation: monodromy, composition, homotopy", 120, 4},
    {"relation from the (1,1) entry of C01", 300, 6},
    {"Ohno-Zagier, Euler inversion, Euler relation, sum formula", 600, 6},
    {"zeta at even arguments", 60, 8},
    {"relations between 0 and infinity", 600, 6},
    {"full connection matrices", 60, 0},
    {"product expansion and N recurrence, exact", 10, 6},
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::vector<Word> words_up_to(int weight, bool include_empty) {
    std::vector<Word> out;
    for (int w = include_empty ? 0 : 1; w <= weight; ++w) {
        for (auto& u : all_words(static_cast<std::size_t>(w))) out.push_back(u);
    }
    return out;
}

// Tallies checks and keeps only failing reports.
struct Tally {
    long checks = 0;
    long failures = 0;
    double worst = 0.0;
    std::vector<VerificationReport> reports;

    void exact(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
    void add(const VerificationReport& r) {
        ++checks;
        if (std::isfinite(r.abs_err)) worst = std::max(worst, r.abs_err);
        if (!r.passed()) {
            ++failures;
            reports.push_back(r);
        }
    }
    // An absolute-error check reported through a VerificationReport.
    void abs_check(const std::string& id, std::vector<std::pair<std::string, std::string>> params, cplx lhs,
                   cplx rhs, double tol) {
        VerificationReport r = make_report(id, std::move(params), lhs, rhs, tol);
        if (r.verdict == Verdict::Pass && r.abs_err > tol) r.verdict = Verdict::Fail;
        add(r);
    }
};

int cap(int value, const SuiteOptions& o) { return o.max_weight > 0 ? std::min(value, o.max_weight) : value; }

// 1
void shuffle_reg(int W, Tally& t, std::string& detail) {
    const std::vector<Word> words = words_up_to(W, true);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (u.weight() + v.weight() > static_cast<std::size_t>(W)) continue;
            t.exact(shuffle(u, v) == shuffle(v, u));
            for (const auto& w : words) {
                if (u.weight() + v.weight() + w.weight() > static_cast<std::size_t>(W)) continue;
                t.exact(shuffle(shuffle(LinComb(u), LinComb(v)), LinComb(w)) ==
                        shuffle(LinComb(u), shuffle(LinComb(v), LinComb(w))));
            }
        }
    }
    // Every word u = w·xⁿ with w in h¹: u = Σ_j reg¹(w x^{n−j}) ⧢ xʲ.
    for (const auto& u : words) {
        const std::size_t n = u.trailing_x();
        const Word w = u.substr(0, u.weight() - n);
        LinComb sum;
        for (std::size_t j = 0; j <= n; ++j) sum += shuffle(reg1(w.concat(Word::x_power(n - j))), LinComb(Word::x_power(j)));
        t.exact(sum == LinComb(u));
    }
    // reg¹(w y xⁿ) = (−1)ⁿ (w ⧢ xⁿ) y for |w| <= W, n <= 3.
    long reg2 = 0;
    for (const auto& w : words) {
        for (unsigned n = 0; n <= 3; ++n) {
            const Word lhs_word = w.append(Letter::Y).concat(Word::x_power(n));
            LinComb rhs = shuffle(w, Word::x_power(n)).append(Letter::Y);
            if (n % 2 == 1) rhs *= Rational(-1);
            t.exact(reg1(lhs_word) == rhs);
            ++reg2;
        }
    }
    detail = std::to_string(words.size()) + " words of weight <= " + std::to_string(W) + ", " +
             std::to_string(reg2) + " reg2 cases";
}

// 2
void rho0_words(int W, Tally& t, std::string& detail) {
    const Representation rho = Representation::rho0();
    const std::vector<Word> words = words_up_to(W, false);
    for (const auto& w : words) t.exact(rho0_closed_form(w) == rep_word(rho, w));
    detail = std::to_string(words.size()) + " nonempty words";
}

// 3
void local_expansions(int K, const EvalParams& ep, Tally& t, std::string& detail) {
    const ParamSet ps{0.1, 0.2, 0.9};
    for (double z : {0.1, 0.3, 0.5}) {
        t.add(verify_hypergeom_mpl(ps, z, K, ep, 1e-8));
        t.add(verify_phi01_mpl(ps, z, K, ep, 1e-8));
    }
    detail = "K=" + std::to_string(K) + ", max abs err " + fmt("%.2g", t.worst);
}

// 4
void shuffle_homomorphism(int W, const EvalParams& ep, Tally& t, std::string& detail) {
    const std::vector<Word> words = words_up_to(W, false);
    const cplx points[] = {cplx(0.3), cplx(0.0, 0.5), cplx(-0.4, 0.3)};
    long pairs = 0;
    for (cplx z : points) {
        std::unordered_map<Word, cplx> memo;
        auto li = [&](const Word& w) {
            auto it = memo.find(w);
            if (it != memo.end()) return it->second;
            const cplx v = mpl_extended(w, z, ep).value;
            memo.emplace(w, v);
            return v;
        };
        pairs = 0;
        for (const auto& u : words) {
            for (const auto& v : words) {
                if (u.weight() + v.weight() > static_cast<std::size_t>(W)) continue;
                ++pairs;
                cplx lhs = 0.0;
                const LinComb uv = shuffle(u, v);
                for (const auto& [w, c] : uv.terms()) lhs += c.get_d() * li(w);
                t.abs_check("shuffle-homomorphism", {{"u", u.str()}, {"v", v.str()}, {"z", format_complex(z)}}, lhs,
                            li(u) * li(v), 1e-9);
            }
        }
    }
    detail = std::to_string(pairs) + " pairs x 3 points, max abs err " + fmt("%.2g", t.worst);
}

// 5
void continuation_checks(int W, Tally& t, std::string& detail) {
    const double pi = std::numbers::pi;
    // Clockwise loop around 1: arg(1−z) drops by 2π, so Li₁ = −log(1−z) gains 2πi.
    const Path loop = Path::parse("0.5 -> 1+0.5i -> 1.5 -> 1-0.5i -> 0.5");
    const Word y("y");
    t.abs_check("monodromy-li1", {{"path", loop.to_string()}}, continue_word(y, loop) - mpl(y, 0.5).value,
                cplx(0.0, 2.0 * pi), 1e-8);

    const Path p1 = Path::parse("0.5 -> 0.5+0.6i -> -0.3+0.4i");
    const Path p2 = Path::parse("-0.3+0.4i -> -0.4-0.5i -> 0.3-0.3i -> 1.6-0.2i");
    const Path h1 = Path::parse("0.5 -> 1i -> 2");
    const Path h2 = Path::parse("0.5 -> 0.4+0.3i -> 1.2+0.6i -> 2.5+0.8i -> 2");
    long composed = 0, homotopic = 0;
    for (const auto& w : words_up_to(W, false)) {
        const std::vector<std::pair<std::string, std::string>> params{{"w", w.str()}};
        if (w.in_h1()) {
            const ComposeReport c = compose_check(w, p1, p2);
            t.abs_check("path-composition", params, c.lhs, c.rhs, 1e-8);
            ++composed;
        }
        t.abs_check("homotopy", params, continue_extended(w, h1), continue_extended(w, h2), 1e-7);
        ++homotopic;
    }
    // Li_{1..1}(1/z) on the canonical path against its closed form.
    for (int n = 1; n <= W; ++n) {
        const double z = 0.4;
        t.abs_check("inverse-ones", {{"n", std::to_string(n)}},
                    continue_word(index_with_ones(1, n - 1).to_word(), Path::canonical_inverse(z)),
                    li_at_inverse_ones(n, z), 1e-8);
    }
    detail = "monodromy, " + std::to_string(composed) + " compositions, " + std::to_string(homotopic) +
             " homotopy pairs, max abs err " + fmt("%.2g", t.worst);
}

// 6
void mplrel01(int W, const EvalParams& ep, Tally& t, std::string& detail) {
    long triples = 0;
    for (double z : {0.3, 0.5, 0.7}) {
        triples = 0;
        for (int m = 0; 2 * m <= W; ++m) {
            for (int k = 0; k + 2 * m <= W; ++k) {
                for (int l = 0; k + l + 2 * m <= W; ++l) {
                    if (k + l + m == 0) continue;
                    ++triples;
                    t.add(verify_thm_mplrel01(k, l, m, z, ep, 1e-5));
                }
            }
        }
    }
    detail = std::to_string(triples) + " (k,l,m) x 3 points, max abs err " + fmt("%.2g", t.worst);
}

// 7
void mzv_relations(int W, const EvalParams& ep, Tally& t, std::string& detail) {
    for (int m = 0; 2 * m <= W; ++m) {
        for (int k = 0; k + 2 * m <= W; ++k) {
            for (int l = 0; k + l + 2 * m <= W; ++l) {
                if (k + l + m > 0) t.add(verify_ohno_zagier(k, l, m, ep, 1e-4));
            }
        }
    }
    for (int k = 1; k <= W; ++k) {
        t.add(verify_euler_inversion(k, 0.5, ep, 1e-4));
        t.add(verify_euler_zeta(k, ep, 1e-4));
    }
    for (int k = 2; k <= W; ++k) {
        for (int n = 1; n < k; ++n) {
            t.add(verify_sum_formula(k, n, 0.5, ep, 1e-4));
            t.add(verify_sum_formula(k, n, 1.0, ep, 1e-4));
        }
    }
    detail = "max abs err " + fmt("%.2g", t.worst);
}

// 8
void zveven(int W, const EvalParams& ep, Tally& t, std::string& detail) {
    for (int k = 1; 2 * k <= W; ++k) t.add(verify_zveven(k, ep));
    detail = "k <= " + std::to_string(W / 2) + ", max abs err " + fmt("%.2g", t.worst);
}

// 9
void zero_infinity(int W, const EvalParams& ep, Tally& t, std::string& detail) {
    for (int m = 2; m <= W; ++m) {
        if (m % 2 == 1) {
            t.add(verify_mzv0infty(Mzv0InftyVariant::N1Odd, m, ep, 1e-4));
            t.add(verify_mzv0infty(Mzv0InftyVariant::N2Odd, m, ep, 1e-4));
        } else {
            t.add(verify_mzv0infty(Mzv0InftyVariant::N1Even, m, ep, 1e-4));
            t.add(verify_mzv0infty(Mzv0InftyVariant::N2Even, m, ep, 1e-4));
        }
    }
    const int M = std::min(W, 4);
    for (int m = 1; m <= M; ++m) t.add(verify_rel0infty(Rel0InftyVariant::Rel1, m, 0, 0.4, ep, 1e-5));
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= M; ++m) t.add(verify_rel0infty(Rel0InftyVariant::Rel2, m, n, 0.4, ep, 1e-5));
    }
    detail = "corollary m <= " + std::to_string(W) + ", rel m <= " + std::to_string(M) + ", max abs err " +
             fmt("%.2g", t.worst);
}

// 10
void connections(const EvalParams& ep, Tally& t, std::string& detail) {
    const ParamSet ps{0.1, 0.2, 0.9};
    t.add(verify_connection_full(ConnectionTag::C01, ps, 0.5, ep, 1e-6));
    t.add(verify_connection_full(ConnectionTag::C0Infinity, ps, cplx(0.5, -0.5), ep, 1e-5,
                                 ConnectionRoute::Principal));
    t.add(verify_connection_full(ConnectionTag::C0Infinity, ps, cplx(0.5, 0.5), ep, 1e-5,
                                 ConnectionRoute::LowerHalfPlane));
    // Principal branches above the real axis: the printed phases do not apply.
    VerificationReport info =
        verify_connection_full(ConnectionTag::C0Infinity, ps, cplx(0.5, 0.5), ep, 1e-5, ConnectionRoute::Principal);
    info.note = "informational, not counted: " + info.note;
    t.reports.push_back(info);
    detail = "max err " + fmt("%.2g", t.worst) + "; principal branches at 0.5+0.5i differ by " +
             fmt("%.3g", info.abs_err);
}

// 11
void product_expansion(int D, Tally& t, std::string& detail) {
    t.exact(product_expand_check(std::vector<mpq_class>(static_cast<std::size_t>(D) + 1, 1), D).holds);
    t.exact(product_expand_check({mpq_class(1)}, D).holds);
    std::mt19937 rng(20240917u);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<mpq_class> A;
        for (int i = 0; i <= 2 * D; ++i) {
            mpq_class a(num(rng), den(rng));
            a.canonicalize();
            A.push_back(a);
        }
        t.exact(product_expand_check(A, D).holds);
    }
    const bool power_sum_fails = !product_expand_check(std::vector<mpq_class>(static_cast<std::size_t>(D) + 1, 1), D,
                                                       NConvention::PowerSum)
                                      .holds;
    // Recurrence for 3 <= n <= 20 and the defining expansion for 1 <= n <= 20.
    for (int n = 1; n <= 20; ++n) {
        // Σ N⁽ⁿ⁾_{i,j}(a+b)ⁱ(ab)ʲ as coefficients of aˣbⁿ⁻ˣ.
        std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1, 0);
        for (int j = 0; 2 * j <= n; ++j) {
            const int i = n - 2 * j;
            if (n >= 3) {
                t.exact(n_coeff(n, i, j) == n_coeff(n - 1, i - 1, j) - n_coeff(n - 2, i, j - 1));
            }
            mpz_class bin = 1;
            for (int s = 0; s <= i; ++s) {
                poly[s + j] += bin * static_cast<long>(n_coeff(n, i, j));
                bin = bin * (i - s) / (s + 1);
            }
        }
        bool ok = poly[0] == 1 && poly[n] == 1;
        for (int x = 1; x < n; ++x) ok = ok && poly[x] == 0;
        t.exact(ok);
    }
    detail = "degree " + std::to_string(D) + ", N(0,0)=1 convention; N(0,0)=2 " +
             (power_sum_fails ? "breaks the expansion" : "also holds");
}

}  // namespace

CriterionResult run_criterion(int number, const SuiteOptions& o) {
    if (number < 1 || number > kCriterionCount) throw std::out_of_range("criterion number must be 1..11");
    const CriterionInfo& info = kCriteria[number - 1];
    CriterionResult r;
    r.number = number;
    r.title = info.title;
    r.time_limit = info.time_limit;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    const int W = cap(info.default_weight, o);
    try {
        switch (number) {
            case 1: shuffle_reg(W, t, r.detail); break;
            case 2: rho0_words(W, t, r.detail); break;
            case 3: local_expansions(info.default_weight, o.eval, t, r.detail); break;
            case 4: shuffle_homomorphism(W, o.eval, t, r.detail); break;
            case 5: continuation_checks(W, t, r.detail); break;
            case 6: mplrel01(W, o.eval, t, r.detail); break;
            case 7: mzv_relations(W, o.eval, t, r.detail); break;
            case 8: zveven(W, o.eval, t, r.detail); break;
            case 9: zero_infinity(W, o.eval, t, r.detail); break;
            case 10: connections(o.eval, t, r.detail); break;
            case 11: product_expansion(W, t, r.detail); break;
        }
    } catch (const std::exception& e) {
        ++t.failures;
        r.detail = std::string("aborted: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checks = t.checks;
    r.failures = t.failures;
    r.reports = std::move(t.reports);
    r.passed = t.failures == 0 && t.checks > 0;
    return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& o) {
    std::vector<int> numbers = o.only;
    if (numbers.empty()) {
        for (int i = 1; i <= kCriterionCount; ++i) numbers.push_back(i);
    }
    std::vector<CriterionResult> results(numbers.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < numbers.size(); i = next++) results[i] = run_criterion(numbers[i], o);
    };
    const int jobs = std::clamp(o.jobs, 1, static_cast<int>(numbers.size()));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

std::string to_text(const CriterionResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "[%s] %2d  %-58s (%ld checks, %.2f s / %.0f s)", r.ok() ? "PASS" : "FAIL",
                  r.number, r.title.c_str(), r.checks, r.seconds, r.time_limit);
    std::string line = head;
    if (r.passed && !r.within_time()) line += "  over time";
    if (r.failures > 0) line += "  " + std::to_string(r.failures) + " failed";
    if (!r.detail.empty()) line += "  " + r.detail;
    return line;
}

std::string suite_to_json(const std::vector<CriterionResult>& rs, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) {
        arr.push_back({{"criterion", r.number},
                       {"title", r.title},
                       {"verdict", r.ok() ? "pass" : "fail"},
                       {"seconds", r.seconds},
                       {"time_limit", r.time_limit},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"detail", r.detail},
                       {"reports", nlohmann::json::parse(reports_to_json(r.reports, -1))}});
    }
    return arr.dump(indent);
}

std::string suite_to_csv(const std::vector<CriterionResult>& rs) {
    std::string out = "criterion," + csv_header() + "\n";
    for (const auto& r : rs) {
        for (const auto& rep : r.reports) out += std::to_string(r.number) + "," + to_csv_row(rep) + "\n";
    }
    return out;
}

}  // namespace mplkz
