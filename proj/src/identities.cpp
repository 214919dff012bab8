#include "mplkz/identities.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "mplkz/continuation.hpp"
#include "mplkz/gamma.hpp"
#include "mplkz/parse.hpp"
#include "mplkz/word_algebra.hpp"

namespace mplkz {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

constexpr double kPi = std::numbers::pi;

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string num(cplx z) { return format_complex(z); }

cplx ipow(cplx base, int e) {
    cplx r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Runs a check and turns any exception into an error report.
template <class F>
VerificationReport guarded(const std::string& id, const Params& params, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return error_report(id, params, e.what());
    }
}

// Raises the series truncation so every point in `points` meets params.tolerance.
EvalParams sized(EvalParams params, std::initializer_list<cplx> points) {
    for (cplx p : points) {
        if (std::abs(p) < 1.0) params.series_terms = std::max(params.series_terms, terms_for(std::abs(p), params.tolerance));
    }
    return params;
}

void require_two_disks(cplx z, const char* what) {
    if (!(std::abs(z) < 1.0 && std::abs(1.0 - z) < 1.0)) {
        throw std::domain_error(std::string(what) + ": need |z| < 1 and |1 - z| < 1");
    }
}

// G_i with every out-of-range argument mapped to zero.
cplx g_at(const GTable& t, int i, int k, int n, int s) {
    if (k <= 0 || n <= 0 || s <= 0) return 0.0;
    return t.at(i, k, n, s);
}

cplx gbar_at(const GTable& t, int i, int k, int n, int s) { return g_at(t, i, k, n, s) - g_at(t, i, k, n, s + 1); }

// Σ_s G_i(k,n,s).
cplx g_sum(const GTable& t, int i, int k, int n) {
    cplx sum = 0.0;
    for (int s = 1; s <= k; ++s) sum += g_at(t, i, k, n, s);
    return sum;
}

// G₀(k,n,s;1) as a sum of oracle MZVs.
ValueWithError g0_at_one(ZetaOracle& oracle, int k, int n, int s) {
    ValueWithError out;
    if (k <= 0 || n <= 0 || s <= 0) return out;
    const LinComb words = enumerate_g(0, k, n, s);
    for (const auto& [w, c] : words.terms()) {
        ValueWithError v = oracle.mzv(MultiIndex::from_word(w));
        out.value += c.get_d() * v.value;
        out.error_bound += std::abs(c.get_d()) * v.error_bound;
    }
    return out;
}

struct SchurPair {
    std::vector<double> plus;
    std::vector<double> minus;
};

SchurPair schur_pair(int order, const EvalParams& params) {
    const ZetaSequence seq = ZetaSequence::zeta(std::max(order, 1), params);
    return {schur_all(order, seq), schur_all(order, seq.negated())};
}

// Replace the pass/fail data of a report by a different error measure.
void set_error(VerificationReport& r, double abs_err, double scale) {
    r.abs_err = abs_err;
    r.rel_err = scale > 0.0 ? abs_err / scale : 0.0;
    if (!std::isfinite(abs_err)) {
        r.verdict = Verdict::Error;
    } else {
        r.verdict = (r.abs_err <= r.tol || r.rel_err <= r.tol) ? Verdict::Pass : Verdict::Fail;
    }
}

std::string tag_name(ConnectionTag tag) { return tag == ConnectionTag::C01 ? "connection-01" : "connection-0infty"; }

bool near_integer(cplx z, double eps = 1e-12) {
    return std::abs(z.imag()) < eps && std::abs(z.real() - std::round(z.real())) < eps;
}

}  // namespace

// ---------------------------------------------------------------- zeta values

struct ZetaOracle::Impl {
    std::mutex mutex;
    std::map<std::vector<int>, ValueWithError> cache;
};

ZetaOracle::ZetaOracle(EvalParams params) : params_(params), impl_(std::make_shared<Impl>()) {}

ValueWithError ZetaOracle::mzv(const MultiIndex& index) {
    {
        std::lock_guard lock(impl_->mutex);
        auto it = impl_->cache.find(index.parts());
        if (it != impl_->cache.end()) return it->second;
    }
    // Computed outside the lock; a concurrent duplicate just wastes time.
    ValueWithError v = mplkz::mzv(index, params_);
    std::lock_guard lock(impl_->mutex);
    impl_->cache.emplace(index.parts(), v);
    return v;
}

double ZetaOracle::zeta(int n) {
    if (n < 2) throw std::domain_error("zeta: n must be >= 2");
    return mzv(MultiIndex({n})).value.real();
}

ZetaOracle& zeta_oracle(const EvalParams& params) {
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<ZetaOracle>> oracles;
    std::lock_guard lock(mutex);
    auto& slot = oracles[params.mzv_terms];
    if (!slot) slot = std::make_unique<ZetaOracle>(params);
    return *slot;
}

ZetaSequence ZetaSequence::zeta(int order, const EvalParams& params) {
    if (order < 1) throw std::invalid_argument("ZetaSequence: order must be >= 1");
    ZetaOracle& oracle = zeta_oracle(params);
    ZetaSequence seq;
    seq.a.assign(static_cast<std::size_t>(order) + 1, 0.0);
    for (int n = 2; n <= order; ++n) seq.a[n] = oracle.zeta(n) / n;
    return seq;
}

ZetaSequence ZetaSequence::negated() const {
    ZetaSequence out = *this;
    for (double& x : out.a) x = -x;
    return out;
}

std::vector<double> schur_all(int n, const ZetaSequence& seq) {
    if (n < 0) throw std::invalid_argument("schur_all: n must be >= 0");
    std::vector<double> P(static_cast<std::size_t>(n) + 1, 0.0);
    P[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        double s = 0.0;
        for (int j = 1; j <= m; ++j) {
            const double aj = j <= seq.order() ? seq.a[j] : 0.0;
            s += j * aj * P[m - j];
        }
        P[m] = s / m;
    }
    return P;
}

double schur_P(int n, const ZetaSequence& seq) {
    if (n > seq.order() && n > 0) throw std::invalid_argument("schur_P: sequence truncated below n");
    return schur_all(n, seq)[n];
}

// ---------------------------------------------------------------- N integers

namespace {

// row[j] = N⁽ⁿ⁾_{n−2j, j}
std::vector<long long> n_row(int n, NConvention convention) {
    if (n < 0) return {};
    if (n > 60) throw std::out_of_range("n_coeff: n beyond 60 overflows");
    std::vector<long long> prev2{convention == NConvention::Paper ? 1LL : 2LL};
    if (n == 0) return prev2;
    std::vector<long long> prev1{1};
    if (n == 1) return prev1;
    for (int k = 2; k <= n; ++k) {
        // s_k = (a+b)s_{k−1} − (ab)s_{k−2}: the first keeps j, the second raises it.
        std::vector<long long> cur(static_cast<std::size_t>(k / 2) + 1, 0);
        for (std::size_t j = 0; j < prev1.size(); ++j) cur[j] += prev1[j];
        for (std::size_t j = 0; j < prev2.size(); ++j) cur[j + 1] -= prev2[j];
        // a² + b² = (a+b)² − 2ab regardless of the n = 0 convention.
        if (k == 2) cur = {1, -2};
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

}  // namespace

long long n_coeff(int n, int i, int j, NConvention convention) {
    if (i < 0 || j < 0 || i + 2 * j != n) return 0;
    return n_row(n, convention)[j];
}

long long n_coeff(int i, int j, NConvention convention) {
    if (i < 0 || j < 0) return 0;
    return n_coeff(i + 2 * j, i, j, convention);
}

ProductExpandResult product_expand_check(const std::vector<mpq_class>& A, int degree, NConvention convention) {
    if (degree < 0) throw std::invalid_argument("product_expand_check: degree must be >= 0");
    const auto D = static_cast<std::size_t>(degree);
    auto coef = [&A](int i) { return i >= 0 && static_cast<std::size_t>(i) < A.size() ? A[i] : mpq_class(0); };
    // lhs[x][y] and rhs[x][y] for x + y <= degree
    std::vector<std::vector<mpq_class>> lhs(D + 1, std::vector<mpq_class>(D + 1, 0));
    auto rhs = lhs;
    for (int x = 0; x <= degree; ++x) {
        for (int y = 0; x + y <= degree; ++y) lhs[x][y] = coef(x) * coef(y);
    }
    for (int k = 0; k <= degree; ++k) {
        for (int l = 0; k + 2 * l <= degree; ++l) {
            mpq_class c = 0;
            for (int i = 0; i <= l; ++i) c += coef(i) * coef(2 * l + k - i) * static_cast<long>(n_coeff(k, l - i, convention));
            if (c == 0) continue;
            // (a+b)^k (ab)^l = Σ_t C(k,t) a^{t+l} b^{k−t+l}
            mpz_class bin = 1;
            for (int t = 0; t <= k; ++t) {
                rhs[t + l][k - t + l] += c * bin;
                bin = bin * (k - t) / (t + 1);
            }
        }
    }
    ProductExpandResult out;
    out.degree = degree;
    out.convention = convention;
    for (int x = 0; x <= degree; ++x) {
        for (int y = 0; x + y <= degree; ++y) {
            if (lhs[x][y] != rhs[x][y]) out.mismatches.emplace_back(x, y);
        }
    }
    out.holds = out.mismatches.empty();
    return out;
}

// ---------------------------------------------------------------- Γ-ratio

double gamma_ratio_coeff(int k, int l, int m, const std::vector<double>& P, const std::vector<double>& Pm) {
    if (k < 0 || l < 0 || m < 0) throw std::invalid_argument("gamma_ratio_coeff: negative index");
    const int need = k + l + 2 * m;
    if (static_cast<int>(P.size()) <= need || static_cast<int>(Pm.size()) <= need) {
        throw std::invalid_argument("gamma_ratio_coeff: Schur values truncated below k+l+2m");
    }
    double sum = 0.0;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j <= l; ++j) {
            for (int mu = 0; mu <= m; ++mu) {
                const long long n = n_coeff(i + j, m - mu);
                if (n == 0) continue;
                sum += binom(i + j, i) * P[k - i] * P[l - j] * Pm[mu] * Pm[i + j + 2 * m - mu] * static_cast<double>(n);
            }
        }
    }
    return sum;
}

double gamma_ratio_coeff(int k, int l, int m, int zeta_order, const EvalParams& params) {
    if (k + l + 2 * m > zeta_order) throw std::invalid_argument("gamma_ratio_coeff: zeta_order below k+l+2m");
    const SchurPair sp = schur_pair(zeta_order, params);
    return gamma_ratio_coeff(k, l, m, sp.plus, sp.minus);
}

cplx gamma_ratio_direct(const ParamSet& ps) {
    const cplx a = ps.alpha, b = ps.beta, c = ps.gamma;
    return gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
}

cplx gamma_ratio_expansion(const ParamSet& ps, int order, const EvalParams& params) {
    if (order < 0) throw std::invalid_argument("gamma_ratio_expansion: order must be >= 0");
    const SchurPair sp = schur_pair(order, params);
    const cplx p = ps.p(), q = ps.q(), r = ps.r();
    cplx sum = 0.0;
    for (int m = 0; 2 * m <= order; ++m) {
        for (int k = 0; k + 2 * m <= order; ++k) {
            for (int l = 0; k + l + 2 * m <= order; ++l) {
                sum += gamma_ratio_coeff(k, l, m, sp.plus, sp.minus) * ipow(p, k) * ipow(q, l) * ipow(r, m);
            }
        }
    }
    return sum;
}

// ---------------------------------------------------------------- Bernoulli

mpq_class bernoulli(int m, BernoulliConvention convention) {
    if (m < 0) throw std::invalid_argument("bernoulli: m must be >= 0");
    // B⁻ from Σ_{j<=n} C(n+1, j) B_j = 0.
    std::vector<mpq_class> B(static_cast<std::size_t>(m) + 1);
    B[0] = 1;
    for (int n = 1; n <= m; ++n) {
        mpq_class s = 0;
        mpz_class bin = 1;  // C(n+1, j)
        for (int j = 0; j < n; ++j) {
            s += bin * B[j];
            bin = bin * (n + 1 - j) / (j + 1);
        }
        B[n] = -s / (n + 1);
        B[n].canonicalize();
    }
    mpq_class out = B[m];
    if (m == 1 && convention == BernoulliConvention::Plus) out = -out;
    return out;
}

// ---------------------------------------------------------------- verification

VerificationReport verify_thm_mplrel01(int k, int l, int m, cplx z, const EvalParams& params, double tol) {
    const Params ps{{"k", std::to_string(k)}, {"l", std::to_string(l)}, {"m", std::to_string(m)}, {"z", num(z)}};
    const std::string id = "thm-mplrel01";
    return guarded(id, ps, [&] {
        if (k < 0 || l < 0 || m < 0 || k + l + m == 0) {
            throw std::invalid_argument("k, l, m must be >= 0 and not all zero");
        }
        require_two_disks(z, id.c_str());
        const int K = k + l + 2 * m + 1;
        const EvalParams ep = sized(params, {z, 1.0 - z});
        const GTable gz(z, K, ep);
        const GTable gw(1.0 - z, K, ep);
        const int W = k + l + 2 * m;
        cplx lhs = gbar_at(gz, 0, W, l + m, m) + gbar_at(gw, 0, W, k + m, m);
        for (int k1 = 0; k1 <= k; ++k1) {
            for (int l1 = 0; l1 <= l; ++l1) {
                for (int m1 = 0; m1 <= m; ++m1) {
                    const int k2 = k - k1, l2 = l - l1, m2 = m - m1;
                    lhs += gbar_at(gz, 0, k1 + l1 + 2 * m1, l1 + m1, m1) *
                           gbar_at(gw, 0, k2 + l2 + 2 * m2, k2 + m2, m2);
                    lhs += gbar_at(gz, 1, k1 + l1 + 2 * m1 - 1, l1 + m1, m1) *
                           g_at(gw, 1, k2 + l2 + 2 * m2 + 1, k2 + m2 + 1, m2 + 1);
                }
            }
        }
        const SchurPair sp = schur_pair(W, params);
        const double rhs = gamma_ratio_coeff(k, l, m, sp.plus, sp.minus);
        return make_report(id, ps, lhs, rhs, tol);
    });
}

VerificationReport verify_ohno_zagier(int k, int l, int m, const EvalParams& params, double tol) {
    const Params ps{{"k", std::to_string(k)}, {"l", std::to_string(l)}, {"m", std::to_string(m)}};
    const std::string id = "ohno-zagier";
    return guarded(id, ps, [&] {
        if (k < 0 || l < 0 || m < 0 || k + l + m == 0) {
            throw std::invalid_argument("k, l, m must be >= 0 and not all zero");
        }
        ZetaOracle& oracle = zeta_oracle(params);
        const int W = k + l + 2 * m;
        auto gbar1 = [&](int n) {
            ValueWithError a = g0_at_one(oracle, W, n, m);
            ValueWithError b = g0_at_one(oracle, W, n, m + 1);
            return a.value - b.value;
        };
        const cplx left = gbar1(l + m);
        const cplx right = gbar1(k + m);
        const SchurPair sp = schur_pair(W, params);
        const double rhs = gamma_ratio_coeff(k, l, m, sp.plus, sp.minus);
        VerificationReport r = make_report(id, ps, left, rhs, tol, "symmetric side " + num(right));
        set_error(r, std::max(std::abs(left - rhs), std::abs(right - rhs)),
                  std::max({std::abs(left), std::abs(right), std::abs(rhs)}));
        return r;
    });
}

VerificationReport verify_sum_formula(int k, int n, cplx z, const EvalParams& params, double tol) {
    const Params ps{{"k", std::to_string(k)}, {"n", std::to_string(n)}, {"z", num(z)}};
    const std::string id = "sum-formula";
    return guarded(id, ps, [&] {
        if (!(k > n && n > 0)) throw std::invalid_argument("need k > n > 0");
        ZetaOracle& oracle = zeta_oracle(params);
        const double rhs = oracle.zeta(k);
        cplx lhs = 0.0;
        if (z == cplx(1.0)) {
            for (int s = 1; s <= n; ++s) lhs += g0_at_one(oracle, k, n, s).value;
            return make_report(id, ps, lhs, rhs, tol);
        }
        require_two_disks(z, id.c_str());
        const EvalParams ep = sized(params, {z, 1.0 - z});
        const GTable gz(z, k, ep);
        const GTable gw(1.0 - z, k, ep);
        lhs = g_sum(gz, 0, k, n) + g_sum(gw, 0, k, k - n);
        for (int k1 = 0; k1 <= k; ++k1) {
            for (int n1 = 0; n1 <= n; ++n1) {
                const int k2 = k - k1, n2 = n - n1;
                lhs += g_sum(gz, 1, k1, n1) * g_sum(gw, 1, k2, k2 - n2);
            }
        }
        return make_report(id, ps, lhs, rhs, tol);
    });
}

VerificationReport verify_euler_inversion(int k, cplx z, const EvalParams& params, double tol) {
    const Params ps{{"k", std::to_string(k)}, {"z", num(z)}};
    const std::string id = "euler-inversion";
    return guarded(id, ps, [&] {
        if (k < 1) throw std::invalid_argument("need k >= 1");
        require_two_disks(z, id.c_str());
        const cplx w = 1.0 - z;
        const EvalParams ep = sized(params, {z, w});
        cplx lhs = mpl(MultiIndex({k + 1}), z, ep).value + mpl(index_with_ones(2, k - 1), w, ep).value;
        for (int i = 1; i <= k; ++i) {
            lhs += mpl(MultiIndex({i}), z, ep).value * mpl(index_with_ones(1, k - i), w, ep).value;
        }
        return make_report(id, ps, lhs, zeta_oracle(params).zeta(k + 1), tol);
    });
}

VerificationReport verify_euler_zeta(int k, const EvalParams& params, double tol) {
    const Params ps{{"k", std::to_string(k)}};
    const std::string id = "euler-zeta";
    return guarded(id, ps, [&] {
        if (k < 1) throw std::invalid_argument("need k >= 1");
        ZetaOracle& oracle = zeta_oracle(params);
        const cplx lhs = oracle.mzv(MultiIndex({k + 1, 1})).value;
        double rhs = (k + 1) / 2.0 * oracle.zeta(k + 2);
        for (int i = 1; i <= k - 1; ++i) rhs -= 0.5 * oracle.zeta(i + 1) * oracle.zeta(k - i + 1);
        return make_report(id, ps, lhs, rhs, tol);
    });
}

VerificationReport verify_zveven(int k, const EvalParams& params) {
    const Params ps{{"k", std::to_string(k)}};
    const std::string id = "zveven";
    return guarded(id, ps, [&] {
        if (k < 1) throw std::invalid_argument("need k >= 1");
        const ValueWithError v = zeta_oracle(params).mzv(MultiIndex({2 * k}));
        // (2πi)^{2k} = (−1)^k (2π)^{2k}
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        const double rhs = -bernoulli(2 * k).get_d() * sign * std::pow(2.0 * kPi, 2 * k) / (2.0 * factorial(2 * k));
        return make_report(id, ps, v.value, rhs, v.error_bound, "tolerance = oracle error bound");
    });
}

VerificationReport verify_rel0infty(Rel0InftyVariant variant, int m, int n, double z, const EvalParams& params,
                                    double tol) {
    Params ps{{"m", std::to_string(m)}};
    if (variant == Rel0InftyVariant::Rel2) ps.emplace_back("n", std::to_string(n));
    ps.emplace_back("z", num(z));
    const std::string id = to_string(variant);
    return guarded(id, ps, [&] {
        if (!(z > 0.0 && z < 1.0)) throw std::domain_error("z must lie in (0, 1)");
        if (m < 1) throw std::invalid_argument("need m >= 1");
        if (variant == Rel0InftyVariant::Rel2 && n < 1) throw std::invalid_argument("need n >= 1");
        const EvalParams ep = sized(params, {z});
        const Path path = Path::canonical_inverse(z);
        const double L = -std::log(z);  // log(1/z)
        std::vector<double> lp(static_cast<std::size_t>(m) + 1, 1.0);  // Lⁱ/i!
        for (int i = 1; i <= m; ++i) lp[i] = lp[i - 1] * L / i;
        const cplx two_pi_i(0.0, 2.0 * kPi);

        if (variant == Rel0InftyVariant::Rel1) {
            std::vector<Word> words;
            for (int j = 1; j <= m; ++j) words.push_back(MultiIndex({j}).to_word());
            const std::vector<cplx> inv = continue_words(words, path);
            cplx lhs = lp[m];
            for (int i = 0; i < m; ++i) {
                const int j = m - i;
                const double sign = j % 2 == 0 ? 1.0 : -1.0;
                lhs -= (mpl(MultiIndex({j}), z, ep).value + sign * inv[j - 1]) * lp[i];
            }
            const double sign_m = m % 2 == 0 ? 1.0 : -1.0;
            const cplx rhs = sign_m * bernoulli(m, BernoulliConvention::Minus).get_d() * ipow(two_pi_i, m) /
                             factorial(m);
            return make_report(id, ps, lhs, rhs, tol);
        }

        // Words needed at 1/z: (m−i, 1ⁿ), (m−i+1, 1ⁿ⁻¹) for i < m and 1^{n−j} for j < n.
        std::vector<Word> words;
        for (int i = 0; i < m; ++i) {
            words.push_back(index_with_ones(m - i, n).to_word());
            words.push_back(index_with_ones(m - i + 1, n - 1).to_word());
        }
        for (int j = 0; j < n; ++j) words.push_back(index_with_ones(1, n - j - 1).to_word());
        const std::vector<cplx> inv = continue_words(words, path);
        auto ones_at_inverse = [&](int count) -> cplx {
            return count == 0 ? cplx(1.0) : inv[2 * m + (n - count)];
        };
        const GTable gz(z, m + n, ep);
        auto pm1 = [](int e) { return e % 2 == 0 ? 1.0 : -1.0; };

        cplx lhs = 0.0;
        for (int i = 0; i < m; ++i) {
            lhs += pm1(n + i + 1) * inv[2 * i] * lp[i];
            lhs += pm1(n + i + 1) * inv[2 * i + 1] * lp[i];
            for (int j = 0; j <= n; ++j) {
                cplx inner = 0.0;
                for (int kk = 0; kk <= j; ++kk) {
                    inner += binom(m - i - 1 + j - kk, m - i - 1) * g_sum(gz, 1, m - i + j, kk + 1);
                }
                lhs += pm1(m + n - j - 1) * ones_at_inverse(n - j) * inner * lp[i];
            }
        }

        const SchurPair sp = schur_pair(m + n, params);
        const cplx minus_pi_i(0.0, -kPi);
        cplx rhs = 0.0;
        for (int m1 = 0; m1 <= m; ++m1) {
            for (int m2 = 0; m1 + m2 <= m; ++m2) {
                const int m3 = m - m1 - m2;
                for (int n1 = 0; n1 <= n; ++n1) {
                    const int n2 = n - n1;
                    rhs += binom(m1 + n1, m1) * pm1(m1) * sp.plus[m1 + n1] * sp.plus[m2] *
                           ipow(minus_pi_i, m3) / factorial(m3) * sp.minus[n2];
                }
            }
        }
        return make_report(id, ps, lhs, rhs, tol);
    });
}

VerificationReport verify_mzv0infty(Mzv0InftyVariant variant, int m, const EvalParams& params, double tol) {
    const Params ps{{"m", std::to_string(m)}};
    const std::string id = to_string(variant);
    return guarded(id, ps, [&] {
        const bool odd = variant == Mzv0InftyVariant::N1Odd || variant == Mzv0InftyVariant::N2Odd ||
                         variant == Mzv0InftyVariant::N2OddPrinted;
        if (m < 2) throw std::domain_error("need m >= 2");
        if ((m % 2 == 1) != odd) throw std::domain_error("parity of m does not match the variant");
        ZetaOracle& o = zeta_oracle(params);
        auto Z = [&o](int s) { return o.zeta(s); };
        auto Zi = [&o](std::vector<int> idx) { return o.mzv(MultiIndex(std::move(idx))).value.real(); };
        // Sums over i + 2k = m and i + j + 2k = m with all indices >= 1; empty sums are 0.
        double S1 = 0.0, S2 = 0.0, S3 = 0.0, S3w = 0.0;
        for (int kk = 1; 2 * kk < m; ++kk) {
            const int i = m - 2 * kk;
            S1 += Z(i + 1) * Z(2 * kk);
            S2 += (i + 1) * Z(i + 2) * Z(2 * kk);
            for (int a = 1; a < i; ++a) {
                const int b = i - a;
                S3 += Z(a + 1) * Z(b + 1) * Z(2 * kk);
                S3w += (a + 1) * Z(a + 1) * Z(b + 1) * Z(2 * kk);
            }
        }
        const double pi2 = kPi * kPi;
        const double mid = (m + 2) * (m + 1) / 2.0 * Z(m + 2);
        double lhs = 0.0, rhs = 0.0;
        switch (variant) {
            case Mzv0InftyVariant::N1Odd:
                lhs = (m + 2) * Z(m + 1);
                rhs = 2.0 * S1;
                break;
            case Mzv0InftyVariant::N1Even:
                lhs = 2.0 * Zi({m, 1});
                rhs = m * Z(m + 1) - 2.0 * S1;
                break;
            case Mzv0InftyVariant::N2Odd:
                lhs = (m + 2) * Zi({m + 1, 1});
                rhs = -pi2 / 2.0 * Z(m) + mid - S2 - S3;
                break;
            case Mzv0InftyVariant::N2Even:
                lhs = 2.0 * Zi({m, 1, 1});
                rhs = m * Zi({m + 1, 1}) + pi2 / 2.0 * Z(m) - mid + S2 + S3;
                break;
            case Mzv0InftyVariant::N2OddPrinted:
                lhs = (m + 2) * Z(m + 1);
                rhs = -pi2 / 2.0 * Z(m) + mid - S2 - S3w;
                break;
            case Mzv0InftyVariant::N2EvenPrinted:
                lhs = 2.0 * Zi({m, 1, 1});
                rhs = -m * Zi({m + 1, 1}) + pi2 / 2.0 * Z(m) - mid + S2 + S3w;
                break;
        }
        return make_report(id, ps, lhs, rhs, tol);
    });
}

VerificationReport verify_connection_full(ConnectionTag tag, const ParamSet& ps, cplx z, const EvalParams& params,
                                          double tol, ConnectionRoute route) {
    Params pp{{"alpha", num(ps.alpha)}, {"beta", num(ps.beta)}, {"gamma", num(ps.gamma)}, {"z", num(z)}};
    if (tag == ConnectionTag::C0Infinity) pp.emplace_back("route", to_string(route));
    const std::string id = tag_name(tag);
    if (!ps.generic()) return error_report(id, pp, "non-generic parameters: alpha, beta, gamma or gamma-alpha-beta is an integer");
    if (tag == ConnectionTag::C0Infinity && near_integer(ps.alpha - ps.beta)) {
        return error_report(id, pp, "non-generic parameters: alpha - beta is an integer");
    }
    return guarded(id, pp, [&]() -> VerificationReport {
        if (z == cplx(0.0) || z == cplx(1.0)) throw std::domain_error("z must avoid 0 and 1");
        Mat2 target;
        Mat2 phi0;
        const auto coeff = [&ps](cplx t) { return hypergeometric_system(ps, t); };
        if (tag == ConnectionTag::C01) {
            require_two_disks(z, id.c_str());
            phi0 = fundamental_matrix(ps, Point::Zero, z, params);
            target = fundamental_matrix(ps, Point::One, z, params);
        } else if (std::abs(z) < 1.0) {
            phi0 = fundamental_matrix(ps, Point::Zero, z, params);
            const Path path = route == ConnectionRoute::Principal
                                  ? Path({2.0 * z / std::abs(z), z})
                                  : Path({2.0 * std::polar(1.0, -kPi / 4), cplx(0.5, -0.5), z});
            target = continue_linear_system(path, fundamental_matrix(ps, Point::Infinity, path.start(), params), coeff);
        } else {
            target = fundamental_matrix(ps, Point::Infinity, z, params);
            const Path path({0.5 * z / std::abs(z), z});
            phi0 = continue_linear_system(path, fundamental_matrix(ps, Point::Zero, path.start(), params), coeff);
        }
        const Mat2 lhs = target.inverse() * phi0;
        const Mat2 C = connection_matrix(tag, ps);
        // Report the worst entry; abs_err is then the max-norm distance.
        int wi = 0, wj = 0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (std::abs(lhs(i, j) - C(i, j)) > std::abs(lhs(wi, wj) - C(wi, wj))) wi = i, wj = j;
            }
        }
        VerificationReport r = make_report(id, pp, lhs(wi, wj), C(wi, wj), tol,
                                           "entry (" + std::to_string(wi + 1) + "," + std::to_string(wj + 1) + ")");
        set_error(r, max_diff(lhs, C), C.max_abs());
        return r;
    });
}

VerificationReport verify_hypergeom_mpl(const ParamSet& ps, cplx z, int max_weight, const EvalParams& params,
                                        double tol) {
    const Params pp{{"alpha", num(ps.alpha)}, {"beta", num(ps.beta)}, {"gamma", num(ps.gamma)}, {"z", num(z)},
                    {"K", std::to_string(max_weight)}};
    const std::string id = "theorem31";
    return guarded(id, pp, [&] {
        const ValueWithError s = hypergeom_mpl_series(ps, z, max_weight, params);
        const ValueWithError f = hypergeom_2f1(ps, z, params);
        char note[64];
        std::snprintf(note, sizeof note, "truncation bound %.3g", s.error_bound);
        return make_report(id, pp, s.value, f.value, tol, note);
    });
}

VerificationReport verify_phi01_mpl(const ParamSet& ps, cplx z, int max_weight, const EvalParams& params,
                                    double tol) {
    const Params pp{{"alpha", num(ps.alpha)}, {"beta", num(ps.beta)}, {"gamma", num(ps.gamma)}, {"z", num(z)},
                    {"K", std::to_string(max_weight)}};
    const std::string id = "corollary-phi01";
    return guarded(id, pp, [&] {
        const ValueWithError s = phi01_mpl_series(ps, z, max_weight, params);
        const SeriesWithDerivative f = local_solution(ps, Point::Zero, 1, z, params);
        char note[64];
        std::snprintf(note, sizeof note, "truncation bound %.3g", s.error_bound);
        return make_report(id, pp, s.value, f.value, tol, note);
    });
}

std::string to_string(Rel0InftyVariant v) { return v == Rel0InftyVariant::Rel1 ? "rel0infty-1" : "rel0infty-2"; }

std::string to_string(Mzv0InftyVariant v) {
    switch (v) {
        case Mzv0InftyVariant::N1Odd: return "mzv0infty-n1odd";
        case Mzv0InftyVariant::N1Even: return "mzv0infty-n1even";
        case Mzv0InftyVariant::N2Odd: return "mzv0infty-n2odd";
        case Mzv0InftyVariant::N2Even: return "mzv0infty-n2even";
        case Mzv0InftyVariant::N2OddPrinted: return "mzv0infty-n2odd-printed";
        case Mzv0InftyVariant::N2EvenPrinted: return "mzv0infty-n2even-printed";
    }
    return "mzv0infty";
}

std::string to_string(ConnectionRoute r) { return r == ConnectionRoute::Principal ? "principal" : "lower"; }

}  // namespace mplkz
