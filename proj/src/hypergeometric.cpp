#include "mplkz/hypergeometric.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mplkz/gamma.hpp"

namespace mplkz {

namespace {

bool is_integer(cplx v, double eps = 1e-12) {
    return std::abs(v.imag()) < eps && std::abs(v.real() - std::round(v.real())) < eps;
}

cplx cpow(cplx base, cplx exponent) { return std::exp(exponent * std::log(base)); }

cplx ipow(cplx base, int n) {
    cplx out = 1.0;
    for (int i = 0; i < n; ++i) out *= base;
    return out;
}

}  // namespace

bool ParamSet::convergence_regime() const {
    return std::abs(p()) < 0.5 && std::abs(alpha + p()) < 0.5 && std::abs(beta + p()) < 0.5 &&
           std::abs(q()) < 0.5;
}

bool ParamSet::generic() const {
    return !is_integer(alpha) && !is_integer(beta) && !is_integer(gamma) &&
           !is_integer(gamma - alpha - beta);
}

std::string ParamSet::to_string() const {
    std::ostringstream os;
    os << "alpha=" << alpha << " beta=" << beta << " gamma=" << gamma;
    return os.str();
}

SeriesWithDerivative hypergeom_2f1_d(cplx a, cplx b, cplx c, cplx z, const EvalParams& params) {
    if (near_gamma_pole(c)) throw std::domain_error("hypergeom_2f1: c is a nonpositive integer");
    const double az = std::abs(z);
    if (!(az < 1.0)) throw std::domain_error("hypergeom_2f1: |z| must be < 1");
    const int n_terms = std::max(params.series_terms, terms_for(az, 1e-18));
    SeriesWithDerivative out;
    cplx term = 1.0;
    out.value = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        const double dn = n;
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        out.value += term;
        out.theta += (dn + 1.0) * term;
        if (term == cplx(0.0)) break;
    }
    // Tail after n_terms: terms shrink at least geometrically with ratio rho.
    const double N = n_terms;
    const double big = (std::abs(a) + N) * (std::abs(b) + N);
    const double small = std::max(N - std::abs(c), 1.0) * (N + 1.0);
    const double rho = az * std::max(1.0, big / small) * (N + 2.0) / (N + 1.0);
    if (rho < 1.0) {
        out.error_bound = std::abs(term) * (N + 1.0) * rho / (1.0 - rho);
    } else {
        out.error_bound = std::numeric_limits<double>::infinity();
    }
    return out;
}

ValueWithError hypergeom_2f1(const ParamSet& ps, cplx z, const EvalParams& params) {
    auto f = hypergeom_2f1_d(ps.alpha, ps.beta, ps.gamma, z, params);
    return {f.value, f.error_bound};
}

SeriesWithDerivative local_solution(const ParamSet& ps, Point at, int j, cplx z,
                                    const EvalParams& params) {
    if (j != 0 && j != 1) throw std::invalid_argument("local_solution: j must be 0 or 1");
    const cplx a = ps.alpha;
    const cplx b = ps.beta;
    const cplx c = ps.gamma;
    SeriesWithDerivative out;
    switch (at) {
        case Point::Zero: {
            if (j == 0) return hypergeom_2f1_d(a, b, c, z, params);
            if (z == cplx(0.0)) throw std::domain_error("local_solution: z^{1-gamma} at z = 0");
            auto f = hypergeom_2f1_d(a + 1.0 - c, b + 1.0 - c, 2.0 - c, z, params);
            const cplx pref = cpow(z, 1.0 - c);
            out.value = pref * f.value;
            out.theta = (1.0 - c) * out.value + pref * f.theta;
            out.error_bound = std::abs(pref) * f.error_bound;
            return out;
        }
        case Point::One: {
            const cplx w = 1.0 - z;
            if (j == 0) {
                auto f = hypergeom_2f1_d(a, b, a + b + 1.0 - c, w, params);
                out.value = f.value;
                // z d/dz f(1−z) = −z f'(w) = −(z/w)·w f'(w)
                out.theta = w == cplx(0.0) ? cplx(0.0) : -(z / w) * f.theta;
                out.error_bound = f.error_bound;
                return out;
            }
            if (w == cplx(0.0)) throw std::domain_error("local_solution: (1-z)^e at z = 1");
            const cplx e = c - a - b;
            auto f = hypergeom_2f1_d(c - a, c - b, e + 1.0, w, params);
            const cplx pref = cpow(w, e);
            out.value = pref * f.value;
            out.theta = -(z / w) * (e * out.value + pref * f.theta);
            out.error_bound = std::abs(pref) * f.error_bound;
            return out;
        }
        case Point::Infinity: {
            if (z == cplx(0.0)) throw std::domain_error("local_solution: 1/z at z = 0");
            const cplx u = 1.0 / z;
            const cplx e = j == 0 ? a : b;
            const cplx other = j == 0 ? b : a;
            auto f = hypergeom_2f1_d(e, e + 1.0 - c, e - other + 1.0, u, params);
            const cplx pref = cpow(z, -e);
            out.value = pref * f.value;
            // z d/dz F(1/z) = −u F'(u)
            out.theta = -e * out.value - pref * f.theta;
            out.error_bound = std::abs(pref) * f.error_bound;
            return out;
        }
    }
    throw std::invalid_argument("local_solution: bad point");
}

Mat2 fundamental_matrix(const ParamSet& ps, Point at, cplx z, const EvalParams& params) {
    auto s0 = local_solution(ps, at, 0, z, params);
    auto s1 = local_solution(ps, at, 1, z, params);
    return {s0.value, s1.value, s0.theta / ps.beta, s1.theta / ps.beta};
}

Mat2 hypergeometric_system(const ParamSet& ps, cplx z) {
    const cplx p = ps.p();
    const cplx q = ps.q();
    const Mat2 X(0.0, ps.beta, 0.0, p);
    const Mat2 Y(0.0, 0.0, ps.alpha, q);
    return (1.0 / z) * X + (1.0 / (1.0 - z)) * Y;
}

double expansion_error_bound(double abs_p, double abs_q, double abs_r, double abs_z,
                             int max_weight, double word_tail) {
    const double inf = std::numeric_limits<double>::infinity();
    const double s1 = abs_p + abs_q;
    const double s2 = abs_p * abs_q - abs_r;
    // Spectral radius of the recurrence t² − s1 t + s2.
    const double disc = s1 * s1 - 4.0 * s2;
    double radius;
    if (disc >= 0.0) {
        radius = std::max(std::abs(0.5 * (s1 + std::sqrt(disc))), std::abs(0.5 * (s1 - std::sqrt(disc))));
    } else {
        radius = std::sqrt(s2);
    }
    if (!(radius < 1.0)) return inf;
    const int K = std::max(max_weight, 2);
    // a_1 = 0, a_2 = 1.
    double prev = 0.0;
    double cur = 1.0;
    double partial = max_weight >= 2 ? 1.0 : 0.0;
    for (int k = 3; k <= K; ++k) {
        const double next = s1 * cur - s2 * prev;
        prev = cur;
        cur = next;
        if (k <= max_weight) partial += cur;
    }
    double tail;
    if (max_weight < 2) {
        // Whole series: Σ_{k>=2} a_k = 1/(1 − s1 + s2).
        tail = 1.0 / (1.0 - s1 + s2);
    } else {
        tail = (s1 * cur - s2 * prev - s2 * cur) / (1.0 - s1 + s2);
    }
    const double word_bound = abs_z / (1.0 - abs_z);
    return word_bound * std::abs(tail) + word_tail * partial;
}

namespace {

void check_regime(const ParamSet& ps, bool allow) {
    if (!allow && !ps.convergence_regime()) {
        throw std::domain_error("parameters outside the convergence regime: " + ps.to_string());
    }
}

// Σ_{k<=K} Σ_{n,s} G₀(k,n,s;z) a^{k−n−s} b^{n−s} c^{s−1}.
cplx weighted_g0_sum(const GTable& table, cplx a, cplx b, cplx c) {
    const int K = table.max_weight();
    cplx total = 0.0;
    for (int k = 2; k <= K; ++k) {
        for (int n = 1; n < k; ++n) {
            for (int s = 1; s <= n && n + s <= k; ++s) {
                const cplx g = table.at(0, k, n, s);
                if (g == cplx(0.0)) continue;
                total += g * ipow(a, k - n - s) * ipow(b, n - s) * ipow(c, s - 1);
            }
        }
    }
    return total;
}

}  // namespace

ValueWithError hypergeom_mpl_series(const ParamSet& ps, cplx z, int max_weight, const EvalParams& params,
                                bool allow_outside_regime) {
    check_regime(ps, allow_outside_regime);
    if (!(std::abs(z) < 1.0)) throw std::domain_error("hypergeom_mpl_series: |z| must be < 1");
    const cplx pref = ps.alpha * ps.beta;
    if (z == cplx(0.0) || max_weight < 2) return {1.0, 0.0};
    GTable table(z, max_weight, params);
    const cplx sum = weighted_g0_sum(table, ps.p(), ps.q(), ps.r());
    const double err = std::abs(pref) * expansion_error_bound(std::abs(ps.p()), std::abs(ps.q()),
                                                              std::abs(ps.r()), std::abs(z),
                                                              max_weight, table.word_tail());
    return {1.0 + pref * sum, err};
}

ValueWithError phi01_mpl_series(const ParamSet& ps, cplx z, int max_weight,
                                      const EvalParams& params, bool allow_outside_regime) {
    check_regime(ps, allow_outside_regime);
    if (z == cplx(0.0)) throw std::domain_error("phi01_mpl_series: z^{1-gamma} at z = 0");
    if (!(std::abs(z) < 1.0)) throw std::domain_error("phi01_mpl_series: |z| must be < 1");
    const cplx lead = cpow(z, ps.p());
    const cplx pref = ps.r();
    if (max_weight < 2) return {lead, 0.0};
    GTable table(z, max_weight, params);
    const cplx ab = ps.alpha * ps.beta;
    const cplx sum = weighted_g0_sum(table, -ps.p(), ps.q(), ab);
    const double err = std::abs(lead) * std::abs(pref) *
                       expansion_error_bound(std::abs(ps.p()), std::abs(ps.q()), std::abs(ab),
                                             std::abs(z), max_weight, table.word_tail());
    return {lead * (1.0 + pref * sum), err};
}

}  // namespace mplkz
