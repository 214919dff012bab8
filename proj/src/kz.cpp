#include "mplkz/kz.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mplkz/gamma.hpp"

namespace mplkz {

namespace {

Laurent a() { return Laurent::var(Var::Alpha); }
Laurent b() { return Laurent::var(Var::Beta); }
Laurent p() { return Laurent::var(Var::P); }
Laurent q() { return Laurent::var(Var::Q); }

PolyMatrix make(Laurent m11, Laurent m12, Laurent m21, Laurent m22) {
    PolyMatrix m;
    m.e = {std::move(m11), std::move(m12), std::move(m21), std::move(m22)};
    return m;
}

cplx ipow(cplx base, long n) {
    if (n < 0) throw std::logic_error("negative exponent in closed form");
    cplx out = 1.0;
    for (long i = 0; i < n; ++i) out *= base;
    return out;
}

cplx cpow(cplx base, cplx e) { return std::exp(e * std::log(base)); }

std::size_t reverse_bits(std::size_t bits, std::size_t len) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < len; ++i) {
        out = (out << 1) | (bits & 1u);
        bits >>= 1;
    }
    return out;
}

Word word_from_bits(std::size_t bits, std::size_t len) {
    std::string s(len, 'x');
    for (std::size_t i = 0; i < len; ++i) {
        if ((bits >> (len - 1 - i)) & 1u) s[i] = 'y';
    }
    return Word(s);
}

Mat2 series_sum(RepName rep, const ParamSet& ps, cplx z, int max_weight, const SeriesOptions& options,
                bool antipode) {
    if (max_weight < 0) throw std::invalid_argument("weight cutoff must be >= 0");
    if (rep != RepName::RhoInfinity && !options.allow_outside_regime && !ps.convergence_regime()) {
        throw std::domain_error("parameters outside the convergence regime: " + ps.to_string());
    }
    if (max_weight == 0) return Mat2::identity();
    if (z == cplx(0.0)) throw std::domain_error("fundamental_series: z = 0 is singular");
    if (!(std::abs(z) < 1.0)) throw std::domain_error("fundamental_series: |z| must be < 1");
    const std::size_t K = static_cast<std::size_t>(max_weight);
    LiTable li(z, max_weight, options.eval);
    const Representation r = Representation::get(rep);
    const VarValues vals = substitution(ps);
    const Mat2 letter[2] = {r.X.evaluate(vals), r.Y.evaluate(vals)};

    Mat2 total = Mat2::identity();
    std::vector<Mat2> prev{Mat2::identity()};
    std::vector<Mat2> cur;
    for (std::size_t L = 1; L <= K; ++L) {
        const std::size_t count = std::size_t{1} << L;
        cur.assign(count, Mat2{});
        for (std::size_t bits = 0; bits < count; ++bits) {
            if (rep == RepName::Rho0) {
                cur[bits] = rho0_closed_form_numeric(word_from_bits(bits, L), ps);
            } else {
                cur[bits] = prev[bits >> 1] * letter[bits & 1u];
            }
            cplx coeff;
            if (antipode) {
                coeff = li.at(L, reverse_bits(bits, L));
                if (L % 2 == 1) coeff = -coeff;
            } else {
                coeff = li.at(L, bits);
            }
            total += coeff * cur[bits];
        }
        prev.swap(cur);
    }
    return total;
}

}  // namespace

Representation Representation::rho0() {
    return {RepName::Rho0, make(0, b(), 0, p()), make(0, 0, a(), q())};
}

Representation Representation::rho1() {
    return {RepName::Rho1, make(0, a(), 0, q()), make(0, 0, b(), p())};
}

Representation Representation::rho_infinity() {
    Representation r0 = rho0();
    PolyMatrix x;
    for (std::size_t i = 0; i < 4; ++i) x.e[i] = r0.Y.e[i] - r0.X.e[i];
    return {RepName::RhoInfinity, x, r0.Y};
}

Representation Representation::get(RepName name) {
    switch (name) {
        case RepName::Rho0: return rho0();
        case RepName::Rho1: return rho1();
        case RepName::RhoInfinity: return rho_infinity();
    }
    throw std::invalid_argument("unknown representation");
}

PolyMatrix rep_word(const Representation& rep, const Word& w) {
    PolyMatrix out = PolyMatrix::identity();
    for (std::size_t i = 0; i < w.weight(); ++i) out = out * (w[i] == Letter::X ? rep.X : rep.Y);
    return out;
}

PolyMatrix rho0_closed_form(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rho0_closed_form: empty word");
    const int weight = static_cast<int>(w.weight());
    const int d = static_cast<int>(w.depth());
    const int h = static_cast<int>(w.height());
    const Laurent pref = Laurent::monomial(Rational(1), {0, 0, weight - d - h, d - h}) *
                         (a() * b() + p() * q()).pow(static_cast<unsigned>(h - 1));
    PolyMatrix m;
    const bool starts_x = w.front() == Letter::X;
    const bool ends_y = w.back() == Letter::Y;
    if (w.weight() == 1) {
        m = ends_y ? make(0, 0, a() * p(), p() * q()) : make(0, b() * q(), 0, p() * q());
    } else if (starts_x && ends_y) {
        m = make(a() * b(), b() * q(), a() * p(), p() * q());
    } else if (ends_y) {
        m = make(0, 0, a() * p(), p() * q());
    } else if (starts_x) {
        m = make(0, b() * q(), 0, p() * q());
    } else {
        m = make(0, 0, 0, p() * q());
    }
    return m.scaled(pref);
}

Mat2 rho0_closed_form_numeric(const Word& w, const ParamSet& ps) {
    if (w.empty()) throw std::invalid_argument("rho0_closed_form: empty word");
    const long weight = static_cast<long>(w.weight());
    const long d = static_cast<long>(w.depth());
    const long h = static_cast<long>(w.height());
    const cplx al = ps.alpha, be = ps.beta, pp = ps.p(), qq = ps.q();
    const cplx s = ipow(al * be + pp * qq, h - 1);
    // Exponents of p and q combined with each entry of M, all nonnegative.
    const long ep = weight - d - h;
    const long eq = d - h;
    const bool starts_x = w.front() == Letter::X;
    const bool ends_y = w.back() == Letter::Y;
    Mat2 m;
    if (ends_y) {
        if (starts_x && weight > 1) {
            m(0, 0) = al * be * ipow(pp, ep) * ipow(qq, eq);
            m(0, 1) = be * ipow(pp, ep) * ipow(qq, eq + 1);
        }
        m(1, 0) = al * ipow(pp, ep + 1) * ipow(qq, eq);
        m(1, 1) = ipow(pp, ep + 1) * ipow(qq, eq + 1);
    } else {
        if (starts_x) m(0, 1) = be * ipow(pp, ep) * ipow(qq, eq + 1);
        m(1, 1) = ipow(pp, ep + 1) * ipow(qq, eq + 1);
    }
    return s * m;
}

VarValues substitution(const ParamSet& ps) { return {ps.alpha, ps.beta, ps.p(), ps.q()}; }

Mat2 rep_word_numeric(const Representation& rep, const Word& w, const ParamSet& ps) {
    const VarValues v = substitution(ps);
    const Mat2 x = rep.X.evaluate(v);
    const Mat2 y = rep.Y.evaluate(v);
    Mat2 out = Mat2::identity();
    for (std::size_t i = 0; i < w.weight(); ++i) out = out * (w[i] == Letter::X ? x : y);
    return out;
}

Mat2 fundamental_series(RepName rep, const ParamSet& ps, cplx z, int max_weight,
                        const SeriesOptions& options) {
    return series_sum(rep, ps, z, max_weight, options, false);
}

Mat2 inverse_series(RepName rep, const ParamSet& ps, cplx z, int max_weight, const SeriesOptions& options) {
    return series_sum(rep, ps, z, max_weight, options, true);
}

TransferMatrices transfer_matrices(const ParamSet& ps) {
    const cplx al = ps.alpha, be = ps.beta, ga = ps.gamma;
    const cplx e = al + be - ga;
    if (be == cplx(0.0) || e == cplx(0.0) || ps.q() == cplx(0.0)) {
        throw std::domain_error("transfer_matrices: degenerate parameters " + ps.to_string());
    }
    TransferMatrices t;
    t.rho0 = Mat2(1.0, 1.0, 0.0, ps.p() / be);
    t.rho1 = Mat2(1.0, al * be / (e * ps.q()), 0.0, be / e);
    t.rho_infinity = Mat2(1.0, 1.0, -al / be, -1.0);
    return t;
}

Mat2 z_power_minus_rho0x(const ParamSet& ps, cplx z) {
    const cplx zp = cpow(z, -ps.p());
    return {1.0, ps.beta / ps.p() * (zp - 1.0), 0.0, zp};
}

Mat2 connection_matrix(ConnectionTag tag, const ParamSet& ps) {
    const cplx al = ps.alpha, be = ps.beta, ga = ps.gamma;
    if (tag == ConnectionTag::C01) {
        return {gamma(ga) * gamma(ga - al - be) / (gamma(ga - al) * gamma(ga - be)),
                gamma(2.0 - ga) * gamma(ga - al - be) / (gamma(1.0 - al) * gamma(1.0 - be)),
                gamma(ga) * gamma(al + be - ga) / (gamma(al) * gamma(be)),
                gamma(2.0 - ga) * gamma(al + be - ga) / (gamma(al + 1.0 - ga) * gamma(be + 1.0 - ga))};
    }
    const cplx ipi(0.0, std::numbers::pi);
    return {std::exp(-ipi * al) * gamma(ga) * gamma(be - al) / (gamma(be) * gamma(ga - al)),
            std::exp(ipi * (ga - al - 1.0)) * gamma(2.0 - ga) * gamma(be - al) /
                (gamma(be + 1.0 - ga) * gamma(1.0 - al)),
            std::exp(-ipi * be) * gamma(ga) * gamma(al - be) / (gamma(al) * gamma(ga - be)),
            std::exp(ipi * (ga - be - 1.0)) * gamma(2.0 - ga) * gamma(al - be) /
                (gamma(al + 1.0 - ga) * gamma(1.0 - be))};
}

Mat2 rho_infty_beta0(const Word& w, cplx alpha, cplx p) {
    if (w.empty()) throw std::invalid_argument("rho_infty_beta0: empty word");
    const long weight = static_cast<long>(w.weight());
    const long d = static_cast<long>(w.depth());
    const cplx ap = alpha + p;
    Mat2 m;
    if (w.back() == Letter::Y) {
        m(1, 0) = ipow(alpha, weight - d + 1) * ipow(ap, d - 1);
    } else {
        m(1, 0) = ipow(alpha, weight - d) * ipow(ap, d);
    }
    m(1, 1) = ipow(alpha, weight - d) * ipow(ap, d);
    return m;
}

std::pair<cplx, cplx> h21_h22_series(cplx alpha, cplx p, cplx u, int N, const EvalParams& params) {
    if (u == cplx(0.0) || !(std::abs(u) < 1.0)) throw std::domain_error("h21_h22_series: need 0 < |u| < 1");
    if (N < 0) throw std::invalid_argument("h21_h22_series: N must be >= 0");
    const cplx L = std::log(u);
    const cplx ap = alpha + p;
    // lp[i] = L^i / i!
    std::vector<cplx> lp(static_cast<std::size_t>(N) + 1, 1.0);
    for (int i = 1; i <= N; ++i) lp[i] = lp[i - 1] * L / static_cast<double>(i);
    std::vector<cplx> ones(static_cast<std::size_t>(N) + 1, 1.0);
    for (int n = 1; n <= N; ++n) ones[n] = mpl(index_with_ones(1, n - 1), u, params).value;
    auto sgn = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };

    cplx h22 = 0.0;
    for (int k = 0; k <= N; ++k) {
        for (int n = 0; n <= k; ++n) {
            h22 += sgn(k) * ones[n] * lp[k - n] * ipow(alpha, k - n) * ipow(ap, n);
        }
    }
    cplx h21 = 0.0;
    for (int k = 1; k <= N; ++k) h21 += sgn(k) * lp[k] * ipow(alpha, k);
    for (int k = 1; k <= N; ++k) {
        for (int n = 1; n <= k; ++n) h21 += ones[n] * lp[k - n] * ipow(alpha, k - n) * ipow(ap, n);
    }
    for (int k = 2; k <= N; ++k) {
        for (int n = 1; n < k; ++n) {
            cplx inner = 0.0;
            for (int i = 0; i <= k - n - 1; ++i) {
                const cplx li = mpl(index_with_ones(k - n - i + 1, n - 1), u, params).value;
                inner += sgn(k - n - 1 - i) * li * lp[i];
            }
            h21 += p * sgn(k) * inner * ipow(alpha, k - n) * ipow(ap, n);
        }
    }
    return {h21, h22};
}

cplx h21_limit(cplx alpha, cplx p, cplx u, const EvalParams& params) {
    if (u == cplx(0.0) || !(std::abs(u) < 1.0)) throw std::domain_error("h21_limit: need 0 < |u| < 1");
    const cplx ap = alpha + p;
    const cplx h22 = cpow(u, -alpha) * cpow(1.0 - u, ap);
    // ∫₀ᵘ t^{−α}(1−t)^{α+p−1} dt as an incomplete beta function.
    const auto f = hypergeom_2f1_d(1.0 - alpha, 1.0 - ap, 2.0 - alpha, u, params);
    const cplx integral = cpow(u, 1.0 - alpha) / (1.0 - alpha) * f.value;
    return h22 - 1.0 + p * integral;
}

std::string to_string(const Mat2& m) {
    std::ostringstream os;
    os.precision(12);
    os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
    return os.str();
}

}  // namespace mplkz
