#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mplkz/gamma.hpp"
#include "mplkz/hypergeometric.hpp"

using namespace mplkz;

namespace {

// Term-by-term Gauss series in long double.
cplx gauss_oracle(cplx a, cplx b, cplx c, cplx z, int terms = 10000) {
    using L = std::complex<long double>;
    const L al(a.real(), a.imag()), bl(b.real(), b.imag()), cl(c.real(), c.imag()), zl(z.real(), z.imag());
    L term = 1.0L, sum = 1.0L;
    for (int n = 0; n < terms; ++n) {
        const long double nl = n;
        term *= (al + nl) * (bl + nl) / ((cl + nl) * (nl + 1.0L)) * zl;
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

const ParamSet regime{0.1, 0.2, 0.9};

// z(1−z)f'' + (γ − (α+β+1)z)f' − αβ f at z, by central differences along the real axis.
cplx ode_residual(const ParamSet& ps, Point at, int j, cplx z) {
    const double h = 1e-4;
    auto f = [&](cplx t) { return local_solution(ps, at, j, t).value; };
    const cplx f0 = f(z), fp = f(z + h), fm = f(z - h);
    const cplx d1 = (fp - fm) / (2 * h), d2 = (fp - 2.0 * f0 + fm) / (h * h);
    return z * (1.0 - z) * d2 + (ps.gamma - (ps.alpha + ps.beta + 1.0) * z) * d1 - ps.alpha * ps.beta * f0;
}

}  // namespace

TEST_CASE("Gauss series examples") {
    CHECK(hypergeom_2f1(regime, 0.0).value == cplx(1.0));
    CHECK(std::abs(hypergeom_2f1({1, 1, 2}, 0.5).value - 2 * std::log(2.0)) < 1e-14);
    CHECK(std::abs(hypergeom_2f1(regime, 0.3).value - gauss_oracle(0.1, 0.2, 0.9, 0.3)) < 1e-14);
    // F(a, b; b; z) = (1 − z)^{−a}
    const cplx z(0.2, -0.6);
    CHECK(std::abs(hypergeom_2f1({0.7, 1.3, 1.3}, z).value - std::pow(1.0 - z, -0.7)) < 1e-13);
    CHECK_THROWS_AS(hypergeom_2f1(regime, 1.5), std::domain_error);
}

TEST_CASE("theta derivative matches finite differences") {
    const double z = 0.35, h = 1e-5;
    const auto s = hypergeom_2f1_d(0.3, -0.4, 1.7, z);
    const cplx fd = z * (hypergeom_2f1_d(0.3, -0.4, 1.7, z + h).value - hypergeom_2f1_d(0.3, -0.4, 1.7, z - h).value) /
                    (2 * h);
    CHECK(std::abs(s.theta - fd) < 1e-9);
}

TEST_CASE("local solution examples") {
    const cplx phi01 = local_solution(regime, Point::Zero, 1, 0.25).value;
    CHECK(std::abs(phi01 - std::pow(0.25, 0.1) * gauss_oracle(0.2, 0.3, 1.1, 0.25)) < 1e-14);
    CHECK(local_solution(regime, Point::One, 0, 1.0).value == cplx(1.0));
    const cplx phiinf0 = local_solution(regime, Point::Infinity, 0, 4.0).value;
    CHECK(std::abs(phiinf0 - std::pow(4.0, -0.1) * gauss_oracle(0.1, 0.2, 0.9, 0.25)) < 1e-14);
}

TEST_CASE("local solutions solve the hypergeometric equation") {
    const ParamSet ps{0.23, -0.41, 0.67};
    for (int j = 0; j <= 1; ++j) {
        CHECK(std::abs(ode_residual(ps, Point::Zero, j, 0.3)) < 1e-5);
        CHECK(std::abs(ode_residual(ps, Point::One, j, 0.7)) < 1e-5);
        CHECK(std::abs(ode_residual(ps, Point::Infinity, j, 3.0)) < 1e-5);
    }
}

TEST_CASE("fundamental matrix rows") {
    const cplx z(0.3, 0.1);
    const Mat2 m = fundamental_matrix(regime, Point::Zero, z);
    for (int j = 0; j <= 1; ++j) {
        const auto s = local_solution(regime, Point::Zero, j, z);
        CHECK(m(0, j) == s.value);
        CHECK(std::abs(m(1, j) - s.theta / regime.beta) < 1e-15);
    }
}

TEST_CASE("MPL expansion of the solution at 0") {
    for (double z : {0.1, 0.3, 0.5}) {
        const ValueWithError s = hypergeom_mpl_series(regime, z, 40);
        CHECK(std::abs(s.value - gauss_oracle(0.1, 0.2, 0.9, z)) < 1e-8);
    }
    CHECK(hypergeom_mpl_series({0.0, 0.2, 0.9}, 0.4, 20).value == cplx(1.0));
    CHECK(hypergeom_mpl_series(regime, 0.0, 20).value == cplx(1.0));
    CHECK_THROWS(hypergeom_mpl_series({2.0, 0.2, 0.9}, 0.3, 10));
    CHECK_NOTHROW(hypergeom_mpl_series({2.0, 0.2, 0.9}, 0.3, 10, {}, true));
}

TEST_CASE("MPL expansion of the second solution at 0") {
    for (double z : {0.1, 0.3, 0.5}) {
        const ValueWithError s = phi01_mpl_series(regime, z, 40);
        CHECK(std::abs(s.value - local_solution(regime, Point::Zero, 1, z).value) < 1e-8);
    }
    // α + 1 − γ = 0 leaves z^{1−γ}.
    const ParamSet ps{-0.1, 0.2, 0.9};
    CHECK(std::abs(phi01_mpl_series(ps, 0.4, 30).value - std::pow(0.4, 0.1)) < 1e-15);
    // Leading behaviour near 0.
    const double z = 1e-6;
    CHECK(std::abs(phi01_mpl_series(regime, z, 30).value / std::pow(z, 0.1) - 1.0) < 1e-5);
}

TEST_CASE("expansion error bound dominates the observed error") {
    const double ap = std::abs(regime.p()), aq = std::abs(regime.q()), ar = std::abs(regime.r());
    for (int K : {4, 8, 12}) {
        const double z = 0.5;
        const double bound = expansion_error_bound(ap, aq, ar, z, K, 0.0);
        const double err = std::abs(hypergeom_mpl_series(regime, z, K).value - gauss_oracle(0.1, 0.2, 0.9, z));
        CHECK(err <= bound);
    }
}

TEST_CASE("parameter predicates") {
    CHECK(regime.convergence_regime());
    CHECK(regime.generic());
    CHECK_FALSE(ParamSet{0.5, 0.5, 2.0}.generic());
    CHECK_FALSE(ParamSet{0.1, 0.2, 3.0}.convergence_regime());
}

TEST_CASE("complex gamma") {
    for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, -0.5, -2.7}) {
        CHECK(mplkz::gamma(cplx(x)).real() == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
    }
    CHECK(std::abs(mplkz::gamma(cplx(0.5)) - std::sqrt(std::numbers::pi)) < 1e-14);
    const cplx z(0.3, 1.7);
    CHECK(std::abs(mplkz::gamma(z + 1.0) - z * mplkz::gamma(z)) < 1e-13 * std::abs(mplkz::gamma(z + 1.0)));
    CHECK(std::abs(mplkz::gamma(z) * mplkz::gamma(1.0 - z) - std::numbers::pi / std::sin(std::numbers::pi * z)) < 1e-12);
    CHECK(std::abs(mplkz::gamma(std::conj(z)) - std::conj(mplkz::gamma(z))) < 1e-15);
    CHECK_THROWS_AS(mplkz::gamma(cplx(-3.0)), std::domain_error);
    CHECK(near_gamma_pole(-2.0 + 1e-14));
    CHECK_FALSE(near_gamma_pole(0.5));
}
