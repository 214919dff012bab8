#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mplkz/identities.hpp"

using namespace mplkz;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double zeta3 = 1.2020569031595942854;

EvalParams fast() {
    EvalParams ep;
    ep.mzv_terms = 1'000'000;
    return ep;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("Schur polynomials") {
    const ZetaSequence z = ZetaSequence::zeta(8, fast());
    CHECK(z.order() == 8);
    CHECK(schur_P(0, z) == 1.0);
    CHECK(schur_P(1, z) == 0.0);
    CHECK(schur_P(2, z) == doctest::Approx(pi * pi / 12).epsilon(1e-12));
    CHECK(schur_P(3, z) == doctest::Approx(zeta3 / 3).epsilon(1e-12));
    // exp(Σ aₙtⁿ)·exp(−Σ aₙtⁿ) = 1
    const auto P = schur_all(8, z), M = schur_all(8, z.negated());
    for (int n = 1; n <= 8; ++n) {
        double c = 0.0;
        for (int i = 0; i <= n; ++i) c += P[i] * M[n - i];
        CHECK(std::abs(c) < 1e-13);
    }
    // P₄ = a₄ + a₂²/2 for a₁ = 0.
    CHECK(P[4] == doctest::Approx(z.a[4] + z.a[2] * z.a[2] / 2).epsilon(1e-14));
}

TEST_CASE("N coefficients") {
    CHECK(n_coeff(2, 0) == 1);
    CHECK(n_coeff(0, 1) == -2);
    CHECK(n_coeff(1, 1) == -3);
    CHECK(n_coeff(0, 0) == 1);
    CHECK(n_coeff(0, 0, NConvention::PowerSum) == 2);
    CHECK(n_coeff(5, 1, 1) == 0);
    for (int n = 3; n <= 20; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            const int i = n - 2 * j;
            CHECK(n_coeff(n, i, j) == n_coeff(n - 1, i - 1, j) - n_coeff(n - 2, i, j - 1));
        }
    }
    // aⁿ + bⁿ at random integer points.
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int n = 1; n <= 20; ++n) {
        const long a = d(rng), b = d(rng);
        mpz_class lhs = 0, rhs = 0;
        mpz_class pa, pb;
        mpz_pow_ui(pa.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(pb.get_mpz_t(), mpz_class(b).get_mpz_t(), static_cast<unsigned long>(n));
        lhs = pa + pb;
        for (int j = 0; 2 * j <= n; ++j) {
            mpz_class s, p;
            mpz_pow_ui(s.get_mpz_t(), mpz_class(a + b).get_mpz_t(), static_cast<unsigned long>(n - 2 * j));
            mpz_pow_ui(p.get_mpz_t(), mpz_class(a * b).get_mpz_t(), static_cast<unsigned long>(j));
            rhs += mpz_class(std::to_string(n_coeff(n, n - 2 * j, j))) * s * p;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("product expansion") {
    const ProductExpandResult ones = product_expand_check(std::vector<mpq_class>(8, 1), 4);
    CHECK(ones.holds);
    CHECK(ones.mismatches.empty());
    const ProductExpandResult delta = product_expand_check({1}, 6);
    CHECK(delta.holds);
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<mpq_class> A;
        for (int i = 0; i <= 6; ++i) A.emplace_back(num(rng), den(rng));
        for (auto& a : A) a.canonicalize();
        CHECK(product_expand_check(A, 6).holds);
    }
    const ProductExpandResult ps = product_expand_check(std::vector<mpq_class>(8, 1), 4, NConvention::PowerSum);
    CHECK_FALSE(ps.holds);
    CHECK_FALSE(ps.mismatches.empty());
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == mpq_class(1, 2));
    CHECK(bernoulli(1, BernoulliConvention::Minus) == mpq_class(-1, 2));
    CHECK(bernoulli(2) == mpq_class(1, 6));
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
    for (int k = 1; 2 * k + 1 <= 20; ++k) CHECK(bernoulli(2 * k + 1) == 0);
    // Σ_{k<=m} C(m+1, k) B⁻ₖ = 0 for m >= 1.
    for (int m = 1; m <= 20; ++m) {
        mpq_class s = 0;
        for (int k = 0; k <= m; ++k) s += mpq_class(binom(m + 1, k)) * bernoulli(k, BernoulliConvention::Minus);
        CHECK(s == 0);
    }
}

TEST_CASE("Gamma ratio expansion") {
    CHECK(gamma_ratio_coeff(0, 0, 0, 6, fast()) == doctest::Approx(1.0));
    CHECK(std::abs(gamma_ratio_coeff(1, 0, 0, 6, fast())) < 1e-15);
    CHECK_THROWS(gamma_ratio_coeff(3, 2, 1, 6, fast()));

    const ParamSet ps{0.05, 0.07, 0.97};
    const cplx direct = gamma_ratio_direct(ps);
    double err[13] = {};
    for (int order : {4, 6, 8, 10, 12}) err[order] = std::abs(gamma_ratio_expansion(ps, order, fast()) - direct);
    // Each two orders gain roughly |p|-|q|-|r| squared; 1e-8 is reached at order 10.
    CHECK(err[6] < 1e-6);
    CHECK(err[8] < err[6] / 10);
    CHECK(err[10] < err[8] / 10);
    CHECK(err[10] <= 1e-8);
    // The order-6 deviation is exactly the omitted terms of orders 7..12.
    const cplx omitted = gamma_ratio_expansion(ps, 12, fast()) - gamma_ratio_expansion(ps, 6, fast());
    CHECK(std::abs(std::abs(omitted) - err[6]) <= err[12] + 1e-14);
}

TEST_CASE("relation from the (1,1) entry of C01") {
    const VerificationReport r = verify_thm_mplrel01(1, 1, 0, 0.5, fast());
    CHECK(r.passed());
    // Ḡ₀(2,1,0) = −Li₂, so this is Euler inversion 2Li₂(1/2) + log²2 = ζ(2) with both sides negated.
    CHECK(r.rhs.real() == doctest::Approx(-pi * pi / 6).epsilon(1e-9));
    CHECK(r.lhs.real() ==
          doctest::Approx(-(2 * (pi * pi / 12 - std::pow(std::log(2.0), 2) / 2) + std::pow(std::log(2.0), 2))));
    for (int k = 1; k <= 4; ++k) CHECK(verify_thm_mplrel01(k, 1, 0, 0.3, fast()).passed());
    CHECK(verify_thm_mplrel01(1, 2, 0, 0.5, fast()).passed());
    CHECK(verify_thm_mplrel01(0, 0, 1, 0.7, fast()).passed());
    CHECK(verify_thm_mplrel01(1, 1, 0, 1.5, fast()).verdict == Verdict::Error);
}

TEST_CASE("Ohno-Zagier") {
    const VerificationReport r = verify_ohno_zagier(1, 1, 0, fast());
    CHECK(r.passed());
    CHECK(r.rhs.real() == doctest::Approx(-pi * pi / 6).epsilon(1e-9));
    CHECK(verify_ohno_zagier(2, 1, 0, fast(), 1e-5).passed());
    CHECK(verify_ohno_zagier(1, 2, 0, fast(), 1e-5).passed());
    const VerificationReport m = verify_ohno_zagier(0, 0, 1, fast());
    CHECK(m.passed());
    CHECK(m.rhs.real() == doctest::Approx(pi * pi / 6).epsilon(1e-9));
}

TEST_CASE("sum formula") {
    const VerificationReport a = verify_sum_formula(3, 1, 1.0, fast());
    CHECK(a.passed());
    CHECK(a.rhs.real() == doctest::Approx(zeta3).epsilon(1e-9));
    CHECK(verify_sum_formula(3, 2, 1.0, fast()).passed());
    CHECK(verify_sum_formula(4, 2, 0.5, fast(), 1e-5).passed());
    CHECK(verify_sum_formula(3, 3, 0.5, fast()).verdict == Verdict::Error);
}

TEST_CASE("Euler inversion and Euler's relation") {
    for (int k = 1; k <= 6; ++k) {
        CHECK(verify_euler_inversion(k, 0.5, fast()).passed());
        CHECK(verify_euler_zeta(k, fast()).passed());
    }
    CHECK(verify_euler_inversion(3, cplx(0.4, 0.2), fast()).passed());
}

TEST_CASE("zeta at even arguments") {
    for (int k = 1; k <= 4; ++k) {
        const VerificationReport r = verify_zveven(k, fast());
        CHECK(r.passed());
        CHECK(r.tol > 0.0);
    }
}

TEST_CASE("relations between z and 1/z") {
    const VerificationReport r1 = verify_rel0infty(Rel0InftyVariant::Rel1, 1, 0, 0.5, fast());
    CHECK(r1.passed());
    CHECK(std::abs(r1.rhs - cplx(0.0, pi)) < 1e-15);
    const VerificationReport r2 = verify_rel0infty(Rel0InftyVariant::Rel1, 2, 0, 0.999, fast());
    CHECK(r2.passed());
    CHECK(r2.rhs.real() == doctest::Approx(-pi * pi / 3));
    for (int m = 1; m <= 4; ++m) {
        CHECK(verify_rel0infty(Rel0InftyVariant::Rel1, m, 0, 0.4, fast(), 1e-5).passed());
        for (int n = 1; n <= 2; ++n) CHECK(verify_rel0infty(Rel0InftyVariant::Rel2, m, n, 0.4, fast(), 1e-5).passed());
    }
    CHECK(verify_rel0infty(Rel0InftyVariant::Rel2, 3, 1, 0.4, fast(), 1e-5).passed());
    CHECK(verify_rel0infty(Rel0InftyVariant::Rel1, 2, 0, 1.5, fast()).verdict == Verdict::Error);
}

TEST_CASE("MZV relations from the limit z -> 1") {
    const VerificationReport a = verify_mzv0infty(Mzv0InftyVariant::N1Odd, 3, fast());
    CHECK(a.passed());
    CHECK(a.lhs.real() == doctest::Approx(5 * std::pow(pi, 4) / 90).epsilon(1e-6));
    CHECK(a.lhs.real() == doctest::Approx(5.4116).epsilon(1e-4));
    CHECK(verify_mzv0infty(Mzv0InftyVariant::N1Even, 2, fast()).passed());
    CHECK(verify_mzv0infty(Mzv0InftyVariant::N2Even, 2, fast()).passed());
    for (int m = 3; m <= 5; m += 2) {
        CHECK(verify_mzv0infty(Mzv0InftyVariant::N1Odd, m, fast()).passed());
        CHECK(verify_mzv0infty(Mzv0InftyVariant::N2Odd, m, fast()).passed());
    }
    for (int m = 2; m <= 6; m += 2) {
        CHECK(verify_mzv0infty(Mzv0InftyVariant::N1Even, m, fast()).passed());
        CHECK(verify_mzv0infty(Mzv0InftyVariant::N2Even, m, fast()).passed());
    }
    // The n = 2 relations as displayed are off by O(1).
    CHECK(verify_mzv0infty(Mzv0InftyVariant::N2EvenPrinted, 2, fast()).verdict == Verdict::Fail);
    CHECK(verify_mzv0infty(Mzv0InftyVariant::N2OddPrinted, 3, fast()).verdict == Verdict::Fail);
    CHECK(verify_mzv0infty(Mzv0InftyVariant::N1Odd, 1, fast()).verdict == Verdict::Error);
    CHECK(verify_mzv0infty(Mzv0InftyVariant::N1Odd, 4, fast()).verdict == Verdict::Error);
}

TEST_CASE("MPL expansions as reports") {
    const ParamSet ps{0.1, 0.2, 0.9};
    for (double z : {0.1, 0.3, 0.5}) {
        CHECK(verify_hypergeom_mpl(ps, z, 40).passed());
        CHECK(verify_phi01_mpl(ps, z, 40).passed());
    }
    CHECK(verify_hypergeom_mpl(ps, 0.3, 40).id == "theorem31");
    CHECK(verify_phi01_mpl(ps, 0.3, 40).id == "corollary-phi01");
}

TEST_CASE("identifiers") {
    CHECK(to_string(Rel0InftyVariant::Rel2) == "rel0infty-2");
    CHECK(to_string(Mzv0InftyVariant::N2OddPrinted) == "mzv0infty-n2odd-printed");
    CHECK(to_string(ConnectionRoute::LowerHalfPlane) == "lower");
}
