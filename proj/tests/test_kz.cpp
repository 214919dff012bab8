#include <doctest.h>

#include <cmath>

#include "mplkz/identities.hpp"
#include "mplkz/kz.hpp"
#include "mplkz/laurent.hpp"

using namespace mplkz;

namespace {

const Laurent A = Laurent::var(Var::Alpha), B = Laurent::var(Var::Beta), P = Laurent::var(Var::P),
              Q = Laurent::var(Var::Q);

PolyMatrix pm(Laurent a, Laurent b, Laurent c, Laurent d) {
    PolyMatrix m;
    m(0, 0) = std::move(a);
    m(0, 1) = std::move(b);
    m(1, 0) = std::move(c);
    m(1, 1) = std::move(d);
    return m;
}

const ParamSet regime{0.1, 0.2, 0.9};

std::vector<Word> words_upto(std::size_t w) {
    std::vector<Word> out;
    for (std::size_t k = 1; k <= w; ++k) {
        for (const auto& x : all_words(k)) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
    const Laurent s = A + B;
    CHECK(s.pow(2) == A * A + Laurent(2) * A * B + B * B);
    CHECK((s - s).is_zero());
    const Laurent inv = Laurent::var(Var::P, -1);
    CHECK(P * inv == Laurent(1));
    CHECK_FALSE(inv.is_polynomial());
    CHECK(std::abs((A * inv).evaluate({0.3, 0.0, 0.5, 0.0}) - 0.6) < 1e-15);
}

TEST_CASE("word images") {
    const Representation r0 = Representation::rho0();
    CHECK(rep_word(r0, Word()) == PolyMatrix::identity());
    CHECK(rep_word(r0, Word("x")) == pm(0, B, 0, P));
    CHECK(rep_word(r0, Word("xy")) == pm(A * B, B * Q, A * P, P * Q));
    // ρ₁ and ρ∞ from ρ₀.
    const Representation r1 = Representation::rho1(), ri = Representation::rho_infinity();
    CHECK(r1.X == pm(0, A, 0, Q));
    CHECK(r1.Y == pm(0, 0, B, P));
    const ParamSet ps{0.3, 0.7, 0.2};
    const Mat2 x_inf = rep_word_numeric(ri, Word("x"), ps);
    CHECK(max_diff(x_inf, Mat2(0.0, -0.7, 0.3, 1.0)) < 1e-15);
}

TEST_CASE("closed form examples") {
    CHECK(rho0_closed_form(Word("xy")) == pm(A * B, B * Q, A * P, P * Q));
    CHECK(rho0_closed_form(Word("y")) == pm(0, 0, A, Q));
    CHECK(rho0_closed_form(Word("yx")) == pm(0, 0, 0, A * B + P * Q));
    CHECK(rho0_closed_form(Word("x")) == pm(0, B, 0, P));
}

TEST_CASE("closed form equals the matrix product for every word of weight <= 8") {
    const Representation r0 = Representation::rho0();
    const ParamSet ps{0.31, -0.47, 0.73};
    for (const auto& w : words_upto(8)) {
        REQUIRE(rho0_closed_form(w) == rep_word(r0, w));
        CHECK(max_diff(rho0_closed_form_numeric(w, ps), rep_word_numeric(r0, w, ps)) < 1e-13);
    }
}

TEST_CASE("fundamental series") {
    CHECK(max_diff(fundamental_series(RepName::Rho0, regime, 0.4, 0), Mat2::identity()) == 0.0);
    CHECK(max_diff(inverse_series(RepName::Rho0, regime, 0.4, 0), Mat2::identity()) == 0.0);

    // dG/dz = (ρ(X)/z + ρ(Y)/(1−z))G by central differences.
    for (RepName name : {RepName::Rho0, RepName::Rho1, RepName::RhoInfinity}) {
        const Representation rep = Representation::get(name);
        const Mat2 X = rep_word_numeric(rep, Word("x"), regime), Y = rep_word_numeric(rep, Word("y"), regime);
        const double z = 0.4, h = 1e-4;
        const Mat2 d = (1.0 / (2 * h)) * (fundamental_series(name, regime, z + h, 14) -
                                          fundamental_series(name, regime, z - h, 14));
        const Mat2 rhs = ((1.0 / z) * X + (1.0 / (1 - z)) * Y) * fundamental_series(name, regime, z, 14);
        CHECK(max_diff(d, rhs) < 1e-5);
        // ρ₁ carries q = 0.4 on its diagonal and needs two more weights.
        const int K = name == RepName::Rho1 ? 14 : 12;
        CHECK(max_diff(fundamental_series(name, regime, z, K) * inverse_series(name, regime, z, K),
                       Mat2::identity()) < 1e-6);
    }

    // ρ₀(H₀(z))·z^{−ρ₀(X)} → I as z → 0.
    const double z = 1e-3;
    const Mat2 m = fundamental_series(RepName::Rho0, regime, z, 14) * z_power_minus_rho0x(regime, z);
    CHECK(max_diff(m, Mat2::identity()) < 1e-2);
    CHECK_THROWS(fundamental_series(RepName::Rho0, {2.0, 0.2, 0.9}, 0.3, 6));
}

TEST_CASE("transfer matrices") {
    const ParamSet ps{0.3, 0.25, 0.75};  // β = p
    CHECK(max_diff(transfer_matrices(ps).rho0, Mat2(1.0, 1.0, 0.0, 1.0)) < 1e-15);
    const ParamSet g{0.13, 0.29, 0.71};
    const cplx det = transfer_matrices(g).rho_infinity.det();
    CHECK(std::abs(det - (g.alpha - g.beta) / g.beta) < 1e-15);

    const TransferMatrices t = transfer_matrices(regime);
    const int K = 16;
    const double z = 0.3;
    const Mat2 phi0 = fundamental_matrix(regime, Point::Zero, z);
    CHECK(max_diff(fundamental_series(RepName::Rho0, regime, z, K) * t.rho0, phi0) < 1e-9);
    const Mat2 phi1 = fundamental_matrix(regime, Point::One, 1 - z);
    CHECK(max_diff(fundamental_series(RepName::Rho1, regime, z, K) * t.rho1, phi1.inverse().transpose()) < 1e-7);
    const Mat2 phiinf = fundamental_matrix(regime, Point::Infinity, 1 / z);
    CHECK(max_diff(fundamental_series(RepName::RhoInfinity, regime, z, K) * t.rho_infinity, phiinf) < 1e-9);
    CHECK_THROWS(transfer_matrices({0.4, 0.0, 0.9}));
}

TEST_CASE("fundamental matrices solve the first-order system") {
    const double h = 1e-5;
    for (Point at : {Point::Zero, Point::One, Point::Infinity}) {
        const cplx z = at == Point::Infinity ? cplx(2.5, 0.4) : cplx(0.45, 0.1);
        const Mat2 d = (1.0 / (2 * h)) * (fundamental_matrix(regime, at, z + h) - fundamental_matrix(regime, at, z - h));
        CHECK(max_diff(d, hypergeometric_system(regime, z) * fundamental_matrix(regime, at, z)) < 1e-7);
    }
}

TEST_CASE("connection matrices") {
    const Mat2 c = connection_matrix(ConnectionTag::C01, regime);
    CHECK(std::abs(c(0, 0) - std::tgamma(0.9) * std::tgamma(0.6) / (std::tgamma(0.8) * std::tgamma(0.7))) < 1e-14);

    CHECK(verify_connection_full(ConnectionTag::C01, regime, 0.5).passed());
    CHECK(verify_connection_full(ConnectionTag::C01, regime, cplx(0.4, -0.3)).passed());
    CHECK(verify_connection_full(ConnectionTag::C0Infinity, regime, cplx(0.5, -0.5), {}, 1e-5).passed());
    CHECK(verify_connection_full(ConnectionTag::C0Infinity, regime, cplx(0.5, 0.5), {}, 1e-5,
                                 ConnectionRoute::LowerHalfPlane)
              .passed());
    // With principal branches on both sides the matrix above the real axis is
    // a different one; the recorded deviation is a full unit of the phase.
    const VerificationReport principal =
        verify_connection_full(ConnectionTag::C0Infinity, regime, cplx(0.5, 0.5), {}, 1e-5);
    CHECK(principal.verdict == Verdict::Fail);
    CHECK(principal.abs_err > 1.0);

    const VerificationReport degenerate = verify_connection_full(ConnectionTag::C01, {0.5, 0.5, 2.0}, 0.5);
    CHECK(degenerate.verdict == Verdict::Error);
    CHECK(degenerate.note.find("non-generic") != std::string::npos);
}

TEST_CASE("word images at beta -> 0") {
    const cplx alpha = 0.17, p = 0.11;
    CHECK(max_diff(rho_infty_beta0(Word("y"), alpha, p), Mat2(0.0, 0.0, alpha, alpha + p)) < 1e-15);
    const ParamSet ps{alpha, 1e-9, 1.0 - p};
    for (const auto& w : words_upto(5)) {
        CHECK(max_diff(rho_infty_beta0(w, alpha, p), rep_word_numeric(Representation::rho_infinity(), w, ps)) < 1e-7);
    }
}

TEST_CASE("entries of the inverse solution at beta -> 0") {
    const auto [h21_0, h22_0] = h21_h22_series(0.0, 0.0, 0.3, 12);
    CHECK(std::abs(h21_0) < 1e-15);
    CHECK(std::abs(h22_0 - 1.0) < 1e-15);

    const cplx alpha = 0.12, p = 0.09, u = 0.3;
    const ParamSet ps{alpha, 1e-7, 1.0 - p};
    SeriesOptions so;
    const Mat2 inv = inverse_series(RepName::RhoInfinity, ps, u, 14, so);
    CHECK(std::abs(inv(0, 0) - 1.0) < 1e-6);
    CHECK(std::abs(inv(0, 1)) < 1e-6);
    CHECK(std::abs(h21_limit(alpha, p, u) - inv(1, 0)) < 1e-6);
    const auto [h21, h22] = h21_h22_series(alpha, p, u, 14);
    CHECK(std::abs(h22 - inv(1, 1)) < 1e-6);
    // The printed double sum for H21 misses the limit by far more than its truncation.
    CHECK(std::abs(h21 - inv(1, 0)) > 1e-3);
}
