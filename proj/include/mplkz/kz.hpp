#pragma once

/**
 * @file kz.hpp
 * @brief 2×2 representations of the formal KZ equation
 *        dG/dz = (X/z + Y/(1−z))G and the matrices built from them.
 *
 * With p = 1−γ, q = α+β+1−γ:
 *
 *     ρ₀(X) = [[0, β], [0, p]]      ρ₀(Y) = [[0, 0], [α, q]]
 *     ρ₁(X) = ᵗρ₀(Y)                ρ₁(Y) = ᵗρ₀(X)
 *     ρ∞(X) = ρ₀(Y) − ρ₀(X)         ρ∞(Y) = ρ₀(Y)
 *
 * ρ∞ is the equation rewritten in u = 1/z; it is taken from the difference
 * ρ₀(Y) − ρ₀(X) = [[0, −β], [α, α+β]].
 */

#include <utility>

#include "mplkz/hypergeometric.hpp"
#include "mplkz/laurent.hpp"

namespace mplkz {

enum class RepName { Rho0, Rho1, RhoInfinity };

struct Representation {
    RepName name;
    PolyMatrix X;
    PolyMatrix Y;

    static Representation rho0();
    static Representation rho1();
    static Representation rho_infinity();
    static Representation get(RepName name);
};

/// Ordered product of letter images; the empty word maps to the identity.
PolyMatrix rep_word(const Representation& rep, const Word& w);

/**
 * ρ₀(W) = p^{|W|−d−h} q^{d−h} (αβ+pq)^{h−1} M with M chosen by the first and
 * last letters. For W = X, W = Y and W ∈ YℌX the prefactor has negative
 * exponents which cancel against M; the result is returned fully expanded.
 */
PolyMatrix rho0_closed_form(const Word& w);
/// The same closed form evaluated directly in floating point.
Mat2 rho0_closed_form_numeric(const Word& w, const ParamSet& ps);

VarValues substitution(const ParamSet& ps);
Mat2 rep_word_numeric(const Representation& rep, const Word& w, const ParamSet& ps);

struct SeriesOptions {
    EvalParams eval{};
    /// Evaluate even when the parameters leave the convergence regime.
    bool allow_outside_regime = false;
};

/// Σ_{|w|<=K} Li(w;z) ρ(W), principal branches, 0 < |z| < 1.
Mat2 fundamental_series(RepName rep, const ParamSet& ps, cplx z, int max_weight,
                        const SeriesOptions& options = {});
/// Σ_{|w|<=K} Li(S(w);z) ρ(W) with S the antipode.
Mat2 inverse_series(RepName rep, const ParamSet& ps, cplx z, int max_weight,
                    const SeriesOptions& options = {});

struct TransferMatrices {
    Mat2 rho0;          ///< Φ₀ = ρ₀(H₀(z))·T₀
    Mat2 rho1;          ///< ᵗΦ₁⁻¹ = ρ₁(H₀(1−z))·T₁, T₁ = [[1, αβ/((α+β−γ)q)], [0, β/(α+β−γ)]]
    Mat2 rho_infinity;  ///< Φ∞ = ρ∞(H₀(1/z))·T∞
};

TransferMatrices transfer_matrices(const ParamSet& ps);

/// [[1, (β/p)(z^{−p}−1)], [0, z^{−p}]]
Mat2 z_power_minus_rho0x(const ParamSet& ps, cplx z);

enum class ConnectionTag { C01, C0Infinity };

/// Γ-function expressions of Φ₁⁻¹Φ₀ and Φ∞⁻¹Φ₀.
Mat2 connection_matrix(ConnectionTag tag, const ParamSet& ps);

/// lim_{β→0} ρ∞(W) for nonempty W.
Mat2 rho_infty_beta0(const Word& w, cplx alpha, cplx p);

/// (H₂₁, H₂₂) from the printed double and triple sums, truncated at k <= N,
/// with log u principal and 0 < |u| < 1.
std::pair<cplx, cplx> h21_h22_series(cplx alpha, cplx p, cplx u, int N, const EvalParams& params = {});

/**
 * The (2,1) entry of lim_{β→0} ρ∞(H₀(u))⁻¹ derived from the β→0 word images:
 * H₂₂ − 1 + p∫₀ᵘ t^{−α}(1−t)^{α+p−1} dt with H₂₂ = u^{−α}(1−u)^{α+p}.
 * The printed triple-sum form does not reproduce this limit.
 */
cplx h21_limit(cplx alpha, cplx p, cplx u, const EvalParams& params = {});

}  // namespace mplkz
