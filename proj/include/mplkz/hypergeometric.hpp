#pragma once

/**
 * @file hypergeometric.hpp
 * @brief Gauss hypergeometric series, the six local solutions at 0, 1, ∞ and
 *        the MPL expansions of the two solutions at z = 0.
 *
 * Fundamental matrices have rows (φ, (1/β)·z dφ/dz); derivatives come from
 * differentiating the series term by term.
 */

#include "mplkz/matrix2.hpp"
#include "mplkz/series.hpp"

namespace mplkz {

struct ParamSet {
    cplx alpha{};
    cplx beta{};
    cplx gamma{};

    cplx p() const { return 1.0 - gamma; }
    cplx q() const { return alpha + beta + 1.0 - gamma; }
    cplx r() const { return (alpha + 1.0 - gamma) * (beta + 1.0 - gamma); }

    /// |p|, |α+1−γ|, |β+1−γ|, |q| all below 1/2.
    bool convergence_regime() const;
    /// α, β, γ and γ−α−β all non-integers.
    bool generic() const;
    std::string to_string() const;
};

struct SeriesWithDerivative {
    cplx value{};
    cplx theta{};  ///< z·d/dz of the value
    double error_bound = 0.0;
};

/// F(a,b;c;z) with z·F'(z), |z| < 1.
SeriesWithDerivative hypergeom_2f1_d(cplx a, cplx b, cplx c, cplx z, const EvalParams& params = {});
ValueWithError hypergeom_2f1(const ParamSet& ps, cplx z, const EvalParams& params = {});

enum class Point { Zero, One, Infinity };

/// φ⁽ⁱ⁾ⱼ(z) with principal branches of the power prefactors.
SeriesWithDerivative local_solution(const ParamSet& ps, Point at, int j, cplx z,
                                    const EvalParams& params = {});

/// Φ_i = [[φ₀, φ₁], [zφ₀'/β, zφ₁'/β]].
Mat2 fundamental_matrix(const ParamSet& ps, Point at, cplx z, const EvalParams& params = {});

/// Coefficient matrix A(z) of dΦ/dz = A(z)Φ, i.e. ρ₀(X)/z + ρ₀(Y)/(1−z).
Mat2 hypergeometric_system(const ParamSet& ps, cplx z);

/// 1 + αβ Σ_{k<=K} G₀(k,n,s;z) p^{k−n−s} q^{n−s} r^{s−1}.
ValueWithError hypergeom_mpl_series(const ParamSet& ps, cplx z, int max_weight,
                                const EvalParams& params = {}, bool allow_outside_regime = false);

/// z^{1−γ}(1 + r Σ_{k<=K} G₀(k,n,s;z) (−p)^{k−n−s} q^{n−s} (αβ)^{s−1}).
ValueWithError phi01_mpl_series(const ParamSet& ps, cplx z, int max_weight,
                                      const EvalParams& params = {},
                                      bool allow_outside_regime = false);

/**
 * Majorant of |Σ_{k>K} (...) | + truncation error for the sums above.
 *
 * Per word the monomial factorizes over parts: the first part contributes
 * |p|^{k₁−2}, each later part |q| when it equals 1 and |r|·|p|^{k_i−2}
 * otherwise. The weight-k totals a_k then satisfy
 * a_k = (|p|+|q|)a_{k−1} − (|p||q|−|r|)a_{k−2} with a_2 = 1, and each
 * |G-word| is at most |z|/(1−|z|). Returns +inf when the recurrence diverges.
 */
double expansion_error_bound(double abs_p, double abs_q, double abs_r, double abs_z,
                             int max_weight, double word_tail);

}  // namespace mplkz
