#pragma once

/**
 * @file identities.hpp
 * @brief Schur polynomials, the integers N_{i,j}, the zeta expansion of the
 *        Γ-ratio C⁰¹₁₁, Bernoulli numbers, and numerical verification of the
 *        functional relations among MPLs and MZVs that follow from the
 *        connection formulas.
 *
 * Conventions used throughout:
 *
 *   exp(Σ aₙ tⁿ) = Σ Pₙ(a) tⁿ,    ζ = (0, ζ(2)/2, ζ(3)/3, ...)
 *   aⁿ + bⁿ = Σ N⁽ⁿ⁾_{i,j} (a+b)ⁱ (ab)ʲ,    N_{i,j} = N⁽ⁱ⁺²ʲ⁾_{i,j}
 *   Ḡᵢ(k,n,s;z) = Gᵢ(k,n,s;z) − Gᵢ(k,n,s+1;z), with Gᵢ = 0 whenever an
 *   argument is <= 0.
 */

#include <gmpxx.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mplkz/hypergeometric.hpp"
#include "mplkz/kz.hpp"
#include "mplkz/report.hpp"
#include "mplkz/series.hpp"

namespace mplkz {

/// Euler's constant. It cancels in every Γ-ratio used here and is kept only
/// as the named constant of 1/Γ(1−t) = exp(−ct − Σ ζ(n)tⁿ/n).
inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// ---------------------------------------------------------------- zeta values

/// Memoized multiple zeta values. Safe to share between threads.
class ZetaOracle {
public:
    explicit ZetaOracle(EvalParams params = {});

    ValueWithError mzv(const MultiIndex& index);
    /// ζ(n), n >= 2.
    double zeta(int n);
    const EvalParams& params() const { return params_; }

private:
    struct Impl;
    EvalParams params_;
    std::shared_ptr<Impl> impl_;
};

/// Process-wide oracle for the given MZV truncation.
ZetaOracle& zeta_oracle(const EvalParams& params = {});

/// (a₁, ..., a_N) with a₁ = 0 and aₙ = ζ(n)/n; a[0] is unused and zero.
struct ZetaSequence {
    std::vector<double> a;

    static ZetaSequence zeta(int order, const EvalParams& params = {});
    ZetaSequence negated() const;
    int order() const { return static_cast<int>(a.size()) - 1; }
};

double schur_P(int n, const ZetaSequence& seq);
/// P₀, ..., P_n by the recurrence n Pₙ = Σ_{j=1}^{n} j aⱼ P_{n−j}.
std::vector<double> schur_all(int n, const ZetaSequence& seq);

// ---------------------------------------------------------------- N integers

/// N⁽⁰⁾_{0,0} = 1 (the value that makes the product expansion hold) or = 2
/// (the literal power sum a⁰ + b⁰).
enum class NConvention { Paper, PowerSum };

/// N⁽ⁿ⁾_{i,j}; zero unless i + 2j = n and i, j >= 0.
long long n_coeff(int n, int i, int j, NConvention convention = NConvention::Paper);
/// N_{i,j} = N⁽ⁱ⁺²ʲ⁾_{i,j}.
long long n_coeff(int i, int j, NConvention convention = NConvention::Paper);

struct ProductExpandResult {
    bool holds = false;
    int degree = 0;
    NConvention convention = NConvention::Paper;
    /// Monomials aˣbʸ (x + y <= degree) whose coefficients differ.
    std::vector<std::pair<int, int>> mismatches;
};

/**
 * Expands (Σ Aᵢaⁱ)(Σ Aᵢbⁱ) and Σ_{k,l} (Σ_{i<=l} Aᵢ A_{2l+k−i} N_{k,l−i})(a+b)ᵏ(ab)ˡ
 * monomial by monomial up to total degree `degree` and compares exactly.
 * Missing Aᵢ are zero.
 */
ProductExpandResult product_expand_check(const std::vector<mpq_class>& A, int degree,
                                         NConvention convention = NConvention::Paper);

// ---------------------------------------------------------------- Γ-ratio

/// Coefficient of pᵏqˡrᵐ in Γ(γ)Γ(γ−α−β)/(Γ(γ−α)Γ(γ−β)):
/// Σ_{i<=k, j<=l, μ<=m} C(i+j,i) P_{k−i}(ζ) P_{l−j}(ζ) P_μ(−ζ) P_{i+j+2m−μ}(−ζ) N_{i+j,m−μ}.
/// Throws std::invalid_argument if k + l + 2m > zeta_order.
double gamma_ratio_coeff(int k, int l, int m, int zeta_order, const EvalParams& params = {});
/// The same sum with ready-made Schur values (P[n] for ζ, Pm[n] for −ζ).
double gamma_ratio_coeff(int k, int l, int m, const std::vector<double>& P, const std::vector<double>& Pm);

/// Γ(γ)Γ(γ−α−β)/(Γ(γ−α)Γ(γ−β)) from the Γ evaluator.
cplx gamma_ratio_direct(const ParamSet& ps);
/// Σ_{k+l+2m <= order} coeff · pᵏqˡrᵐ.
cplx gamma_ratio_expansion(const ParamSet& ps, int order, const EvalParams& params = {});

// ---------------------------------------------------------------- Bernoulli

/// Plus: Σ Bₘtᵐ/m! = t eᵗ/(eᵗ−1), so B₁ = +1/2. Minus: t/(eᵗ−1), B₁ = −1/2.
enum class BernoulliConvention { Plus, Minus };

mpq_class bernoulli(int m, BernoulliConvention convention = BernoulliConvention::Plus);

// ---------------------------------------------------------------- verification

/// The relation from the (1,1) entry of C⁰¹ at z with |z| < 1 and |1 − z| < 1:
///   Ḡ₀(k+l+2m, l+m, m; z) + Ḡ₀(k+l+2m, k+m, m; 1−z) + Σ (Ḡ₀·Ḡ₀ + Ḡ₁·G₁) = gamma_ratio_coeff(k, l, m).
VerificationReport verify_thm_mplrel01(int k, int l, int m, cplx z, const EvalParams& params = {},
                                       double tol = 1e-6);

/// Ḡ₀(k+l+2m, l+m, m; 1) against the Schur/N sum. abs_err is the larger
/// deviation of the two sides Ḡ₀(.., l+m, m; 1) and Ḡ₀(.., k+m, m; 1).
VerificationReport verify_ohno_zagier(int k, int l, int m, const EvalParams& params = {}, double tol = 1e-4);

/// Σ_s G₀(k,n,s;z) + Σ_s G₀(k,k−n,s;1−z) + Σ ΣG₁(k',n';z)·ΣG₁(k'',k''−n'';1−z) = ζ(k),
/// k > n > 0, z in (0, 1]. At z = 1 only the first sum remains.
VerificationReport verify_sum_formula(int k, int n, cplx z, const EvalParams& params = {}, double tol = 1e-4);

/// Li_{k+1}(z) + Li_{2,1^{k−1}}(1−z) + Σ_{i=1}^{k} Li_i(z) Li_{1^{k−i+1}}(1−z) = ζ(k+1).
VerificationReport verify_euler_inversion(int k, cplx z, const EvalParams& params = {}, double tol = 1e-6);

/// ζ(k+1,1) = (k+1)/2 ζ(k+2) − ½ Σ_{i=1}^{k−1} ζ(i+1)ζ(k−i+1).
VerificationReport verify_euler_zeta(int k, const EvalParams& params = {}, double tol = 1e-4);

/// ζ(2k) from the MZV oracle against −B_{2k}(2πi)^{2k}/(2(2k)!). The tolerance
/// is the oracle's reported error bound.
VerificationReport verify_zveven(int k, const EvalParams& params = {});

enum class Rel0InftyVariant { Rel1, Rel2 };

/**
 * The relations between z and 1/z for z in (0, 1). Every Li(·;1/z) is
 * continued along Path::canonical_inverse(z), i.e. through the upper half
 * plane, and log(1/z) is real.
 *
 *   Rel1:  Lᵐ/m! − Σ_{i<m} (Li_{m−i}(z) + (−1)^{m−i} Li_{m−i}(1/z)) Lⁱ/i! = (−1)ᵐ B⁻ₘ (2πi)ᵐ/m!
 *   Rel2:  the (m, n) relation whose right side is
 *          Σ C(m₁+n₁, m₁)(−1)^{m₁} P_{m₁+n₁}(ζ) P_{m₂}(ζ) (−πi)^{m₃}/m₃! P_{n₂}(−ζ)
 *
 * n is ignored by Rel1.
 */
VerificationReport verify_rel0infty(Rel0InftyVariant variant, int m, int n, double z,
                                    const EvalParams& params = {}, double tol = 1e-6);

/// The MZV relations obtained as z → 1 from Rel2 with n = 1, 2. N2Odd and
/// N2Even are the re-derived forms; the *Printed variants evaluate the
/// relations exactly as displayed, which do not hold. m >= 2 with the
/// parity of the variant.
enum class Mzv0InftyVariant { N1Odd, N1Even, N2Odd, N2Even, N2OddPrinted, N2EvenPrinted };

VerificationReport verify_mzv0infty(Mzv0InftyVariant variant, int m, const EvalParams& params = {},
                                    double tol = 1e-4);

/**
 * How Φ∞ reaches z when |z| < 1. Principal: built at 2z/|z| and continued
 * radially, which keeps principal branches. LowerHalfPlane: built at
 * 2e^{−iπ/4} and continued through 0.5−0.5i, crossing (0, 1) when Im z > 0.
 * For |z| > 1 both routes evaluate Φ∞ at z directly.
 */
enum class ConnectionRoute { Principal, LowerHalfPlane };

/// ‖Φ_target⁻¹Φ₀ − C‖_max with Φ₀ and Φ₁ from their series at z. Error verdict
/// for non-generic parameters.
VerificationReport verify_connection_full(ConnectionTag tag, const ParamSet& ps, cplx z,
                                          const EvalParams& params = {}, double tol = 1e-6,
                                          ConnectionRoute route = ConnectionRoute::Principal);

/// hypergeom_mpl_series truncated at weight K against the Gauss series.
VerificationReport verify_hypergeom_mpl(const ParamSet& ps, cplx z, int max_weight, const EvalParams& params = {},
                                    double tol = 1e-8);
/// phi01_mpl_series against φ⁽⁰⁾₁.
VerificationReport verify_phi01_mpl(const ParamSet& ps, cplx z, int max_weight,
                                          const EvalParams& params = {}, double tol = 1e-8);

std::string to_string(Rel0InftyVariant v);
std::string to_string(Mzv0InftyVariant v);
std::string to_string(ConnectionRoute r);

}  // namespace mplkz
