#pragma once

/**
 * @file series.hpp
 * @brief Floating-point evaluation of multiple polylogarithms inside the unit
 *        disk, their log-regularized extension to all words, multiple zeta
 *        values and the fixed (weight, depth, height) sums G_i(k,n,s;z).
 *
 * Li(w;z) for w in h¹ is a power series Σ c_w(m) z^m whose coefficients obey
 *
 *     c_{xw}(m) = c_w(m) / m,     c_{yw}(m) = (1/m) Σ_{j<m} c_w(j),
 *
 * starting from c_1 = δ_0. All coefficients of nonempty words lie in [0, 1],
 * so truncating at m <= N leaves a tail below |z|^{N+1} / (1 - |z|).
 */

#include <complex>
#include <cstddef>
#include <vector>

#include "mplkz/lincomb.hpp"

namespace mplkz {

using cplx = std::complex<double>;

struct EvalParams {
    int series_terms = 256;
    long mzv_terms = 10'000'000;
    double tolerance = 1e-9;
};

/// A value together with a bound on its truncation error (roundoff excluded).
struct ValueWithError {
    cplx value{};
    double error_bound = 0.0;
};

/// Series terms needed so that |z|^{N+1}/(1-|z|) < eps, never fewer than `floor`.
int terms_for(double abs_z, double eps, int floor = 16);

ValueWithError mpl(const MultiIndex& index, cplx z, const EvalParams& params = {});
/// Li(w;z) for a word of h¹ (the empty word gives 1).
ValueWithError mpl(const Word& w, cplx z, const EvalParams& params = {});
/// Linear extension to combinations of words of h¹.
ValueWithError mpl(const LinComb& a, cplx z, const EvalParams& params = {});

/// Li(w x^n; z) = Σ_j Li(reg¹(w x^{n-j}); z) log^j(z) / j!, principal log.
ValueWithError mpl_extended(const Word& w, cplx z, const EvalParams& params = {});
ValueWithError mpl_extended(const LinComb& a, cplx z, const EvalParams& params = {});

/// Truncated nested sum at m₁ <= params.mzv_terms plus the integral tail
/// estimate of the outermost stage. error_bound is the size of that tail plus
/// a bound on the accumulated long double roundoff.
ValueWithError mzv(const MultiIndex& index, const EvalParams& params = {});

/// G_i(k,n,s;z) = Σ_{w ∈ g_i(k,n,s)} Li(w;z). At z = 1 (i = 0 only) the members
/// are evaluated as multiple zeta values.
ValueWithError G(int i, int k, int n, int s, cplx z, const EvalParams& params = {});

/// Number of words in g_i(k,n,s).
double g_count(int i, int k, int n, int s);

/**
 * All G_0(k,n,s;z) and G_1(k,n,s;z) with k <= K in one pass.
 *
 * Runs the nested sums once over m = 1..N, carrying partial sums of every
 * tail composition indexed by (weight, depth, #parts >= 2).
 */
class GTable {
public:
    GTable(cplx z, int max_weight, const EvalParams& params = {});

    int max_weight() const { return max_weight_; }
    cplx at(int i, int k, int n, int s) const;
    /// Truncation error bound of at(i,k,n,s).
    double error_bound(int i, int k, int n, int s) const;
    /// Per-word truncation error bound |z|^{N+1}/(1-|z|).
    double word_tail() const { return word_tail_; }

private:
    std::size_t index(int k, int n, int s) const;

    int max_weight_;
    double word_tail_;
    std::vector<cplx> g0_;
    std::vector<cplx> g1_;
};

/**
 * Li(w;z) for every word of weight <= K (principal log z).
 *
 * Words of h¹ come from the coefficient recursion; words ending in x from the
 * shuffle identity  log z · Li(u xⁿ⁻¹) = n Li(u xⁿ) + Σ_{p<|u|} Li(u^{(p)} xⁿ⁻¹),
 * where u^{(p)} is u with one x inserted before position p.
 */
class LiTable {
public:
    LiTable(cplx z, int max_weight, const EvalParams& params = {});

    int max_weight() const { return max_weight_; }
    cplx at(const Word& w) const;
    /// Words of a given weight are indexed by bits, x = 0, y = 1, first letter most significant.
    cplx at(std::size_t weight, std::size_t bits) const { return values_[weight][bits]; }

private:
    int max_weight_;
    std::vector<std::vector<cplx>> values_;
};

/// Bits of a word as used by LiTable.
std::size_t word_bits(const Word& w);

/**
 * The constant exp(l/p + max|log z|) bounding |Li(w;z)| for all words w and
 * z in the real interval [a, b] ⊂ (0, 1), where p = min(a, 1 - b, 1/2) and l
 * is the length of the shortest admissible path from p to the far end.
 */
double mpl_bound_constant(double a, double b);

}  // namespace mplkz
