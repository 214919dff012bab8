#pragma once

/**
 * @file continuation.hpp
 * @brief Multiple polylogarithms continued along piecewise linear paths in
 *        C \ {0, 1}.
 *
 * Li(a·v) satisfies d/dz Li(a·v; z) = ω_a(z) Li(v; z) with ω_x = 1/z and
 * ω_y = 1/(1−z). The suffix closure of a word is therefore a triangular linear
 * system, integrated here with an adaptive Dormand–Prince 5(4) scheme along
 * each segment. The branch reached at the end is the one selected by the path.
 */

#include <functional>
#include <string_view>
#include <vector>

#include "mplkz/lincomb.hpp"
#include "mplkz/matrix2.hpp"
#include "mplkz/series.hpp"

namespace mplkz {

/// Polyline start → vertices. Keeps a positive distance from 0 and 1.
class Path {
public:
    explicit Path(std::vector<cplx> points);

    /// "0.5 -> 0.5+1i -> 2", first point is the start.
    static Path parse(std::string_view text);
    /// The path 0.5 → i → 1/z used for every function evaluated at 1/z.
    static Path canonical_inverse(double z);

    const std::vector<cplx>& points() const { return points_; }
    cplx start() const { return points_.front(); }
    cplx end() const { return points_.back(); }
    /// Distance of the polyline from {0, 1}.
    double delta() const { return delta_; }
    /// Total arclength.
    double sigma() const { return sigma_; }
    /// True when the start lies on the real interval (0, 1).
    bool based_on_interval() const;

    /// This path followed by `next`, which must start where this one ends.
    Path then(const Path& next) const;
    Path reversed() const;

    std::string to_string() const;

private:
    std::vector<cplx> points_;
    double delta_;
    double sigma_;
};

/// Continued values of log z and log(1−z) at the end of a path. Both start on
/// their principal branches.
struct BranchState {
    cplx log_z;
    cplx log_one_minus_z;
};

BranchState continue_logs(const Path& path);

struct OdeOptions {
    double tol = 1e-12;
    long max_steps = 2'000'000;
    /// Steps never exceed this fraction of the distance to {0, 1}.
    double step_fraction = 0.25;
};

/// dy/dz = f(z, y) along the path. Throws std::runtime_error if the step
/// budget is exhausted.
using OdeRhs = std::function<void(cplx z, const std::vector<cplx>& y, std::vector<cplx>& dydz)>;
std::vector<cplx> integrate_path(const Path& path, std::vector<cplx> y0, const OdeRhs& rhs,
                                 const OdeOptions& options = {});

/// dY/dz = A(z)·Y for a 2×2 matrix Y.
Mat2 continue_linear_system(const Path& path, const Mat2& y0, const std::function<Mat2(cplx)>& coeff,
                            const OdeOptions& options = {});

/// Li(w) at the end of a path that starts on (0, 1), for w in h¹.
cplx continue_word(const Word& w, const Path& path, double tol = 1e-12);
/// Several words of h¹ in one integration over the union of suffix closures.
std::vector<cplx> continue_words(const std::vector<Word>& words, const Path& path, double tol = 1e-12);
/// Any word: reg¹ components continued, combined with the continued log z.
cplx continue_extended(const Word& w, const Path& path, double tol = 1e-12);
cplx continue_extended(const LinComb& a, const Path& path, double tol = 1e-12);

/// The iterated integral of w from the start of the path to its end, i.e. the
/// solution anchored at value 1 for the empty word at the start.
cplx continue_anchored(const Word& w, const Path& path, double tol = 1e-12);

struct ComposeReport {
    cplx lhs;
    cplx rhs;
    double abs_err;
};

/// Li(w) over path1·path2 against Σ_{w=uv} Li_{anchored,path2}(u)·Li_{path1}(v).
ComposeReport compose_check(const Word& w, const Path& path1, const Path& path2, double tol = 1e-12);

/// (σ/δ)^{|w|} / |w|!
double lappo_bound(const Word& w, const Path& path);

/// (Li₁(z) + log z + πi)ⁿ / n! for z in (0, 1).
cplx li_at_inverse_ones(int n, double z);

}  // namespace mplkz
