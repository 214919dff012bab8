#include "mplkz/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mplkz/parse.hpp"
#include "mplkz/word_algebra.hpp"

namespace mplkz {

namespace {

double segment_distance(cplx a, cplx b, cplx c) {
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(c - a);
    double t = ((c - a) * std::conj(d)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(a + t * d - c);
}

double distance_to_singularities(cplx z) { return std::min(std::abs(z), std::abs(1.0 - z)); }

// Dormand–Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600, 0.0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

void integrate_segment(cplx a, cplx b, std::vector<cplx>& y, const OdeRhs& rhs,
                       const OdeOptions& opt, long& steps) {
    const cplx d = b - a;
    const double len = std::abs(d);
    if (len == 0.0) return;
    const std::size_t n = y.size();
    std::vector<std::vector<cplx>> k(7, std::vector<cplx>(n));
    std::vector<cplx> tmp(n), y5(n);
    double t = 0.0;
    double h = std::min(1.0, opt.step_fraction * distance_to_singularities(a) / len);
    auto eval = [&](double tt, const std::vector<cplx>& yy, std::vector<cplx>& out) {
        rhs(a + tt * d, yy, out);
        for (auto& v : out) v *= d;
    };
    eval(t, y, k[0]);
    while (t < 1.0) {
        if (++steps > opt.max_steps) {
            throw std::runtime_error("continuation: tolerance unachievable within step budget");
        }
        const double cap = opt.step_fraction * distance_to_singularities(a + t * d) / len;
        h = std::min({h, cap, 1.0 - t});
        for (int s = 1; s < 7; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                cplx acc = y[i];
                for (int j = 0; j < s; ++j) acc += h * kA[s][j] * k[j][i];
                tmp[i] = acc;
            }
            eval(t + kC[s] * h, tmp, k[s]);
        }
        // Stage 7 is evaluated at the fifth-order solution (FSAL).
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx hi = y[i];
            cplx lo = y[i];
            for (int j = 0; j < 7; ++j) {
                hi += h * kB5[j] * k[j][i];
                lo += h * kB4[j] * k[j][i];
            }
            y5[i] = hi;
            const double scale = opt.tol * (1.0 + std::max(std::abs(y[i]), std::abs(hi)));
            err = std::max(err, std::abs(hi - lo) / scale);
        }
        if (err <= 1.0) {
            t = (1.0 - t - h < 1e-15) ? 1.0 : t + h;
            y.swap(y5);
            k[0].swap(k[6]);
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
    }
}

struct SuffixSystem {
    std::vector<Word> states;          // ordered by length, states[0] is the empty word
    std::vector<int> parent;           // index of the word without its first letter
    std::vector<Letter> first;         // first letter
    std::map<Word, std::size_t> where;

    explicit SuffixSystem(const std::vector<Word>& words) {
        std::vector<Word> all;
        for (const auto& w : words) {
            for (auto& s : suffix_closure(w)) all.push_back(std::move(s));
        }
        all.emplace_back();
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (const auto& w : all) {
            where[w] = states.size();
            states.push_back(w);
        }
        parent.assign(states.size(), -1);
        first.assign(states.size(), Letter::X);
        for (std::size_t i = 1; i < states.size(); ++i) {
            parent[i] = static_cast<int>(where.at(states[i].substr(1)));
            first[i] = states[i].front();
        }
    }

    OdeRhs rhs() const {
        return [this](cplx z, const std::vector<cplx>& y, std::vector<cplx>& dy) {
            const cplx wx = 1.0 / z;
            const cplx wy = 1.0 / (1.0 - z);
            dy[0] = 0.0;
            for (std::size_t i = 1; i < y.size(); ++i) {
                dy[i] = (first[i] == Letter::X ? wx : wy) * y[static_cast<std::size_t>(parent[i])];
            }
        };
    }
};

std::vector<cplx> continue_system(const SuffixSystem& sys, const Path& path, double tol) {
    if (!path.based_on_interval()) {
        throw std::invalid_argument("continuation: path must start on the interval (0,1)");
    }
    const double z0 = path.start().real();
    EvalParams params;
    params.series_terms = terms_for(z0, 1e-17);
    std::vector<cplx> y(sys.states.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!sys.states[i].in_h1()) {
            throw std::invalid_argument("continuation: word must lie in h1: " + sys.states[i].to_string());
        }
        y[i] = mpl(sys.states[i], z0, params).value;
    }
    OdeOptions opt;
    opt.tol = tol;
    return integrate_path(path, std::move(y), sys.rhs(), opt);
}

}  // namespace

Path::Path(std::vector<cplx> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("path: no points");
    delta_ = distance_to_singularities(points_.front());
    sigma_ = 0.0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        delta_ = std::min({delta_, segment_distance(points_[i - 1], points_[i], 0.0),
                           segment_distance(points_[i - 1], points_[i], 1.0)});
        sigma_ += std::abs(points_[i] - points_[i - 1]);
    }
    if (!(delta_ > 0.0)) throw std::invalid_argument("path passes through a singular point 0 or 1");
}

Path Path::parse(std::string_view text) {
    std::vector<cplx> pts;
    std::size_t pos = 0;
    while (true) {
        std::size_t arrow = text.find("->", pos);
        pts.push_back(parse_complex(text.substr(pos, arrow == std::string_view::npos ? arrow : arrow - pos)));
        if (arrow == std::string_view::npos) break;
        pos = arrow + 2;
    }
    return Path(std::move(pts));
}

Path Path::canonical_inverse(double z) {
    if (!(0.0 < z && z < 1.0)) throw std::invalid_argument("canonical_inverse: z must lie in (0,1)");
    return Path({0.5, cplx(0.0, 1.0), 1.0 / z});
}

bool Path::based_on_interval() const {
    const cplx s = start();
    return s.imag() == 0.0 && s.real() > 0.0 && s.real() < 1.0;
}

Path Path::then(const Path& next) const {
    if (std::abs(end() - next.start()) > 1e-14) throw std::invalid_argument("path: endpoints do not match");
    std::vector<cplx> pts = points_;
    pts.insert(pts.end(), next.points_.begin() + 1, next.points_.end());
    return Path(std::move(pts));
}

Path Path::reversed() const { return Path(std::vector<cplx>(points_.rbegin(), points_.rend())); }

std::string Path::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) s += " -> ";
        s += format_complex(points_[i]);
    }
    return s;
}

BranchState continue_logs(const Path& path) {
    BranchState b{std::log(path.start()), std::log(1.0 - path.start())};
    const auto& pts = path.points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        b.log_z += std::log(pts[i] / pts[i - 1]);
        b.log_one_minus_z += std::log((1.0 - pts[i]) / (1.0 - pts[i - 1]));
    }
    return b;
}

std::vector<cplx> integrate_path(const Path& path, std::vector<cplx> y0, const OdeRhs& rhs,
                                 const OdeOptions& options) {
    long steps = 0;
    const auto& pts = path.points();
    for (std::size_t i = 1; i < pts.size(); ++i) integrate_segment(pts[i - 1], pts[i], y0, rhs, options, steps);
    return y0;
}

Mat2 continue_linear_system(const Path& path, const Mat2& y0, const std::function<Mat2(cplx)>& coeff,
                            const OdeOptions& options) {
    std::vector<cplx> y(y0.a.begin(), y0.a.end());
    auto rhs = [&coeff](cplx z, const std::vector<cplx>& v, std::vector<cplx>& dv) {
        const Mat2 a = coeff(z);
        Mat2 m(v[0], v[1], v[2], v[3]);
        const Mat2 d = a * m;
        std::copy(d.a.begin(), d.a.end(), dv.begin());
    };
    y = integrate_path(path, std::move(y), rhs, options);
    return {y[0], y[1], y[2], y[3]};
}

std::vector<cplx> continue_words(const std::vector<Word>& words, const Path& path, double tol) {
    SuffixSystem sys(words);
    std::vector<cplx> y = continue_system(sys, path, tol);
    std::vector<cplx> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(y[sys.where.at(w)]);
    return out;
}

cplx continue_word(const Word& w, const Path& path, double tol) {
    return continue_words({w}, path, tol).front();
}

cplx continue_extended(const LinComb& a, const Path& path, double tol) {
    // Collect the reg¹ pieces of every term, then integrate once.
    struct Piece {
        LinComb h1;
        std::size_t power;
        Rational coeff;
    };
    std::vector<Piece> pieces;
    std::vector<Word> words;
    for (const auto& [w, c] : a.terms()) {
        const std::size_t n = w.trailing_x();
        const Word u = w.substr(0, w.weight() - n);
        for (std::size_t j = 0; j <= n; ++j) {
            const std::size_t t = n - j;
            LinComb r;
            if (u.empty()) {
                if (t == 0) r = LinComb::unit();
            } else {
                r = reg1_closed_form(u.substr(0, u.weight() - 1), static_cast<unsigned>(t));
            }
            for (const auto& [v, cv] : r.terms()) words.push_back(v);
            pieces.push_back({std::move(r), j, c});
        }
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::vector<cplx> values = words.empty() ? std::vector<cplx>{} : continue_words(words, path, tol);
    auto value_of = [&](const Word& v) {
        return values[static_cast<std::size_t>(std::lower_bound(words.begin(), words.end(), v) - words.begin())];
    };
    const cplx log_z = continue_logs(path).log_z;
    cplx total = 0.0;
    for (const auto& piece : pieces) {
        cplx pw = 1.0;
        for (std::size_t i = 1; i <= piece.power; ++i) pw *= log_z / static_cast<double>(i);
        cplx s = 0.0;
        for (const auto& [v, cv] : piece.h1.terms()) s += cv.get_d() * value_of(v);
        total += piece.coeff.get_d() * pw * s;
    }
    return total;
}

cplx continue_extended(const Word& w, const Path& path, double tol) {
    return continue_extended(LinComb(w), path, tol);
}

cplx continue_anchored(const Word& w, const Path& path, double tol) {
    SuffixSystem sys({w});
    std::vector<cplx> y(sys.states.size(), 0.0);
    y[0] = 1.0;
    OdeOptions opt;
    opt.tol = tol;
    y = integrate_path(path, std::move(y), sys.rhs(), opt);
    return y[sys.where.at(w)];
}

ComposeReport compose_check(const Word& w, const Path& path1, const Path& path2, double tol) {
    const cplx lhs = continue_word(w, path1.then(path2), tol);
    const std::size_t n = w.weight();
    std::vector<Word> suffixes;
    for (std::size_t i = 0; i <= n; ++i) suffixes.push_back(w.substr(i));
    std::vector<cplx> at_mid = continue_words(suffixes, path1, tol);
    cplx rhs = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const Word prefix = w.substr(0, i);
        const cplx anchored = prefix.empty() ? cplx(1.0) : continue_anchored(prefix, path2, tol);
        rhs += anchored * at_mid[i];
    }
    return {lhs, rhs, std::abs(lhs - rhs)};
}

double lappo_bound(const Word& w, const Path& path) {
    const double ratio = path.sigma() / path.delta();
    double b = 1.0;
    for (std::size_t i = 1; i <= w.weight(); ++i) b *= ratio / static_cast<double>(i);
    return b;
}

cplx li_at_inverse_ones(int n, double z) {
    if (!(0.0 < z && z < 1.0)) throw std::invalid_argument("li_at_inverse_ones: z must lie in (0,1)");
    if (n < 0) throw std::invalid_argument("li_at_inverse_ones: n must be >= 0");
    const cplx base = -std::log1p(-z) + std::log(z) + cplx(0.0, std::numbers::pi);
    cplx out = 1.0;
    for (int i = 1; i <= n; ++i) out *= base / static_cast<double>(i);
    return out;
}

}  // namespace mplkz
