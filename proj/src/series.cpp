#include "mplkz/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mplkz/word_algebra.hpp"

namespace mplkz {

namespace {

void require_inside_disk(cplx z, const char* who) {
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error(std::string(who) + ": |z| must be < 1");
    }
}

double tail_bound(double abs_z, int n) {
    return std::pow(abs_z, n + 1) / (1.0 - abs_z);
}

// Coefficients c_w(0..n) of a word of h¹, built from the right.
std::vector<double> coefficients(const Word& w, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[0] = 1.0;
    std::vector<double> next(c.size());
    for (std::size_t i = w.weight(); i-- > 0;) {
        next[0] = 0.0;
        if (w[i] == Letter::X) {
            for (int m = 1; m <= n; ++m) next[m] = c[m] / m;
        } else {
            double run = c[0];
            for (int m = 1; m <= n; ++m) {
                next[m] = run / m;
                run += c[m];
            }
        }
        c.swap(next);
    }
    return c;
}

cplx sum_series(const std::vector<double>& c, cplx z) {
    cplx acc = c[0];
    cplx zm = 1.0;
    for (std::size_t m = 1; m < c.size(); ++m) {
        zm *= z;
        acc += c[m] * zm;
    }
    return acc;
}

double binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    double b = 1.0;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return std::round(b);
}

}  // namespace

int terms_for(double abs_z, double eps, int floor) {
    if (abs_z <= 0.0) return floor;
    if (abs_z >= 1.0) throw std::domain_error("terms_for: |z| must be < 1");
    double n = std::log(eps * (1.0 - abs_z)) / std::log(abs_z);
    return std::max(floor, static_cast<int>(std::ceil(n)));
}

ValueWithError mpl(const Word& w, cplx z, const EvalParams& params) {
    if (!w.in_h1()) throw std::invalid_argument("mpl: word must lie in h1: " + w.to_string());
    if (w.empty()) return {1.0, 0.0};
    require_inside_disk(z, "mpl");
    const int n = params.series_terms;
    return {sum_series(coefficients(w, n), z), tail_bound(std::abs(z), n)};
}

ValueWithError mpl(const MultiIndex& index, cplx z, const EvalParams& params) {
    return mpl(index.to_word(), z, params);
}

ValueWithError mpl(const LinComb& a, cplx z, const EvalParams& params) {
    ValueWithError out;
    for (const auto& [w, c] : a.terms()) {
        ValueWithError v = mpl(w, z, params);
        double cd = c.get_d();
        out.value += cd * v.value;
        out.error_bound += std::abs(cd) * v.error_bound;
    }
    return out;
}

ValueWithError mpl_extended(const Word& w, cplx z, const EvalParams& params) {
    const std::size_t n = w.trailing_x();
    if (n == 0) return mpl(w, z, params);
    if (z == cplx(0.0)) throw std::domain_error("mpl_extended: log z undefined at z = 0");
    require_inside_disk(z, "mpl_extended");
    const cplx log_z = std::log(z);
    const Word u = w.substr(0, w.weight() - n);
    ValueWithError out;
    cplx power = 1.0;  // log^j z / j!
    for (std::size_t j = 0; j <= n; ++j) {
        if (j > 0) power *= log_z / static_cast<double>(j);
        const std::size_t t = n - j;
        LinComb r;
        if (u.empty()) {
            if (t == 0) r = LinComb::unit();
        } else {
            r = reg1_closed_form(u.substr(0, u.weight() - 1), static_cast<unsigned>(t));
        }
        ValueWithError v = mpl(r, z, params);
        out.value += v.value * power;
        out.error_bound += v.error_bound * std::abs(power);
    }
    return out;
}

ValueWithError mpl_extended(const LinComb& a, cplx z, const EvalParams& params) {
    ValueWithError out;
    for (const auto& [w, c] : a.terms()) {
        ValueWithError v = mpl_extended(w, z, params);
        double cd = c.get_d();
        out.value += cd * v.value;
        out.error_bound += std::abs(cd) * v.error_bound;
    }
    return out;
}

ValueWithError mzv(const MultiIndex& index, const EvalParams& params) {
    if (!index.admissible()) {
        throw std::domain_error("mzv: index must be admissible (k1 >= 2): " + index.to_string());
    }
    const auto& k = index.parts();
    const std::size_t r = k.size();
    const int kmax = *std::max_element(k.begin(), k.end());
    // s[j] = Σ over m_j > ... > m_r > 0 with m_j <= current m; s[r] = 1.
    std::vector<long double> s(r + 1, 0.0L);
    s[r] = 1.0L;
    std::vector<long double> inv_pow(static_cast<std::size_t>(kmax) + 1);
    const long limit = params.mzv_terms;
    for (long m = 1; m <= limit; ++m) {
        const long double inv = 1.0L / static_cast<long double>(m);
        inv_pow[0] = 1.0L;
        for (int e = 1; e <= kmax; ++e) inv_pow[e] = inv_pow[e - 1] * inv;
        for (std::size_t j = 0; j < r; ++j) s[j] += inv_pow[k[j]] * s[j + 1];
    }
    // Tail Σ_{m > M} m^{-k1} s_1(m). While k_2 = ... = k_{c+1} = 1 the inner sum
    // grows like s_1(M) + s_2(M) log(m/M) + s_3(M) log²(m/M)/2 + ..., and
    // ∫_M^∞ t^{-k1} logʲ(t/M)/j! dt = M^{1-k1}/(k1-1)^{j+1}.
    const double k1 = k[0];
    const double M = static_cast<double>(limit) + 0.5;
    double tail = 0.0;
    double factor = std::pow(M, 1.0 - k1) / (k1 - 1.0);
    for (std::size_t j = 1; j <= r; ++j) {
        tail += static_cast<double>(s[j]) * factor;
        if (j == r || k[j] != 1) break;
        factor /= k1 - 1.0;
    }
    // Each of the r·M accumulations of nonnegative terms adds at most one ulp of s[0].
    const double roundoff = static_cast<double>(limit) * static_cast<double>(r) *
                            static_cast<double>(std::numeric_limits<long double>::epsilon()) *
                            static_cast<double>(s[0]);
    return {static_cast<double>(s[0]) + tail, std::abs(tail) + roundoff};
}

double g_count(int i, int k, int n, int s) {
    if (k <= 0 || n <= 0 || s <= 0 || s > n || n > k) return 0.0;
    const int extra = k - n;
    if (i == 0) return binomial(n - 1, s - 1) * binomial(extra - 1, s - 1);
    return binomial(n - 1, s - 1) * binomial(extra, s - 1);
}

ValueWithError G(int i, int k, int n, int s, cplx z, const EvalParams& params) {
    if (i != 0 && i != 1) throw std::invalid_argument("G: i must be 0 or 1");
    LinComb words = enumerate_g(i, k, n, s);
    if (z == cplx(1.0)) {
        if (i != 0) throw std::domain_error("G: z = 1 requires i = 0");
        ValueWithError out;
        for (const auto& [w, c] : words.terms()) {
            ValueWithError v = mzv(MultiIndex::from_word(w), params);
            out.value += c.get_d() * v.value;
            out.error_bound += v.error_bound;
        }
        return out;
    }
    require_inside_disk(z, "G");
    return mpl(words, z, params);
}

GTable::GTable(cplx z, int max_weight, const EvalParams& params) : max_weight_(max_weight) {
    require_inside_disk(z, "GTable");
    if (max_weight < 1) throw std::invalid_argument("GTable: max_weight must be >= 1");
    const int K = max_weight;
    const int N = params.series_terms;
    word_tail_ = tail_bound(std::abs(z), N);
    const std::size_t dim = static_cast<std::size_t>(K + 1);
    g0_.assign(dim * dim * dim, 0.0);
    g1_.assign(dim * dim * dim, 0.0);

    // b[w][d][h]: sums over tails (k_2..k_n) with weight w, d parts, h parts >= 2,
    // all indices < current m.
    auto bi = [dim](int w, int d, int h) {
        return (static_cast<std::size_t>(w) * dim + static_cast<std::size_t>(d)) * dim +
               static_cast<std::size_t>(h);
    };
    std::vector<double> b(dim * dim * dim, 0.0);
    b[bi(0, 0, 0)] = 1.0;
    std::vector<double> next(b.size());
    std::vector<double> inv_pow(dim);
    std::vector<double> r0(b.size());
    std::vector<double> r1(b.size());
    cplx zm = 1.0;
    for (int m = 1; m <= N; ++m) {
        zm *= z;
        const double inv = 1.0 / m;
        inv_pow[0] = 1.0;
        for (int e = 1; e <= K; ++e) inv_pow[e] = inv_pow[e - 1] * inv;

        std::fill(r0.begin(), r0.end(), 0.0);
        std::fill(r1.begin(), r1.end(), 0.0);
        for (int k = 1; k <= K; ++k) {
            for (int n = 1; n <= k; ++n) {
                for (int s = 1; s <= n; ++s) {
                    double acc0 = 0.0;
                    double acc1 = 0.0;
                    for (int k1 = 1; k1 <= k - (n - 1); ++k1) {
                        double t = inv_pow[k1] * b[bi(k - k1, n - 1, s - 1)];
                        acc1 += t;
                        if (k1 >= 2) acc0 += t;
                    }
                    r0[index(k, n, s)] = acc0;
                    r1[index(k, n, s)] = acc1;
                }
            }
        }
        for (std::size_t j = 0; j < r0.size(); ++j) {
            if (r0[j] != 0.0) g0_[j] += zm * r0[j];
            if (r1[j] != 0.0) g1_[j] += zm * r1[j];
        }

        // Admit index m into the tails.
        next = b;
        for (int w = 1; w < K; ++w) {
            for (int d = 1; d <= w; ++d) {
                for (int h = 0; h <= d; ++h) {
                    double acc = 0.0;
                    for (int kk = 1; kk <= w - (d - 1); ++kk) {
                        int hh = h - (kk >= 2 ? 1 : 0);
                        if (hh < 0) continue;
                        acc += inv_pow[kk] * b[bi(w - kk, d - 1, hh)];
                    }
                    next[bi(w, d, h)] += acc;
                }
            }
        }
        b.swap(next);
    }
}

std::size_t GTable::index(int k, int n, int s) const {
    const std::size_t dim = static_cast<std::size_t>(max_weight_ + 1);
    return (static_cast<std::size_t>(k) * dim + static_cast<std::size_t>(n)) * dim +
           static_cast<std::size_t>(s);
}

cplx GTable::at(int i, int k, int n, int s) const {
    if (k < 1 || n < 1 || s < 1 || n > k || s > n) return 0.0;
    if (k > max_weight_) throw std::out_of_range("GTable: weight beyond table");
    return i == 0 ? g0_[index(k, n, s)] : g1_[index(k, n, s)];
}

double GTable::error_bound(int i, int k, int n, int s) const {
    return g_count(i, k, n, s) * word_tail_;
}

std::size_t word_bits(const Word& w) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < w.weight(); ++i) {
        bits = (bits << 1) | (w[i] == Letter::Y ? 1u : 0u);
    }
    return bits;
}

LiTable::LiTable(cplx z, int max_weight, const EvalParams& params) : max_weight_(max_weight) {
    require_inside_disk(z, "LiTable");
    if (max_weight < 0 || max_weight > 24) throw std::invalid_argument("LiTable: weight out of range");
    if (z == cplx(0.0)) throw std::domain_error("LiTable: log z undefined at z = 0");
    const int K = max_weight;
    const int N = params.series_terms;
    const std::size_t len = static_cast<std::size_t>(N) + 1;
    values_.resize(static_cast<std::size_t>(K) + 1);
    for (int L = 0; L <= K; ++L) values_[L].assign(std::size_t{1} << L, 0.0);
    values_[0][0] = 1.0;

    // Depth-first over h¹ words, prepending letters; stack[L] holds coefficients.
    std::vector<std::vector<double>> stack(static_cast<std::size_t>(K) + 1, std::vector<double>(len));
    stack[0][0] = 1.0;
    struct Frame {
        int length;
        std::size_t bits;
        int next_letter;
    };
    std::vector<Frame> frames;
    frames.push_back({0, 0, 1});  // only y may follow the empty word
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.length == K || f.next_letter > 1) {
            frames.pop_back();
            continue;
        }
        const int letter = f.next_letter++;
        const int L = f.length + 1;
        const auto& c = stack[f.length];
        auto& out = stack[L];
        out[0] = 0.0;
        if (letter == 0) {
            for (std::size_t m = 1; m < len; ++m) out[m] = c[m] / static_cast<double>(m);
        } else {
            double run = c[0];
            for (std::size_t m = 1; m < len; ++m) {
                out[m] = run / static_cast<double>(m);
                run += c[m];
            }
        }
        const std::size_t bits = (static_cast<std::size_t>(letter) << f.length) | f.bits;
        values_[L][bits] = sum_series(out, z);
        frames.push_back({L, bits, 0});
    }

    // Words ending in x, by weight and then by number of trailing x's.
    const cplx log_z = std::log(z);
    for (int L = 1; L <= K; ++L) {
        const std::size_t count = std::size_t{1} << L;
        for (int n = 1; n <= L; ++n) {
            for (std::size_t bits = 0; bits < count; ++bits) {
                // Exactly n trailing x's: low n bits zero, bit n set (or n == L).
                const std::size_t low = (std::size_t{1} << n) - 1;
                if ((bits & low) != 0) continue;
                if (n < L && ((bits >> n) & 1u) == 0) continue;
                const int ulen = L - n;
                const std::size_t ubits = bits >> n;
                // Li(u x^{n-1}) at weight L-1.
                cplx acc = log_z * values_[L - 1][bits >> 1];
                for (int p = 0; p < ulen; ++p) {
                    // Insert x before letter p of u (counted from the left).
                    const int right = ulen - p;  // letters of u to the right of the insertion
                    const std::size_t hi = ubits >> right;
                    const std::size_t lo = ubits & ((std::size_t{1} << right) - 1);
                    const std::size_t ins = ((hi << (right + 1)) | lo) << (n - 1);
                    acc -= values_[L][ins];
                }
                values_[L][bits] = acc / static_cast<double>(n);
            }
        }
    }
}

cplx LiTable::at(const Word& w) const {
    if (static_cast<int>(w.weight()) > max_weight_) throw std::out_of_range("LiTable: weight beyond table");
    return values_[w.weight()][word_bits(w)];
}

double mpl_bound_constant(double a, double b) {
    if (!(0.0 < a && a <= b && b < 1.0)) throw std::invalid_argument("mpl_bound_constant: need 0 < a <= b < 1");
    const double p = std::min({a, 1.0 - b, 0.5});
    // Base point at distance p from {0,1}: the path runs along the real axis.
    const double base = a <= 0.5 ? std::max(p, a) : std::min(1.0 - p, b);
    const double l = std::max(std::abs(a - base), std::abs(b - base));
    const double log_max = std::max(std::abs(std::log(a)), std::abs(std::log(b)));
    return std::exp(l / p + log_max);
}

}  // namespace mplkz
