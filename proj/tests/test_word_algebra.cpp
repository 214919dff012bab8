#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mplkz/word_algebra.hpp"

using namespace mplkz;

namespace {

LinComb lc(std::initializer_list<std::pair<const char*, long>> terms) {
    LinComb out;
    for (const auto& [w, c] : terms) out.add(Word::parse(w), Rational(c));
    return out;
}

// Shuffle by listing every placement of u's letters among |u|+|v| slots.
LinComb shuffle_oracle(const Word& u, const Word& v) {
    const std::size_t n = u.weight() + v.weight();
    LinComb out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.weight()) continue;
        std::string s;
        std::size_t iu = 0, iv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s += (mask >> i) & 1u ? u.str()[iu++] : v.str()[iv++];
        }
        out.add(Word(s), Rational(1));
    }
    return out;
}

std::vector<Word> words_upto(std::size_t w) {
    std::vector<Word> out;
    for (std::size_t k = 0; k <= w; ++k) {
        for (const auto& x : all_words(k)) out.push_back(x);
    }
    return out;
}

// Solves M c = b exactly by Gauss-Jordan elimination; M is square and invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> M, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("singular basis");
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            const Rational f = M[r][col] / M[col][col];
            for (std::size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= M[i][i];
    return b;
}

// A basis element of a weight slice: `core` shuffled with x^{⧢m} ⧢ y^{⧢n}.
struct BasisElem {
    Word core;
    unsigned m, n;
};

// The reg map read off an exact solve over an arbitrary (non-triangular) basis:
// the constant-term component of w.
LinComb reg_dense(const Word& w, const std::vector<BasisElem>& basis) {
    const auto slice = all_words(w.weight());
    std::map<Word, std::size_t> row;
    for (std::size_t i = 0; i < slice.size(); ++i) row[slice[i]] = i;
    REQUIRE(basis.size() == slice.size());
    std::vector<std::vector<Rational>> M(slice.size(), std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        LinComb e = shuffle(shuffle(LinComb(basis[j].core), shuffle_power(LinComb(Word("x")), basis[j].m)),
                            shuffle_power(LinComb(Word("y")), basis[j].n));
        for (const auto& [v, c] : e.terms()) M[row.at(v)][j] = c;
    }
    std::vector<Rational> b(slice.size(), Rational(0));
    b[row.at(w)] = 1;
    const auto c = solve(M, b);
    LinComb out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].m == 0 && basis[j].n == 0) out.add(basis[j].core, c[j]);
    }
    return out;
}

std::vector<BasisElem> basis_h1(std::size_t weight) {
    std::vector<BasisElem> out;
    for (unsigned m = 0; m <= weight; ++m) {
        for (const auto& v : all_words(weight - m)) {
            if (v.in_h1()) out.push_back({v, m, 0});
        }
    }
    return out;
}

std::vector<BasisElem> basis_h0(std::size_t weight) {
    std::vector<BasisElem> out;
    for (unsigned m = 0; m <= weight; ++m) {
        for (unsigned n = 0; m + n <= weight; ++n) {
            for (const auto& v : all_words(weight - m - n)) {
                if (v.in_h0()) out.push_back({v, m, n});
            }
        }
    }
    return out;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("words and multi-indices") {
    CHECK(Word::parse("1").empty());
    CHECK(Word("xxyxy").depth() == 2);
    CHECK(Word("xxyxy").height() == 2);
    CHECK(Word("xyy").height() == 1);
    CHECK(MultiIndex({3, 1}).to_word() == Word("xxyy"));
    CHECK(MultiIndex::from_word(Word("xyxxy")) == MultiIndex({2, 3}));
    CHECK(MultiIndex::parse("2,1,1").weight() == 4);
    CHECK(MultiIndex({2, 3, 1}).height() == 2);
    CHECK_THROWS_AS(MultiIndex::from_word(Word("yx")), std::invalid_argument);
    CHECK_THROWS(Word::parse("xz"));
    CHECK_THROWS(MultiIndex::parse("2,,1"));
    CHECK(index_with_ones(2, 2) == MultiIndex({2, 1, 1}));
    CHECK(all_words(3).size() == 8);
}

TEST_CASE("suffix closure") {
    CHECK(suffix_closure(Word("xy")) == std::vector<Word>{Word(), Word("y"), Word("xy")});
    CHECK(suffix_closure(Word("y")) == std::vector<Word>{Word(), Word("y")});
    CHECK(suffix_closure(Word("xxy")) == std::vector<Word>{Word(), Word("y"), Word("xy"), Word("xxy")});
}

TEST_CASE("shuffle examples") {
    const Word w("xyx");
    CHECK(shuffle(Word(), w) == LinComb(w));
    CHECK(shuffle(w, Word()) == LinComb(w));
    CHECK(shuffle(Word("x"), Word("y")) == lc({{"xy", 1}, {"yx", 1}}));
    CHECK(shuffle(Word("xy"), Word("y")) == lc({{"xyy", 2}, {"yxy", 1}}));
    CHECK(shuffle_power(LinComb(Word("x")), 3) == lc({{"xxx", 6}}));
    CHECK(shuffle_power(LinComb(Word("xy")), 0) == LinComb::unit());
}

TEST_CASE("shuffle agrees with interleaving enumeration, weight <= 8") {
    const auto ws = words_upto(4);
    for (const auto& u : ws) {
        for (const auto& v : ws) CHECK(shuffle(u, v) == shuffle_oracle(u, v));
    }
}

TEST_CASE("shuffle is commutative and associative up to total weight 9") {
    // Pairs are exhaustive; triples are exhaustive up to weight 7 and take
    // w = a single letter above that.
    const auto ws = words_upto(9);
    for (const auto& u : ws) {
        for (const auto& v : ws) {
            if (u.weight() + v.weight() > 9) continue;
            const LinComb uv = shuffle(u, v);
            REQUIRE(uv == shuffle(v, u));
            for (const auto& w : ws) {
                const std::size_t total = u.weight() + v.weight() + w.weight();
                if (total > 9 || (total > 7 && w.weight() != 1)) continue;
                REQUIRE(shuffle(uv, LinComb(w)) == shuffle(LinComb(u), shuffle(v, w)));
            }
        }
    }
}

TEST_CASE("shuffle coefficient mass is a binomial coefficient") {
    const auto ws = words_upto(6);
    for (const auto& u : ws) {
        for (const auto& v : ws) {
            if (u.weight() + v.weight() > 6) continue;
            const int a = static_cast<int>(u.weight()), b = static_cast<int>(v.weight());
            CHECK(shuffle(u, v).coefficient_sum() == Rational(binom(a + b, a)));
        }
    }
}

TEST_CASE("reg1 examples") {
    CHECK(reg1(Word("y")) == lc({{"y", 1}}));
    CHECK(reg1(Word("yx")) == lc({{"xy", -1}}));
    CHECK(reg1(Word("x")).is_zero());
    CHECK(reg1(Word()) == LinComb::unit());
}

TEST_CASE("reg0 examples") {
    CHECK(reg0(Word("xy")) == lc({{"xy", 1}}));
    CHECK(reg0(Word("y")).is_zero());
    CHECK(reg0(Word("yx")) == lc({{"xy", -1}}));
}

TEST_CASE("reg1 and reg0 agree with a dense exact solve, weight <= 5") {
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto b1 = basis_h1(k);
        const auto b0 = basis_h0(k);
        for (const auto& w : all_words(k)) {
            CHECK_MESSAGE(reg1(w) == reg_dense(w, b1), w.str());
            CHECK_MESSAGE(reg0(w) == reg_dense(w, b0), w.str());
        }
    }
}

TEST_CASE("reg1 reconstruction w x^n = sum_j reg1(w x^(n-j)) sh x^j") {
    for (std::size_t k = 0; k <= 4; ++k) {
        for (const auto& w : all_words(k)) {
            if (!w.in_h1()) continue;
            for (std::size_t n = 0; n <= 4; ++n) {
                LinComb sum;
                for (std::size_t j = 0; j <= n; ++j) {
                    sum += shuffle(reg1(w.concat(Word::x_power(n - j))), LinComb(Word::x_power(j)));
                }
                CHECK(sum == LinComb(w.concat(Word::x_power(n))));
            }
        }
    }
}

TEST_CASE("reg1 closed form on w y x^n") {
    for (std::size_t k = 0; k <= 5; ++k) {
        for (const auto& w : all_words(k)) {
            for (unsigned n = 0; n <= 3; ++n) {
                const Word full = w.append(Letter::Y).concat(Word::x_power(n));
                CHECK(reg1_closed_form(w, n) == reg1(full));
            }
        }
    }
}

TEST_CASE("decompose_h1 reassembles its input") {
    for (const auto& w : all_words(5)) {
        const auto parts = decompose_h1(LinComb(w));
        LinComb sum;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            CHECK(parts[j].all_in_h1());
            sum += shuffle(parts[j], shuffle_power(LinComb(Word("x")), static_cast<unsigned>(j)));
        }
        CHECK(sum == LinComb(w));
    }
}

TEST_CASE("antipode") {
    CHECK(antipode(Word("xy")) == lc({{"yx", 1}}));
    CHECK(antipode(Word("x")) == lc({{"x", -1}}));
    CHECK(antipode(Word("xyy")) == lc({{"yyx", -1}}));
    for (const auto& u : words_upto(3)) {
        CHECK(antipode(antipode(LinComb(u))) == LinComb(u));
        for (const auto& v : words_upto(3)) {
            CHECK(antipode(shuffle(u, v)) == shuffle(antipode(u), antipode(v)));
        }
    }
}

TEST_CASE("enumerate_g examples") {
    CHECK(enumerate_g(0, 3, 1, 1) == lc({{"xxy", 1}}));
    CHECK(enumerate_g(0, 4, 2, 1) == lc({{"xxyy", 1}}));
    CHECK(enumerate_g(0, 2, 2, 1).is_zero());
    CHECK(enumerate_g(0, 0, 0, 0).is_zero());
    CHECK(enumerate_g(1, 3, 1, -1).is_zero());
}

TEST_CASE("enumerate_g matches compositions, weight <= 10") {
    // Height of (k1..kn) is 1 + #{i >= 2 : ki >= 2}; g0 keeps k1 >= 2, g1 keeps all.
    for (int k = 1; k <= 10; ++k) {
        std::map<std::pair<int, int>, LinComb> g0, g1;
        for (unsigned cuts = 0; cuts < (1u << (k - 1)); ++cuts) {
            std::vector<int> parts{1};
            for (int i = 0; i < k - 1; ++i) {
                if ((cuts >> i) & 1u) parts.push_back(1);
                else ++parts.back();
            }
            const int n = static_cast<int>(parts.size());
            const int s = 1 + static_cast<int>(std::count_if(parts.begin() + 1, parts.end(), [](int p) { return p >= 2; }));
            const Word w = MultiIndex(parts).to_word();
            if (parts.front() >= 2) g0[{n, s}].add(w, Rational(1));
            g1[{n, s}].add(w, Rational(1));
        }
        for (int n = 1; n <= k; ++n) {
            for (int s = 1; s <= n; ++s) {
                CHECK(enumerate_g(0, k, n, s) == g0[{n, s}]);
                CHECK(enumerate_g(1, k, n, s) == g1[{n, s}]);
            }
        }
    }
}
