#include "mplkz/word_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace mplkz {

namespace {

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Highest level present in `a` according to `level`, or 0 when empty.
template <typename Level>
std::size_t max_level(const LinComb& a, Level level) {
    std::size_t best = 0;
    for (const auto& [w, c] : a.terms()) best = std::max(best, level(w));
    return best;
}

}  // namespace

LinComb shuffle(const Word& u, const Word& v) {
    const std::size_t m = u.weight();
    const std::size_t n = v.weight();
    // table[i][j] = u[i:] ⧢ v[j:], filled from the back.
    std::vector<std::vector<LinComb>> table(m + 1, std::vector<LinComb>(n + 1));
    for (std::size_t i = 0; i <= m; ++i) table[i][n] = LinComb(u.substr(i));
    for (std::size_t j = 0; j <= n; ++j) table[m][j] = LinComb(v.substr(j));
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = n; j-- > 0;) {
            LinComb acc = table[i + 1][j].prepend(u[i]);
            acc += table[i][j + 1].prepend(v[j]);
            table[i][j] = std::move(acc);
        }
    }
    return table[0][0];
}

LinComb shuffle(const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            LinComb s = shuffle(u, v);
            s *= cu * cv;
            out += s;
        }
    }
    return out;
}

LinComb shuffle_power(const LinComb& a, unsigned n) {
    LinComb out = LinComb::unit();
    for (unsigned i = 0; i < n; ++i) out = shuffle(out, a);
    return out;
}

std::vector<LinComb> decompose_h1(const LinComb& a) {
    LinComb residual = a;
    std::vector<LinComb> parts;
    auto trailing = [](const Word& w) { return w.trailing_x(); };
    for (std::size_t j = max_level(residual, trailing); j > 0; --j) {
        if (parts.size() < j + 1) parts.resize(j + 1);
        // Collect level-j words first: subtracting creates only lower levels.
        std::vector<std::pair<Word, Rational>> level;
        for (const auto& [w, c] : residual.terms()) {
            if (w.trailing_x() == j) level.emplace_back(w, c);
        }
        const Word xj = Word::x_power(j);
        for (const auto& [w, c] : level) {
            Word v = w.substr(0, w.weight() - j);
            // v ⧢ x^j contains v·x^j with coefficient 1.
            LinComb s = shuffle(v, xj);
            s *= c;
            residual -= s;
            parts[j].add(v, c / factorial(static_cast<unsigned>(j)));
        }
    }
    if (parts.empty()) parts.resize(1);
    parts[0] = std::move(residual);
    return parts;
}

LinComb reg1(const LinComb& a) { return decompose_h1(a).front(); }

LinComb reg1(const Word& w) {
    if (w.in_h1()) return LinComb(w);
    return reg1(LinComb(w));
}

LinComb reg0(const LinComb& a) {
    LinComb residual = a;
    auto level_of = [](const Word& w) {
        return w.leading_y() + w.trailing_x();
    };
    for (std::size_t lvl = max_level(residual, level_of); lvl > 0; --lvl) {
        std::vector<std::pair<Word, Rational>> level;
        for (const auto& [w, c] : residual.terms()) {
            if (level_of(w) == lvl) level.emplace_back(w, c);
        }
        for (const auto& [w, c] : level) {
            const std::size_t lead = w.leading_y();
            const std::size_t trail = w.trailing_x();
            Word v = w.substr(lead, w.weight() - lead - trail);
            // v ⧢ x^trail ⧢ y^lead contains y^lead·v·x^trail with coefficient 1.
            LinComb s = shuffle(shuffle(v, Word::x_power(trail)), LinComb(Word::y_power(lead)));
            s *= c;
            residual -= s;
        }
    }
    return residual;
}

LinComb reg0(const Word& w) {
    if (w.in_h0()) return LinComb(w);
    return reg0(LinComb(w));
}

LinComb reg1_closed_form(const Word& w_before_y, unsigned n) {
    LinComb s = shuffle(w_before_y, Word::x_power(n)).append(Letter::Y);
    if (n % 2 == 1) s *= Rational(-1);
    return s;
}

LinComb antipode(const Word& w) {
    return LinComb(w.reversed(), Rational(w.weight() % 2 == 0 ? 1 : -1));
}

LinComb antipode(const LinComb& a) {
    LinComb out;
    for (const auto& [w, c] : a.terms()) {
        out.add(w.reversed(), w.weight() % 2 == 0 ? c : Rational(-c));
    }
    return out;
}

LinComb enumerate_g(int i, int k, int n, int s) {
    if (i != 0 && i != 1) throw std::invalid_argument("enumerate_g: i must be 0 or 1");
    LinComb out;
    if (k <= 0 || n <= 0 || s <= 0 || n < s) return out;
    if (i == 0 && k < n + s) return out;
    if (i == 1 && k < n + s - 1) return out;
    if (n > k) return out;
    // Choose the positions of the n letters y among k slots; the last is forced
    // to be y for membership in h¹ and h⁰.
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) pos[static_cast<std::size_t>(j)] = j;
    while (true) {
        if (pos.back() == k - 1) {
            std::string letters(static_cast<std::size_t>(k), 'x');
            for (int p : pos) letters[static_cast<std::size_t>(p)] = 'y';
            Word w(letters);
            bool member = i == 0 ? w.in_h0() : w.in_h1();
            if (member && static_cast<int>(w.height()) == s) out.add(w, Rational(1));
        }
        int j = n - 1;
        while (j >= 0 && pos[static_cast<std::size_t>(j)] == k - n + j) --j;
        if (j < 0) break;
        ++pos[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < n; ++t) pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

}  // namespace mplkz
