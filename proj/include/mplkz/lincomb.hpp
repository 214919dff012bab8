#pragma once

// Formal Q-linear combinations of words. Zero coefficients are never stored.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "mplkz/word.hpp"

namespace mplkz {

using Rational = mpq_class;

class LinComb {
public:
    using Terms = std::map<Word, Rational>;

    LinComb() = default;
    LinComb(const Word& w) { terms_.emplace(w, Rational(1)); }  // NOLINT: words embed as 1·w
    LinComb(const Word& w, const Rational& c) { add(w, c); }

    static LinComb unit() { return LinComb(Word{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Word& w) const;

    void add(const Word& w, const Rational& c);
    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    LinComb& operator*=(const Rational& c);

    /// Concatenation by a letter on the right / left, term by term.
    LinComb append(Letter a) const;
    LinComb prepend(Letter a) const;

    /// Sum of all coefficients.
    Rational coefficient_sum() const;

    bool all_in_h1() const;
    bool all_in_h0() const;

    /// "2*xyy + yxy" style rendering, terms in graded order.
    std::string to_string() const;

    bool operator==(const LinComb&) const = default;

private:
    Terms terms_;
};

inline LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
inline LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
inline LinComb operator*(const Rational& c, LinComb a) { return a *= c; }

}  // namespace mplkz
