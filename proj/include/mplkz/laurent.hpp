#pragma once

// Laurent polynomials in (α, β, p, q) with rational coefficients, and 2×2
// matrices over them. Exponents may be negative.

#include <array>
#include <complex>
#include <map>
#include <string>

#include "mplkz/lincomb.hpp"
#include "mplkz/matrix2.hpp"

namespace mplkz {

enum class Var { Alpha = 0, Beta = 1, P = 2, Q = 3 };

/// Values substituted for (α, β, p, q).
using VarValues = std::array<cplx, 4>;

class Laurent {
public:
    using Exponents = std::array<int, 4>;

    Laurent() = default;
    Laurent(long c) { add({0, 0, 0, 0}, Rational(c)); }  // NOLINT: constants embed
    static Laurent var(Var v, int power = 1);
    static Laurent monomial(const Rational& c, Exponents e);

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Smallest exponent of each variable over all terms (0 when zero).
    Exponents min_exponents() const;
    bool is_polynomial() const;

    void add(const Exponents& e, const Rational& c);
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator-() const;
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent pow(unsigned n) const;

    cplx evaluate(const VarValues& v) const;
    std::string to_string() const;
    bool operator==(const Laurent&) const = default;

private:
    std::map<Exponents, Rational> terms_;
};

struct PolyMatrix {
    std::array<Laurent, 4> e{};

    static PolyMatrix identity();
    Laurent& operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }
    const Laurent& operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const Laurent& c) const;
    Mat2 evaluate(const VarValues& v) const;
    std::string to_string() const;
    bool operator==(const PolyMatrix&) const = default;
};

}  // namespace mplkz
