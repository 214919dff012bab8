#include "mplkz/laurent.hpp"

#include <algorithm>

namespace mplkz {

Laurent Laurent::var(Var v, int power) {
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(v)] = power;
    return monomial(Rational(1), e);
}

Laurent Laurent::monomial(const Rational& c, Exponents e) {
    Laurent out;
    out.add(e, c);
    return out;
}

Laurent::Exponents Laurent::min_exponents() const {
    if (terms_.empty()) return {0, 0, 0, 0};
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < 4; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

bool Laurent::is_polynomial() const {
    const Exponents m = min_exponents();
    return std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
}

void Laurent::add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Laurent::Exponents e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            out.add(e, ca * cb);
        }
    }
    return out;
}

Laurent Laurent::pow(unsigned n) const {
    Laurent out(1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
}

cplx Laurent::evaluate(const VarValues& v) const {
    cplx total = 0.0;
    for (const auto& [e, c] : terms_) {
        cplx t = c.get_d();
        for (std::size_t i = 0; i < 4; ++i) {
            const cplx base = e[i] >= 0 ? v[i] : 1.0 / v[i];
            for (int k = 0; k < std::abs(e[i]); ++k) t *= base;
        }
        total += t;
    }
    return total;
}

std::string Laurent::to_string() const {
    static const char* names[4] = {"a", "b", "p", "q"};
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += mono;
        }
    }
    return s;
}

PolyMatrix PolyMatrix::identity() {
    PolyMatrix m;
    m(0, 0) = Laurent(1);
    m(1, 1) = Laurent(1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    PolyMatrix out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
    }
    return out;
}

PolyMatrix PolyMatrix::scaled(const Laurent& c) const {
    PolyMatrix out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = c * e[i];
    return out;
}

Mat2 PolyMatrix::evaluate(const VarValues& v) const {
    return {e[0].evaluate(v), e[1].evaluate(v), e[2].evaluate(v), e[3].evaluate(v)};
}

std::string PolyMatrix::to_string() const {
    return "[[" + e[0].to_string() + ", " + e[1].to_string() + "], [" + e[2].to_string() + ", " +
           e[3].to_string() + "]]";
}

}  // namespace mplkz
