#include "mplkz/lincomb.hpp"

namespace mplkz {

Rational LinComb::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

LinComb& LinComb::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

LinComb LinComb::append(Letter a) const {
    LinComb out;
    for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w.append(a), c);
    return out;
}

LinComb LinComb::prepend(Letter a) const {
    LinComb out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.prepend(a), c);
    return out;
}

Rational LinComb::coefficient_sum() const {
    Rational s(0);
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

bool LinComb::all_in_h1() const {
    for (const auto& [w, c] : terms_) {
        if (!w.in_h1()) return false;
    }
    return true;
}

bool LinComb::all_in_h0() const {
    for (const auto& [w, c] : terms_) {
        if (!w.in_h0()) return false;
    }
    return true;
}

std::string LinComb::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) s += mag.get_str() + "*";
        s += w.to_string();
    }
    return s;
}

}  // namespace mplkz
