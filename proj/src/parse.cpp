#include "mplkz/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace mplkz {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("bad complex literal: '" + std::string(whole) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad complex literal: '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
    s.pop_back();
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? std::string() : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    double im;
    if (im_part.empty() || im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_part, text);
    }
    const double re = re_part.empty() ? 0.0 : parse_real(re_part, text);
    return {re, im};
}

std::string format_complex(std::complex<double> z) {
    auto fmt = [](double v) {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, ptr);
    };
    if (z.imag() == 0.0) return fmt(z.real());
    std::string im = fmt(z.imag()) + "i";
    if (z.real() == 0.0) return im;
    return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + im;
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
    std::vector<std::complex<double>> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        out.push_back(parse_complex(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace mplkz
