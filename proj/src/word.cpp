#include "mplkz/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace mplkz {

Word::Word(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
        if (c != 'x' && c != 'y') {
            throw std::invalid_argument("word letters must be 'x' or 'y': " + letters_);
        }
    }
}

Word Word::parse(std::string_view text) {
    if (text == "1") return Word{};
    if (text.empty()) throw std::invalid_argument("empty word literal; use \"1\"");
    return Word(text);
}

std::size_t Word::depth() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'y'));
}

std::size_t Word::height() const {
    std::size_t yx = 0;
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
        if (letters_[i] == 'y' && letters_[i + 1] == 'x') ++yx;
    }
    return yx + 1;
}

Word Word::prepend(Letter a) const {
    Word w;
    w.letters_.reserve(letters_.size() + 1);
    w.letters_.push_back(static_cast<char>(a));
    w.letters_ += letters_;
    return w;
}

Word Word::append(Letter a) const {
    Word w = *this;
    w.letters_.push_back(static_cast<char>(a));
    return w;
}

Word Word::reversed() const {
    Word w = *this;
    std::reverse(w.letters_.begin(), w.letters_.end());
    return w;
}

std::size_t Word::trailing_x() const {
    std::size_t n = 0;
    for (auto it = letters_.rbegin(); it != letters_.rend() && *it == 'x'; ++it) ++n;
    return n;
}

std::size_t Word::leading_y() const {
    std::size_t n = 0;
    for (auto it = letters_.begin(); it != letters_.end() && *it == 'y'; ++it) ++n;
    return n;
}

std::vector<Word> suffix_closure(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.weight() + 1);
    for (std::size_t len = 0; len <= w.weight(); ++len) {
        out.push_back(w.substr(w.weight() - len));
    }
    return out;
}

std::vector<Word> all_words(std::size_t weight) {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << weight);
    for (std::size_t bits = 0; bits < (std::size_t{1} << weight); ++bits) {
        std::string s(weight, 'x');
        for (std::size_t i = 0; i < weight; ++i) {
            if (bits & (std::size_t{1} << (weight - 1 - i))) s[i] = 'y';
        }
        out.emplace_back(s);
    }
    return out;
}

MultiIndex::MultiIndex(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("multi-index must have depth >= 1");
    for (int k : parts_) {
        if (k < 1) throw std::invalid_argument("multi-index entries must be >= 1");
    }
}

MultiIndex MultiIndex::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int k = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
            throw std::invalid_argument("bad multi-index literal: " + std::string(text));
        }
        parts.push_back(k);
        pos = comma + 1;
    }
    return MultiIndex(std::move(parts));
}

MultiIndex MultiIndex::from_word(const Word& w) {
    if (w.empty() || !w.in_h1()) {
        throw std::invalid_argument("word is not a nonempty element of h1: " + w.to_string());
    }
    std::vector<int> parts;
    int run = 1;
    for (char c : w.str()) {
        if (c == 'x') {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    return MultiIndex(std::move(parts));
}

int MultiIndex::weight() const {
    int s = 0;
    for (int k : parts_) s += k;
    return s;
}

int MultiIndex::height() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int k) { return k >= 2; }));
}

Word MultiIndex::to_word() const {
    std::string s;
    for (int k : parts_) {
        s.append(static_cast<std::size_t>(k - 1), 'x');
        s.push_back('y');
    }
    return Word(s);
}

std::string MultiIndex::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

MultiIndex index_with_ones(int lead, int ones) {
    std::vector<int> parts{lead};
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return MultiIndex(std::move(parts));
}

}  // namespace mplkz
