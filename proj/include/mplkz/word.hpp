#pragma once

/**
 * @file word.hpp
 * @brief Words over the alphabet {x, y} and multi-indices of MPLs.
 *
 * A word is stored as a string of 'x'/'y' characters, which makes it hashable
 * and cheap to compare. The empty word is the unit 1 of the shuffle algebra.
 *
 *   x^{k1-1} y x^{k2-1} y ... x^{kr-1} y   <->   (k1, ..., kr)
 */

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mplkz {

enum class Letter : char { X = 'x', Y = 'y' };

class Word {
public:
    Word() = default;
    explicit Word(std::string_view letters);

    static Word letter(Letter a) { return Word(std::string(1, static_cast<char>(a))); }
    static Word x_power(std::size_t n) { return Word(std::string(n, 'x')); }
    static Word y_power(std::size_t n) { return Word(std::string(n, 'y')); }

    /// Parses "xxy" or "1" (the empty word).
    static Word parse(std::string_view text);

    std::size_t weight() const { return letters_.size(); }
    std::size_t depth() const;
    /// Number of "yx" factors plus one. Only meaningful for nonempty words.
    std::size_t height() const;

    bool empty() const { return letters_.empty(); }
    bool in_h1() const { return empty() || letters_.back() == 'y'; }
    bool in_h0() const { return empty() || (letters_.front() == 'x' && letters_.back() == 'y'); }

    Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
    Letter front() const { return static_cast<Letter>(letters_.front()); }
    Letter back() const { return static_cast<Letter>(letters_.back()); }

    Word prepend(Letter a) const;
    Word append(Letter a) const;
    Word concat(const Word& other) const { return Word(letters_ + other.letters_); }
    Word reversed() const;
    Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
        return Word(letters_.substr(pos, len));
    }

    /// Number of trailing x letters.
    std::size_t trailing_x() const;
    /// Number of leading y letters.
    std::size_t leading_y() const;

    const std::string& str() const { return letters_; }
    /// "1" for the empty word.
    std::string to_string() const { return empty() ? std::string("1") : letters_; }

    bool operator==(const Word&) const = default;
    /// Graded order: by weight, then lexicographic.
    bool operator<(const Word& o) const {
        return letters_.size() != o.letters_.size() ? letters_.size() < o.letters_.size()
                                                    : letters_ < o.letters_;
    }

private:
    std::string letters_;
};

/// All suffixes of w ordered by increasing length, starting with the empty word.
std::vector<Word> suffix_closure(const Word& w);

/// All words of the given weight, in lexicographic order (x < y).
std::vector<Word> all_words(std::size_t weight);

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> parts);

    /// Parses "3,1".
    static MultiIndex parse(std::string_view text);
    /// Inverse of to_word on words of 𝔥¹; throws std::invalid_argument otherwise.
    static MultiIndex from_word(const Word& w);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t depth() const { return parts_.size(); }
    int weight() const;
    /// #{i : k_i >= 2}; equals the word height for admissible indices.
    int height() const;
    bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

    Word to_word() const;
    std::string to_string() const;

    bool operator==(const MultiIndex&) const = default;
    bool operator<(const MultiIndex& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// The index (k, 1, ..., 1) with `ones` trailing ones.
MultiIndex index_with_ones(int lead, int ones);

}  // namespace mplkz

template <>
struct std::hash<mplkz::Word> {
    std::size_t operator()(const mplkz::Word& w) const noexcept {
        return std::hash<std::string>{}(w.str());
    }
};
