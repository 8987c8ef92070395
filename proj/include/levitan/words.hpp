#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace levitan {

// Letter of the ordered alphabet z_1 < ... < z_n < zbar_1 < ... < zbar_n.
// The order (holomorphic block first, then by index) is load-bearing: it
// decides which words are Lyndon.
struct Letter {
    bool antiholomorphic = false;
    unsigned index = 1;  // 1-based

    static Letter z(unsigned i) { return Letter{false, i}; }
    static Letter zbar(unsigned i) { return Letter{true, i}; }

    // 0-based code in the 2n-letter alphabet.
    unsigned code(unsigned n) const { return (antiholomorphic ? n : 0u) + index - 1; }
    static Letter from_code(unsigned c, unsigned n) {
        return c < n ? z(c + 1) : zbar(c - n + 1);
    }

    friend auto operator<=>(const Letter&, const Letter&) = default;

    // "z3" holomorphic, "Z3" antiholomorphic (capital = conjugated).
    std::string str() const {
        return (antiholomorphic ? "Z" : "z") + std::to_string(index);
    }
};

using Word = std::vector<Letter>;

inline std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w[i].str();
    }
    return s;
}

inline Word parse_word(const std::string& s) {
    Word w;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ') {
            ++i;
            continue;
        }
        char c = s[i];
        if (c != 'z' && c != 'Z') throw std::invalid_argument("parse_word: bad letter in \"" + s + "\"");
        std::size_t j = i + 1;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        if (j == i + 1) throw std::invalid_argument("parse_word: missing index in \"" + s + "\"");
        unsigned idx = static_cast<unsigned>(std::stoul(s.substr(i + 1, j - i - 1)));
        if (idx == 0) throw std::invalid_argument("parse_word: index must be >= 1");
        w.push_back(c == 'z' ? Letter::z(idx) : Letter::zbar(idx));
        i = j;
    }
    if (w.empty()) throw std::invalid_argument("parse_word: empty word");
    return w;
}

// A word is Lyndon iff it is strictly smaller than each of its proper
// suffixes (equivalent to the rotation characterization; the rotation test
// lives in the test suite as the independent oracle).
inline bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))
            return false;
    return true;
}

// All Lyndon words of length <= max_len over the 2n-letter CR alphabet,
// sorted by (length, lex). Duval's generation.
inline std::vector<Word> enumerate_lyndon_alphabet(const std::vector<Letter>& alphabet,
                                                   unsigned max_len) {
    if (alphabet.empty() || max_len == 0)
        throw std::invalid_argument("enumerate_lyndon: need letters and max_len >= 1");
    const unsigned q = static_cast<unsigned>(alphabet.size());
    std::vector<unsigned> t{0};
    std::vector<Word> out;
    while (!t.empty()) {
        Word w;
        w.reserve(t.size());
        for (unsigned c : t) w.push_back(alphabet[c]);
        out.push_back(std::move(w));
        const std::size_t p = t.size();
        while (t.size() < max_len) t.push_back(t[t.size() % p]);
        while (!t.empty() && t.back() == q - 1) t.pop_back();
        if (!t.empty()) ++t.back();
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline std::vector<Letter> cr_alphabet(unsigned n) {
    std::vector<Letter> a;
    for (unsigned i = 1; i <= n; ++i) a.push_back(Letter::z(i));
    for (unsigned i = 1; i <= n; ++i) a.push_back(Letter::zbar(i));
    return a;
}

inline std::vector<Word> enumerate_lyndon(unsigned n, unsigned max_len) {
    if (n < 1) throw std::invalid_argument("enumerate_lyndon: n >= 1");
    return enumerate_lyndon_alphabet(cr_alphabet(n), max_len);
}

// Basis condition for the universal Levi-Tanaka algebra: single letters, or
// words that begin holomorphic with non-decreasing holomorphic runs and end
// antiholomorphic with non-increasing antiholomorphic runs.
inline bool is_admissible(const Word& w) {
    if (w.empty()) return false;
    if (w.size() == 1) return true;
    if (w.front().antiholomorphic || !w.back().antiholomorphic) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i].antiholomorphic != w[i - 1].antiholomorphic) continue;
        if (!w[i].antiholomorphic && w[i].index < w[i - 1].index) return false;
        if (w[i].antiholomorphic && w[i].index > w[i - 1].index) return false;
    }
    return true;
}

inline std::size_t count_admissible(unsigned n, unsigned length) {
    if (length < 2) throw std::invalid_argument("count_admissible: length >= 2");
    std::size_t cnt = 0;
    for (const Word& w : enumerate_lyndon(n, length))
        if (w.size() == length && is_admissible(w)) ++cnt;
    return cnt;
}

// Bracketing of a Lyndon word via the standard factorization; the in-order
// leaves reconstruct the word.
class BracketTree {
public:
    static BracketTree leaf(Letter l) {
        BracketTree t;
        t.letter_ = l;
        return t;
    }
    static BracketTree pair(BracketTree l, BracketTree r) {
        BracketTree t;
        t.left_ = std::make_shared<BracketTree>(std::move(l));
        t.right_ = std::make_shared<BracketTree>(std::move(r));
        return t;
    }

    bool is_leaf() const { return letter_.has_value(); }
    const Letter& letter() const { return *letter_; }
    const BracketTree& left() const { return *left_; }
    const BracketTree& right() const { return *right_; }

    Word foliage() const {
        Word w;
        collect(w);
        return w;
    }

    std::string str() const {
        if (is_leaf()) return letter_->str();
        return "[" + left().str() + "," + right().str() + "]";
    }

private:
    void collect(Word& w) const {
        if (is_leaf()) {
            w.push_back(*letter_);
        } else {
            left().collect(w);
            right().collect(w);
        }
    }

    std::optional<Letter> letter_;
    std::shared_ptr<const BracketTree> left_, right_;
};

// Standard factorization w = u v with v the longest proper Lyndon suffix.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard_factorization: need length >= 2");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), v};
    }
    throw std::logic_error("standard_factorization: no Lyndon suffix (input not Lyndon?)");
}

inline BracketTree bracketing(const Word& w) {
    if (w.empty()) throw std::invalid_argument("bracketing: empty word");
    if (w.size() == 1) return BracketTree::leaf(w[0]);
    auto [u, v] = standard_factorization(w);
    return BracketTree::pair(bracketing(u), bracketing(v));
}

}  // namespace levitan
