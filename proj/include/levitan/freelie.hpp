#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "levitan/rational.hpp"
#include "levitan/words.hpp"

namespace levitan {

// Homogeneous element of the free associative algebra: word -> coefficient.
// std::map keeps words in lex order, so begin() is the smallest word; within
// a fixed length lex order is the graded-lex order we rewrite against.
using AssocPoly = std::map<Word, GaussianRational>;

inline void assoc_add(AssocPoly& dst, const GaussianRational& c, const AssocPoly& src) {
    if (c.is_zero()) return;
    for (const auto& [w, x] : src) {
        auto it = dst.find(w);
        if (it == dst.end()) {
            dst.emplace(w, c * x);
        } else {
            it->second += c * x;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

inline AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            auto it = out.find(w);
            if (it == out.end()) {
                out.emplace(std::move(w), cu * cv);
            } else {
                it->second += cu * cv;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

inline AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out = assoc_mul(a, b);
    assoc_add(out, GaussianRational(-1), assoc_mul(b, a));
    return out;
}

// Expansion of a bracket tree in the free associative algebra.
inline AssocPoly expand_tree(const BracketTree& t) {
    if (t.is_leaf()) return AssocPoly{{Word{t.letter()}, GaussianRational(1)}};
    return assoc_commutator(expand_tree(t.left()), expand_tree(t.right()));
}

// Memoized expansions of Lyndon basis elements B(w).
class LyndonExpansionCache {
public:
    const AssocPoly& expansion(const Word& w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(w, expand_tree(bracketing(w))).first->second;
    }

private:
    std::map<Word, AssocPoly> cache_;
};

// Rewrite a Lie element (given by its associative expansion) into Lyndon
// basis coordinates. Relies on triangularity: B(w) = w + strictly larger
// anagrams, so repeatedly peeling the smallest word terminates. A non-Lie
// input surfaces as a smallest word that is not Lyndon.
inline std::map<Word, GaussianRational> lyndon_decompose(AssocPoly p, LyndonExpansionCache& cache) {
    std::map<Word, GaussianRational> out;
    while (!p.empty()) {
        const Word w = p.begin()->first;
        const GaussianRational c = p.begin()->second;
        if (!is_lyndon(w))
            throw std::logic_error("lyndon_decompose: leading word not Lyndon (element not in the free Lie algebra)");
        out[w] = c;
        assoc_add(p, -c, cache.expansion(w));
    }
    return out;
}

}  // namespace levitan
