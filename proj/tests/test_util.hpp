#pragma once

#include <cstdint>

#include "levitan/linalg.hpp"

namespace levitan::testutil {

// Deterministic generator for property-style tests.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Rational rand_rational(SplitMix64& rng, long max_abs = 5, long max_den = 4) {
    return Rational(rng.range(-max_abs, max_abs), rng.range(1, max_den));
}

inline GaussianRational rand_gaussian(SplitMix64& rng) {
    return GaussianRational(rand_rational(rng), rand_rational(rng));
}

inline Vec rand_vec(SplitMix64& rng, std::size_t n, long max_abs = 3) {
    Vec v(n);
    for (auto& x : v)
        x = GaussianRational(Rational(rng.range(-max_abs, max_abs)), Rational(rng.range(-max_abs, max_abs)));
    return v;
}

inline Matrix rand_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long max_abs = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) =
                GaussianRational(Rational(rng.range(-max_abs, max_abs)), Rational(rng.range(-max_abs, max_abs)));
    return m;
}

}  // namespace levitan::testutil
