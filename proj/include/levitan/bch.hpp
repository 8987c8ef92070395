#pragma once

#include <vector>

#include "levitan/liealg.hpp"
#include "levitan/rational.hpp"

namespace levitan {

inline Rational factorial(unsigned k) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

// Bernoulli numbers with the B_1 = +1/2 convention, i.e. the Taylor
// coefficients of x/(1 - e^{-x}).
inline std::vector<Rational> bernoulli_plus(unsigned count) {
    // Recurrence for B^-_m (B_1 = -1/2): sum_{j=0}^{m} C(m+1, j) B_j = 0,
    // then flip the odd entries (only m = 1 is nonzero among them).
    std::vector<Rational> b(count);
    for (unsigned m = 0; m < count; ++m) {
        if (m == 0) {
            b[0] = Rational(1);
            continue;
        }
        Rational s;
        for (unsigned j = 0; j < m; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
            s += Rational(binom) * b[j];
        }
        b[m] = -s / Rational(mpz_class(m + 1));
    }
    for (unsigned m = 1; m < count; m += 2) b[m] = -b[m];
    return b;
}

template <class S>
GradedElem<S> ad_apply(const GradedLieAlgebra& g, const GradedElem<S>& x, const GradedElem<S>& v) {
    return elem_bracket(g, x, v);
}

namespace detail {

template <class S>
struct FSeriesWorker {
    const GradedLieAlgebra& g;
    const GradedElem<S>& y;
    const GradedElem<S>& z;
    GradedElem<S> acc;

    // Extend the operator word on the left by a pair ad(Y)^r ad(Z)^s; each
    // state is one term of the series with its own (n, sum r_i, prod r_i!s_i!).
    void extend(const GradedElem<S>& v, unsigned n, unsigned sum_r, const Rational& fact,
                unsigned total) {
        const unsigned budget = g.length() - 1;
        for (unsigned rs = 1; total + rs <= budget; ++rs) {
            for (unsigned r = 0; r <= rs; ++r) {
                const unsigned s = rs - r;
                GradedElem<S> w = v;
                for (unsigned k = 0; k < s && !elem_is_zero(w); ++k) w = elem_bracket(g, z, w);
                for (unsigned k = 0; k < r && !elem_is_zero(w); ++k) w = elem_bracket(g, y, w);
                if (elem_is_zero(w)) continue;
                const unsigned n1 = n + 1;
                Rational fact1 = fact * factorial(r) * factorial(s);
                Rational coeff = Rational(n1 % 2 ? -1 : 1, static_cast<long>(n1) + 1) /
                                 (Rational(static_cast<long>(sum_r + r) + 1) * fact1);
                elem_add(acc, elem_scaled(w, GaussianRational(coeff)));
                extend(w, n1, sum_r + r, fact1, total + rs);
            }
        }
    }
};

}  // namespace detail

// The correction series f(Y, Z) with exp(Y) exp(Z) = exp(Y + Z + f(Y, Z)):
// f(Y,Z) = sum_{n>=1} (-1)^n/(n+1) sum_{r_i+s_i>0}
//          ad(Y)^{r_1} ad(Z)^{s_1} ... ad(Y)^{r_n} ad(Z)^{s_n} (Y)
//          / ((1 + sum r_i) prod r_i! s_i!),
// finite here by nilpotency.
template <class S>
GradedElem<S> bch_f_series(const GradedLieAlgebra& g, const GradedElem<S>& y, const GradedElem<S>& z) {
    detail::FSeriesWorker<S> w{g, y, z, zero_elem<S>(g)};
    if (g.length() >= 2) w.extend(y, 0, 0, Rational(1), 0);
    return std::move(w.acc);
}

template <class S>
GradedElem<S> bch(const GradedLieAlgebra& g, const GradedElem<S>& y, const GradedElem<S>& z) {
    GradedElem<S> out = y;
    elem_add(out, z);
    elem_add(out, bch_f_series(g, y, z));
    return out;
}

// g(Z, Y) = d/dt|_0 exp^{-1}(exp(Y) exp(tZ)): the differential-of-exp
// correction, computed from its closed form ad(Y)/(1 - e^{-ad Y}) applied to
// Z (Bernoulli series, B_1 = +1/2), independently of the display form of the
// linear-in-Z part of the BCH series.
template <class S>
GradedElem<S> bch_linear_part(const GradedLieAlgebra& g, const GradedElem<S>& z, const GradedElem<S>& y) {
    std::vector<Rational> bern = bernoulli_plus(g.length() + 1);
    GradedElem<S> out = zero_elem<S>(g);
    GradedElem<S> v = z;
    Rational mfact(1);
    for (unsigned m = 0; m <= g.length(); ++m) {
        if (m > 0) {
            v = elem_bracket(g, y, v);
            mfact *= Rational(static_cast<long>(m));
        }
        if (elem_is_zero(v)) break;
        if (!bern[m].is_zero()) elem_add(out, elem_scaled(v, GaussianRational(bern[m] / mfact)));
    }
    return out;
}

// Ad(exp(x)) v = e^{ad x} v, finite by nilpotency / grading bound.
template <class S>
GradedElem<S> ad_exp(const GradedLieAlgebra& g, const GradedElem<S>& x, GradedElem<S> v) {
    GradedElem<S> out = v;
    Rational kfact(1);
    for (unsigned k = 1; k <= 2 * g.length() + 1; ++k) {
        v = elem_bracket(g, x, v);
        if (elem_is_zero(v)) break;
        kfact *= Rational(static_cast<long>(k));
        elem_add(out, elem_scaled(v, GaussianRational(Rational(1) / kfact)));
    }
    return out;
}

}  // namespace levitan
