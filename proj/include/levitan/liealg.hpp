#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "levitan/freelie.hpp"
#include "levitan/linalg.hpp"
#include "levitan/rational.hpp"
#include "levitan/words.hpp"

namespace levitan {

// A negatively graded Lie algebra over the Gaussian rationals, given by
// structure constants on a fixed basis of each complexified component
// g_{-depth}, depth = 1..l. Conjugation sigma (antilinear, sigma(v) = S_d
// conj(v)) tracks the real form; the optional complex structure I lives on
// depth 1. Immutable after construction.
class GradedLieAlgebra {
public:
    struct Data {
        unsigned n = 0;  // CR dimension, 0 when the algebra carries no CR structure
        unsigned l = 0;
        std::vector<std::vector<std::string>> labels;          // [depth-1]
        std::vector<std::vector<std::vector<Vec>>> brackets;   // [a-1][b-1][ia*dim_b+ib]
        std::vector<Matrix> sigma;                             // [depth-1]
        std::optional<Matrix> complex_structure;               // on depth 1
    };

    GradedLieAlgebra() = default;
    explicit GradedLieAlgebra(Data d) : d_(std::move(d)) {
        if (d_.l == 0 || d_.labels.size() != d_.l)
            throw std::invalid_argument("GradedLieAlgebra: bad label table");
        if (d_.sigma.size() != d_.l)
            throw std::invalid_argument("GradedLieAlgebra: bad sigma table");
    }

    unsigned cr_dim() const { return d_.n; }
    unsigned length() const { return d_.l; }
    std::size_t dim(unsigned depth) const { return d_.labels[depth - 1].size(); }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (unsigned dd = 1; dd <= d_.l; ++dd) s += dim(dd);
        return s;
    }
    std::vector<std::size_t> depth_dims() const {
        std::vector<std::size_t> out;
        for (unsigned dd = 1; dd <= d_.l; ++dd) out.push_back(dim(dd));
        return out;
    }
    const std::vector<std::string>& labels(unsigned depth) const { return d_.labels[depth - 1]; }

    bool has_complex_structure() const { return d_.complex_structure.has_value(); }
    const Matrix& complex_structure() const {
        if (!has_complex_structure()) throw std::logic_error("algebra has no complex structure");
        return *d_.complex_structure;
    }

    const Matrix& sigma_matrix(unsigned depth) const { return d_.sigma[depth - 1]; }
    Vec sigma_apply(unsigned depth, const Vec& v) const {
        return d_.sigma[depth - 1].apply(conj_vec(v));
    }

    // [e_{ia} in g_{-a}, e_{ib} in g_{-b}]; valid for a + b <= l.
    const Vec& bracket_basis(unsigned a, std::size_t ia, unsigned b, std::size_t ib) const {
        return d_.brackets[a - 1][b - 1][ia * dim(b) + ib];
    }

    Vec bracket_vec(unsigned a, const Vec& x, unsigned b, const Vec& y) const {
        if (a + b > d_.l) return Vec();
        Vec out(dim(a + b));
        for (std::size_t ia = 0; ia < x.size(); ++ia) {
            if (x[ia].is_zero()) continue;
            for (std::size_t ib = 0; ib < y.size(); ++ib) {
                if (y[ib].is_zero()) continue;
                add_scaled(out, x[ia] * y[ib], bracket_basis(a, ia, b, ib));
            }
        }
        return out;
    }

    const Data& data() const { return d_; }

private:
    Data d_;
};

// ---------------------------------------------------------------------------
// Elements of m (x) C with generic scalar entries (exact scalars or
// polynomials). Scalar S needs: default = 0, +=, S*S, S*GaussianRational,
// is_zero().

template <class S>
using GradedElem = std::vector<std::vector<S>>;

template <class S>
GradedElem<S> zero_elem(const GradedLieAlgebra& g) {
    GradedElem<S> e(g.length());
    for (unsigned d = 1; d <= g.length(); ++d) e[d - 1].assign(g.dim(d), S());
    return e;
}

inline GradedElem<GaussianRational> basis_elem(const GradedLieAlgebra& g, unsigned depth,
                                               std::size_t i) {
    auto e = zero_elem<GaussianRational>(g);
    e[depth - 1][i] = GaussianRational(1);
    return e;
}

template <class S>
bool elem_is_zero(const GradedElem<S>& x) {
    for (const auto& c : x)
        for (const auto& s : c)
            if (!s.is_zero()) return false;
    return true;
}

template <class S>
void elem_add(GradedElem<S>& dst, const GradedElem<S>& src) {
    for (std::size_t d = 0; d < dst.size(); ++d)
        for (std::size_t i = 0; i < dst[d].size(); ++i) dst[d][i] += src[d][i];
}

template <class S>
GradedElem<S> elem_scaled(GradedElem<S> x, const GaussianRational& c) {
    for (auto& comp : x)
        for (auto& s : comp) s = s * c;
    return x;
}

template <class S>
GradedElem<S> elem_bracket(const GradedLieAlgebra& g, const GradedElem<S>& x, const GradedElem<S>& y) {
    GradedElem<S> out = zero_elem<S>(g);
    for (unsigned a = 1; a <= g.length(); ++a) {
        if (x[a - 1].empty()) continue;
        for (unsigned b = 1; a + b <= g.length(); ++b) {
            for (std::size_t ia = 0; ia < x[a - 1].size(); ++ia) {
                if (x[a - 1][ia].is_zero()) continue;
                for (std::size_t ib = 0; ib < y[b - 1].size(); ++ib) {
                    if (y[b - 1][ib].is_zero()) continue;
                    S prod = x[a - 1][ia] * y[b - 1][ib];
                    if (prod.is_zero()) continue;
                    const Vec& c = g.bracket_basis(a, ia, b, ib);
                    for (std::size_t k = 0; k < c.size(); ++k)
                        if (!c[k].is_zero()) out[a + b - 1][k] += prod * c[k];
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Free nilpotent Lie algebra on an ordered alphabet, Lyndon word basis,
// structure constants by rewriting bracket trees into the Lyndon basis.

namespace detail {

inline AssocPoly swap_letters(const AssocPoly& p) {
    AssocPoly out;
    for (const auto& [w, c] : p) {
        Word sw = w;
        for (Letter& le : sw) le.antiholomorphic = !le.antiholomorphic;
        out[sw] = c;
    }
    return out;
}

}  // namespace detail

inline GradedLieAlgebra free_nilpotent_alphabet(const std::vector<Letter>& alphabet, unsigned l,
                                                unsigned cr_n) {
    if (alphabet.empty() || l < 1) throw std::invalid_argument("free_nilpotent: bad arguments");
    std::vector<std::vector<Word>> basis(l);
    for (Word& w : enumerate_lyndon_alphabet(alphabet, l)) basis[w.size() - 1].push_back(std::move(w));
    std::vector<std::map<Word, std::size_t>> index(l);
    for (unsigned d = 0; d < l; ++d)
        for (std::size_t i = 0; i < basis[d].size(); ++i) index[d][basis[d][i]] = i;

    LyndonExpansionCache cache;
    GradedLieAlgebra::Data data;
    data.n = cr_n;
    data.l = l;
    data.labels.resize(l);
    for (unsigned d = 0; d < l; ++d)
        for (const Word& w : basis[d]) data.labels[d].push_back(word_str(w));

    data.brackets.assign(l, std::vector<std::vector<Vec>>(l));
    for (unsigned a = 1; a <= l; ++a)
        for (unsigned b = 1; a + b <= l; ++b) {
            const std::size_t da = basis[a - 1].size(), db = basis[b - 1].size();
            auto& table = data.brackets[a - 1][b - 1];
            table.resize(da * db);
            for (std::size_t ia = 0; ia < da; ++ia)
                for (std::size_t ib = 0; ib < db; ++ib) {
                    AssocPoly p =
                        assoc_commutator(cache.expansion(basis[a - 1][ia]), cache.expansion(basis[b - 1][ib]));
                    Vec out(basis[a + b - 1].size());
                    for (const auto& [w, c] : lyndon_decompose(std::move(p), cache))
                        out[index[a + b - 1].at(w)] = c;
                    table[ia * db + ib] = std::move(out);
                }
        }

    // Conjugation: letter swap when the alphabet is a CR alphabet, plain
    // coefficient conjugation otherwise (structure constants are real).
    const bool cr = cr_n > 0;
    for (unsigned d = 1; d <= l; ++d) {
        const std::size_t dimd = basis[d - 1].size();
        Matrix s = Matrix::identity(dimd);
        if (cr) {
            s = Matrix(dimd, dimd);
            for (std::size_t i = 0; i < dimd; ++i) {
                AssocPoly swapped = detail::swap_letters(cache.expansion(basis[d - 1][i]));
                for (const auto& [w, c] : lyndon_decompose(std::move(swapped), cache))
                    s.at(index[d - 1].at(w), i) = c;
            }
        }
        data.sigma.push_back(std::move(s));
    }
    return GradedLieAlgebra(std::move(data));
}

inline GradedLieAlgebra free_nilpotent(unsigned generators, unsigned l) {
    if (generators < 1 || l < 1) throw std::invalid_argument("free_nilpotent: generators >= 1, l >= 1");
    std::vector<Letter> alphabet;
    for (unsigned i = 1; i <= generators; ++i) alphabet.push_back(Letter::z(i));
    return free_nilpotent_alphabet(alphabet, l, 0);
}

// ---------------------------------------------------------------------------
// Universal Levi-Tanaka algebra: the quotient of the free nilpotent algebra
// on z_1..z_n, zbar_1..zbar_n by the ideal generated by [z_i,z_j] and
// [zbar_i,zbar_j]. Built as an explicit ideal quotient; the admissible-word
// basis and its count serve as cross-checks of the construction.
inline GradedLieAlgebra universal_levi_tanaka(unsigned n, unsigned l) {
    if (n < 1 || l < 2) throw std::invalid_argument("universal_levi_tanaka: n >= 1, l >= 2");
    GradedLieAlgebra f = free_nilpotent_alphabet(cr_alphabet(n), l, n);

    std::vector<std::vector<Word>> basis(l);
    for (Word& w : enumerate_lyndon_alphabet(cr_alphabet(n), l)) basis[w.size() - 1].push_back(std::move(w));
    std::vector<std::map<Word, std::size_t>> index(l);
    for (unsigned d = 0; d < l; ++d)
        for (std::size_t i = 0; i < basis[d].size(); ++i) index[d][basis[d][i]] = i;

    // Ideal, spanned depth by depth: relators in depth 2, then brackets of
    // lower ideal pieces with free basis elements.
    std::vector<Subspace> ideal(l + 1);  // by depth, [0] and [1] unused
    {
        std::vector<Vec> relators;
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = i + 1; j <= n; ++j) {
                relators.push_back(unit_vec(f.dim(2), index[1].at(Word{Letter::z(i), Letter::z(j)})));
                relators.push_back(unit_vec(f.dim(2), index[1].at(Word{Letter::zbar(i), Letter::zbar(j)})));
            }
        ideal[2] = Subspace::span(relators, f.dim(2));
    }
    for (unsigned c = 3; c <= l; ++c) {
        std::vector<Vec> gens;
        for (unsigned a = 1; a + 2 <= c; ++a) {
            const unsigned b = c - a;
            for (std::size_t ia = 0; ia < f.dim(a); ++ia)
                for (std::size_t r = 0; r < ideal[b].dim(); ++r)
                    gens.push_back(f.bracket_vec(a, unit_vec(f.dim(a), ia), b, ideal[b].basis().row(r)));
        }
        ideal[c] = Subspace::span(gens, f.dim(c));
    }

    // Quotient basis: the admissible Lyndon words. Verified to be a genuine
    // complement of the ideal in every depth.
    std::vector<std::vector<std::size_t>> adm(l);  // free-basis indices of quotient basis
    for (unsigned d = 1; d <= l; ++d) {
        for (std::size_t i = 0; i < basis[d - 1].size(); ++i)
            if (d == 1 || is_admissible(basis[d - 1][i])) adm[d - 1].push_back(i);
        const std::size_t expect = d == 1 ? 2 * n : count_admissible(n, d);
        if (adm[d - 1].size() != expect)
            throw std::logic_error("universal_levi_tanaka: admissible word count mismatch");
        const std::size_t idim = d >= 2 ? ideal[d].dim() : 0;
        if (adm[d - 1].size() + idim != f.dim(d))
            throw std::logic_error("universal_levi_tanaka: ideal codimension mismatch");
    }

    // Projection matrices P_d: free coordinates -> admissible coordinates
    // modulo the ideal, via inversion of [admissible columns | ideal columns].
    std::vector<Matrix> proj(l + 1);
    for (unsigned d = 1; d <= l; ++d) {
        const std::size_t fd = f.dim(d);
        const std::size_t ad = adm[d - 1].size();
        Matrix c(fd, fd + fd);
        for (std::size_t k = 0; k < ad; ++k) c.at(adm[d - 1][k], k) = GaussianRational(1);
        if (d >= 2)
            for (std::size_t r = 0; r < ideal[d].dim(); ++r)
                for (std::size_t j = 0; j < fd; ++j) c.at(j, ad + r) = ideal[d].basis().at(r, j);
        for (std::size_t j = 0; j < fd; ++j) c.at(j, fd + j) = GaussianRational(1);
        RrefResult rr = rref(c);
        if (rr.pivots.size() != fd)
            throw std::logic_error("universal_levi_tanaka: basis change not invertible");
        Matrix p(ad, fd);
        for (std::size_t i = 0; i < ad; ++i)
            for (std::size_t j = 0; j < fd; ++j) p.at(i, j) = rr.m.at(i, fd + j);
        proj[d] = std::move(p);
    }

    GradedLieAlgebra::Data data;
    data.n = n;
    data.l = l;
    data.labels.resize(l);
    for (unsigned d = 1; d <= l; ++d)
        for (std::size_t k : adm[d - 1]) data.labels[d - 1].push_back(word_str(basis[d - 1][k]));

    data.brackets.assign(l, std::vector<std::vector<Vec>>(l));
    for (unsigned a = 1; a <= l; ++a)
        for (unsigned b = 1; a + b <= l; ++b) {
            const std::size_t da = adm[a - 1].size(), db = adm[b - 1].size();
            auto& table = data.brackets[a - 1][b - 1];
            table.resize(da * db);
            for (std::size_t ia = 0; ia < da; ++ia)
                for (std::size_t ib = 0; ib < db; ++ib)
                    table[ia * db + ib] =
                        proj[a + b].apply(f.bracket_basis(a, adm[a - 1][ia], b, adm[b - 1][ib]));
        }

    for (unsigned d = 1; d <= l; ++d) {
        const std::size_t ad = adm[d - 1].size();
        Matrix s(ad, ad);
        for (std::size_t k = 0; k < ad; ++k) {
            Vec img = proj[d].apply(f.sigma_matrix(d).apply(unit_vec(f.dim(d), adm[d - 1][k])));
            for (std::size_t i = 0; i < ad; ++i) s.at(i, k) = img[i];
        }
        data.sigma.push_back(std::move(s));
    }

    Matrix ii(2 * n, 2 * n);
    for (unsigned i = 0; i < n; ++i) ii.at(i, i) = GaussianRational::i();
    for (unsigned i = n; i < 2 * n; ++i) ii.at(i, i) = -GaussianRational::i();
    data.complex_structure = std::move(ii);
    return GradedLieAlgebra(std::move(data));
}

// ---------------------------------------------------------------------------
// Quotient by a sigma-invariant proper subspace of the lowest component
// (such a subspace is automatically an ideal).
inline GradedLieAlgebra quotient_by_subspace(const GradedLieAlgebra& g, const Subspace& s) {
    const unsigned l = g.length();
    if (s.ambient_dim() != g.dim(l))
        throw std::invalid_argument("quotient_by_subspace: subspace ambient mismatch");
    if (s.dim() >= g.dim(l)) throw std::invalid_argument("length would drop");
    for (std::size_t r = 0; r < s.dim(); ++r)
        if (!s.contains(g.sigma_apply(l, s.basis().row(r))))
            throw std::invalid_argument("subspace not real");
    if (s.dim() == 0) return g;

    std::vector<std::size_t> kept;  // non-pivot columns: coset representatives
    {
        std::vector<bool> is_pivot(g.dim(l), false);
        for (std::size_t c : s.pivots()) is_pivot[c] = true;
        for (std::size_t c = 0; c < g.dim(l); ++c)
            if (!is_pivot[c]) kept.push_back(c);
    }
    auto project = [&](const Vec& v) {
        Vec red = s.reduce(v);
        Vec out(kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) out[k] = red[kept[k]];
        return out;
    };
    auto lift = [&](const Vec& v) {
        Vec out(g.dim(l));
        for (std::size_t k = 0; k < kept.size(); ++k) out[kept[k]] = v[k];
        return out;
    };

    GradedLieAlgebra::Data data;
    data.n = g.cr_dim();
    data.l = l;
    data.labels.resize(l);
    for (unsigned d = 1; d < l; ++d) data.labels[d - 1] = g.labels(d);
    for (std::size_t k : kept) data.labels[l - 1].push_back(g.labels(l)[k]);

    data.brackets.assign(l, std::vector<std::vector<Vec>>(l));
    for (unsigned a = 1; a <= l; ++a)
        for (unsigned b = 1; a + b <= l; ++b) {
            const std::size_t da = g.dim(a), db = g.dim(b);
            auto& table = data.brackets[a - 1][b - 1];
            table.resize(da * db);
            for (std::size_t ia = 0; ia < da; ++ia)
                for (std::size_t ib = 0; ib < db; ++ib) {
                    const Vec& v = g.bracket_basis(a, ia, b, ib);
                    table[ia * db + ib] = (a + b == l) ? project(v) : v;
                }
        }

    for (unsigned d = 1; d < l; ++d) data.sigma.push_back(g.sigma_matrix(d));
    {
        Matrix sl(kept.size(), kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) {
            Vec img = project(g.sigma_apply(l, lift(unit_vec(kept.size(), k))));
            for (std::size_t i = 0; i < kept.size(); ++i) sl.at(i, k) = img[i];
        }
        data.sigma.push_back(std::move(sl));
    }
    if (g.has_complex_structure()) data.complex_structure = g.complex_structure();
    return GradedLieAlgebra(std::move(data));
}

// ---------------------------------------------------------------------------
// Predicates and invariant checks.

inline bool levi_nondegenerate(const GradedLieAlgebra& g) {
    const std::size_t d1 = g.dim(1);
    if (d1 == 0) return false;
    const std::size_t d2 = g.length() >= 2 ? g.dim(2) : 0;
    Matrix m(d1 * d2, d1);
    for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t i = 0; i < d1; ++i) {
            if (d2 == 0) continue;
            const Vec& br = g.bracket_basis(1, i, 1, j);
            for (std::size_t k = 0; k < d2; ++k) m.at(j * d2 + k, i) = br[k];
        }
    return null_space(m).dim() == 0;
}

inline bool is_fundamental(const GradedLieAlgebra& g) {
    for (unsigned d = 2; d <= g.length(); ++d) {
        std::vector<Vec> images;
        for (std::size_t i = 0; i < g.dim(1); ++i)
            for (std::size_t j = 0; j < g.dim(d - 1); ++j)
                images.push_back(g.bracket_basis(1, i, d - 1, j));
        if (Subspace::span(images, g.dim(d)).dim() != g.dim(d)) return false;
    }
    return true;
}

inline std::vector<unsigned> bloom_graham_type(const GradedLieAlgebra& g) {
    std::vector<unsigned> type;
    for (unsigned d = 2; d <= g.length(); ++d)
        for (std::size_t i = 0; i < g.dim(d); ++i) type.push_back(d);
    return type;
}

inline bool check_thm2_condition(const GradedLieAlgebra& g, unsigned K) {
    if (K < 2 || K > g.length()) throw std::invalid_argument("check_thm2_condition: 2 <= K <= l");
    if (g.cr_dim() == 0) throw std::invalid_argument("check_thm2_condition: algebra has no CR dimension");
    if (g.length() + 2 > 2 * K) return false;
    for (unsigned d = 2; d <= K; ++d)
        if (g.dim(d) != count_admissible(g.cr_dim(), d)) return false;
    return true;
}

inline bool antisymmetry_holds(const GradedLieAlgebra& g) {
    for (unsigned a = 1; a <= g.length(); ++a)
        for (unsigned b = 1; a + b <= g.length(); ++b)
            for (std::size_t ia = 0; ia < g.dim(a); ++ia)
                for (std::size_t ib = 0; ib < g.dim(b); ++ib) {
                    Vec sum = g.bracket_basis(a, ia, b, ib);
                    add_scaled(sum, GaussianRational(1), g.bracket_basis(b, ib, a, ia));
                    if (!is_zero_vec(sum)) return false;
                }
    return true;
}

inline bool jacobi_holds(const GradedLieAlgebra& g) {
    for (unsigned a = 1; a <= g.length(); ++a)
        for (unsigned b = a; a + b <= g.length(); ++b)
            for (unsigned c = b; a + b + c <= g.length(); ++c)
                for (std::size_t ia = 0; ia < g.dim(a); ++ia)
                    for (std::size_t ib = 0; ib < g.dim(b); ++ib)
                        for (std::size_t ic = 0; ic < g.dim(c); ++ic) {
                            Vec x = unit_vec(g.dim(a), ia);
                            Vec y = unit_vec(g.dim(b), ib);
                            Vec z = unit_vec(g.dim(c), ic);
                            Vec s = g.bracket_vec(a, x, b + c, g.bracket_vec(b, y, c, z));
                            add_scaled(s, GaussianRational(1),
                                       g.bracket_vec(b, y, c + a, g.bracket_vec(c, z, a, x)));
                            add_scaled(s, GaussianRational(1),
                                       g.bracket_vec(c, z, a + b, g.bracket_vec(a, x, b, y)));
                            if (!is_zero_vec(s)) return false;
                        }
    return true;
}

inline bool sigma_compatible(const GradedLieAlgebra& g) {
    for (unsigned d = 1; d <= g.length(); ++d) {
        const Matrix& s = g.sigma_matrix(d);
        if (s * s.conjugate() != Matrix::identity(g.dim(d))) return false;  // involution
    }
    for (unsigned a = 1; a <= g.length(); ++a)
        for (unsigned b = 1; a + b <= g.length(); ++b)
            for (std::size_t ia = 0; ia < g.dim(a); ++ia)
                for (std::size_t ib = 0; ib < g.dim(b); ++ib) {
                    Vec lhs = g.sigma_apply(a + b, g.bracket_basis(a, ia, b, ib));
                    Vec rhs = g.bracket_vec(a, g.sigma_apply(a, unit_vec(g.dim(a), ia)), b,
                                            g.sigma_apply(b, unit_vec(g.dim(b), ib)));
                    add_scaled(lhs, GaussianRational(-1), rhs);
                    if (!is_zero_vec(lhs)) return false;
                }
    return true;
}

// Contract guard shared by prolongation and surface generation.
inline void require_cr_nondegenerate(const GradedLieAlgebra& m) {
    if (!m.has_complex_structure()) throw std::invalid_argument("algebra has no complex structure");
    if (!is_fundamental(m)) throw std::invalid_argument("g-1 does not generate");
    if (!levi_nondegenerate(m)) throw std::invalid_argument("algebra is Levi degenerate");
}

inline bool complex_structure_compatible(const GradedLieAlgebra& g) {
    if (!g.has_complex_structure()) return false;
    const Matrix& ii = g.complex_structure();
    const std::size_t d1 = g.dim(1);
    Matrix minus_id = GaussianRational(-1) * Matrix::identity(d1);
    if (ii * ii != minus_id) return false;
    // sigma swaps the +-i eigenspaces <=> sigma and I commute as real maps.
    if (g.sigma_matrix(1) * ii.conjugate() != ii * g.sigma_matrix(1)) return false;
    if (g.length() >= 2) {
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) {
                Vec lhs = g.bracket_vec(1, ii.apply(unit_vec(d1, i)), 1, ii.apply(unit_vec(d1, j)));
                add_scaled(lhs, GaussianRational(-1), g.bracket_basis(1, i, 1, j));
                if (!is_zero_vec(lhs)) return false;
            }
    }
    return true;
}

}  // namespace levitan
