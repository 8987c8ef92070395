#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "levitan/liealg.hpp"
#include "levitan/linalg.hpp"

namespace levitan {

// One component g_i (i >= 0) of the Tanaka prolongation. Each basis element
// is a graded map stored by blocks: blocks[j-1] sends coordinates of g_{-j}
// to coordinates of the space in degree i-j (a component of m for i-j < 0,
// an already computed prolongation component for i-j >= 0). Elements are
// uniquely determined by blocks[0], their g_{-1}^* (x) g_{i-1} part, since m
// is fundamental.
struct ProlongationComponent {
    unsigned degree = 0;
    struct Element {
        std::vector<Matrix> blocks;  // [j-1]: dim(space(i-j)) x dim(g_{-j}); 0 rows below -l
    };
    std::vector<Element> basis;
    std::size_t dim() const { return basis.size(); }
};

namespace detail {

// Assembles the linear system for one prolongation degree. Unknowns are the
// entries of block 1; deeper blocks are propagated through canonical bracket
// presentations of the basis (first-pivot order), and every derivation
// identity with a g_{-1} argument becomes a constraint row.
struct ProlongSolver {
    const GradedLieAlgebra& m;
    const std::vector<ProlongationComponent>& lower;
    unsigned i;
    std::size_t dim1 = 0;
    std::size_t unknowns = 0;
    std::vector<std::vector<Matrix>> blocks;  // [depth-1][source]: (target_dim x unknowns)

    std::size_t space_dim(int deg) const {
        if (deg < 0)
            return -deg <= static_cast<int>(m.length()) ? m.dim(static_cast<unsigned>(-deg)) : 0;
        return static_cast<std::size_t>(deg) < lower.size() ? lower[static_cast<std::size_t>(deg)].dim()
                                                            : 0;
    }

    // Evaluation of the basis of component p at the basis vector x_{s1} of
    // g_{-1}, as a matrix over the component coordinates.
    Matrix eval_at_depth1(unsigned p, std::size_t s1) const {
        const auto& comp = lower[p];
        Matrix e(space_dim(static_cast<int>(p) - 1), comp.dim());
        for (std::size_t t = 0; t < comp.dim(); ++t)
            for (std::size_t r = 0; r < e.rows(); ++r) e.at(r, t) = comp.basis[t].blocks[0].at(r, s1);
        return e;
    }

    Matrix bracket_matrix_depth1(std::size_t s1, unsigned b) const {
        Matrix br(1 + b <= m.length() ? m.dim(1 + b) : 0, m.dim(b));
        if (1 + b > m.length()) return br;
        for (std::size_t col = 0; col < m.dim(b); ++col) {
            const Vec& v = m.bracket_basis(1, s1, b, col);
            for (std::size_t r = 0; r < br.rows(); ++r) br.at(r, col) = v[r];
        }
        return br;
    }

    void build_block1() {
        blocks.assign(m.length(), {});
        const std::size_t t1 = space_dim(static_cast<int>(i) - 1);
        blocks[0].assign(dim1, Matrix(t1, unknowns));
        for (std::size_t s = 0; s < dim1; ++s)
            for (std::size_t t = 0; t < t1; ++t) blocks[0][s].at(t, t * dim1 + s) = GaussianRational(1);
    }

    // [f(x_{s1}), y_{s2}] with y in g_{-j}, as an unknown-linear vector.
    Matrix term_fx_y(std::size_t s1, unsigned j, std::size_t s2) const {
        const std::size_t rows = space_dim(static_cast<int>(i) - 1 - static_cast<int>(j));
        Matrix out(rows, unknowns);
        if (rows == 0) return out;
        if (i >= 1) {
            const auto& comp = lower[i - 1];
            for (std::size_t t = 0; t < comp.dim(); ++t) {
                const Matrix& bj = comp.basis[t].blocks[j - 1];
                for (std::size_t r = 0; r < rows; ++r)
                    if (!bj.at(r, s2).is_zero()) out.at(r, t * dim1 + s1) += bj.at(r, s2);
            }
        } else {
            // i = 0: f(x) lies in g_{-1}; ordinary brackets, unknown coefficients.
            if (1 + j > m.length()) return out;
            for (std::size_t t = 0; t < dim1; ++t) {
                const Vec& v = m.bracket_basis(1, t, j, s2);
                for (std::size_t r = 0; r < rows; ++r)
                    if (!v[r].is_zero()) out.at(r, t * dim1 + s1) += v[r];
            }
        }
        return out;
    }

    // [x_{s1}, f(y)] for f(y) an unknown-linear vector in space(i-j).
    Matrix term_x_fy(std::size_t s1, unsigned j, const Matrix& fy) const {
        const int p = static_cast<int>(i) - static_cast<int>(j);
        if (p >= 0) return GaussianRational(-1) * (eval_at_depth1(static_cast<unsigned>(p), s1) * fy);
        return bracket_matrix_depth1(s1, static_cast<unsigned>(-p)) * fy;
    }

    void propagate() {
        for (unsigned jt = 2; jt <= m.length(); ++jt) {
            const unsigned j = jt - 1;
            const std::size_t dimt = m.dim(jt);
            const std::size_t rows = space_dim(static_cast<int>(i) - static_cast<int>(jt));
            blocks[jt - 1].assign(dimt, Matrix(rows, unknowns));
            if (dimt == 0) continue;
            const std::size_t npairs = dim1 * m.dim(j);
            Matrix pres(dimt, npairs + dimt);
            for (std::size_t s1 = 0; s1 < dim1; ++s1)
                for (std::size_t s2 = 0; s2 < m.dim(j); ++s2) {
                    const Vec& v = m.bracket_basis(1, s1, j, s2);
                    for (std::size_t r = 0; r < dimt; ++r) pres.at(r, s1 * m.dim(j) + s2) = v[r];
                }
            for (std::size_t r = 0; r < dimt; ++r) pres.at(r, npairs + r) = GaussianRational(1);
            RrefResult rr = rref(pres);
            if (rr.pivots.empty() || rr.pivots.back() >= npairs)
                throw std::invalid_argument("g-1 does not generate");
            if (rows == 0) continue;
            for (std::size_t k = 0; k < dimt; ++k) {
                Matrix acc(rows, unknowns);
                for (std::size_t prow = 0; prow < rr.pivots.size(); ++prow) {
                    const GaussianRational c = rr.m.at(prow, npairs + k);
                    if (c.is_zero()) continue;
                    const std::size_t pair = rr.pivots[prow];
                    const std::size_t s1 = pair / m.dim(j);
                    const std::size_t s2 = pair % m.dim(j);
                    acc = acc + c * (term_fx_y(s1, j, s2) + term_x_fy(s1, j, blocks[j - 1][s2]));
                }
                blocks[jt - 1][k] = std::move(acc);
            }
        }
    }

    Subspace solve_constraints() const {
        IncrementalRref sys(unknowns);
        for (unsigned j = 1; j <= m.length(); ++j) {
            const std::size_t rows = space_dim(static_cast<int>(i) - 1 - static_cast<int>(j));
            if (rows == 0) continue;
            for (std::size_t s1 = 0; s1 < dim1; ++s1)
                for (std::size_t s2 = 0; s2 < m.dim(j); ++s2) {
                    Matrix r(rows, unknowns);
                    if (j + 1 <= m.length()) {
                        const Vec& xy = m.bracket_basis(1, s1, j, s2);
                        for (std::size_t k = 0; k < xy.size(); ++k)
                            if (!xy[k].is_zero()) r = r + xy[k] * blocks[j][k];
                    }
                    r = r - term_fx_y(s1, j, s2);
                    r = r - term_x_fy(s1, j, blocks[j - 1][s2]);
                    for (std::size_t t = 0; t < rows; ++t) sys.add_row(r.row(t));
                }
        }
        if (i == 0) {
            const Matrix& ii = m.complex_structure();
            for (std::size_t s = 0; s < dim1; ++s) {
                Matrix r = GaussianRational(-1) * (ii * blocks[0][s]);
                for (std::size_t k = 0; k < dim1; ++k)
                    if (!ii.at(k, s).is_zero()) r = r + ii.at(k, s) * blocks[0][k];
                for (std::size_t t = 0; t < dim1; ++t) sys.add_row(r.row(t));
            }
        }
        return sys.null_space();
    }

    ProlongationComponent realize(const Subspace& sols) const {
        ProlongationComponent comp;
        comp.degree = i;
        for (std::size_t e = 0; e < sols.dim(); ++e) {
            Vec u = sols.basis().row(e);
            ProlongationComponent::Element el;
            for (unsigned j = 1; j <= m.length(); ++j) {
                const std::size_t rows = space_dim(static_cast<int>(i) - static_cast<int>(j));
                Matrix b(rows, m.dim(j));
                for (std::size_t s = 0; s < m.dim(j); ++s) {
                    Vec col = blocks[j - 1][s].apply(u);
                    for (std::size_t r = 0; r < rows; ++r) b.at(r, s) = col[r];
                }
                el.blocks.push_back(std::move(b));
            }
            comp.basis.push_back(std::move(el));
        }
        return comp;
    }
};

}  // namespace detail

inline ProlongationComponent compute_component(const GradedLieAlgebra& m,
                                               const std::vector<ProlongationComponent>& lower,
                                               unsigned i) {
    if (i != lower.size()) throw std::invalid_argument("compute_component: lower components mismatch");
    if (!m.has_complex_structure()) throw std::invalid_argument("algebra has no complex structure");
    detail::ProlongSolver solver{m, lower, i};
    solver.dim1 = m.dim(1);
    solver.unknowns = solver.space_dim(static_cast<int>(i) - 1) * solver.dim1;
    solver.build_block1();
    solver.propagate();
    return solver.realize(solver.solve_constraints());
}

inline ProlongationComponent compute_g0(const GradedLieAlgebra& m) {
    return compute_component(m, {}, 0);
}

inline ProlongationComponent compute_gi(const GradedLieAlgebra& m,
                                        const std::vector<ProlongationComponent>& lower, unsigned i) {
    if (i < 1) throw std::invalid_argument("compute_gi: i >= 1");
    return compute_component(m, lower, i);
}

// Value of a component element (coordinates c over comps[p]) at a vector v
// of g_{-j}; lands in space(p - j).
inline Vec component_eval(const std::vector<ProlongationComponent>& comps, unsigned p, const Vec& c,
                          unsigned j, const Vec& v) {
    const auto& comp = comps[p];
    std::size_t rows = comp.dim() ? comp.basis[0].blocks[j - 1].rows() : 0;
    Vec out(rows);
    for (std::size_t t = 0; t < comp.dim(); ++t) {
        if (c[t].is_zero()) continue;
        add_scaled(out, c[t], comp.basis[t].blocks[j - 1].apply(v));
    }
    return out;
}

// Post-hoc verification, independent of the solver path: every basis element
// of comps[i] satisfies f([X,Y]) = [f(X),Y] + [X,f(Y)] on all basis pairs.
inline bool derivation_identity_holds(const GradedLieAlgebra& m,
                                      const std::vector<ProlongationComponent>& comps, unsigned i) {
    auto space_dim = [&](int deg) -> std::size_t {
        if (deg < 0)
            return -deg <= static_cast<int>(m.length()) ? m.dim(static_cast<unsigned>(-deg)) : 0;
        return static_cast<std::size_t>(deg) < comps.size() ? comps[static_cast<std::size_t>(deg)].dim()
                                                            : 0;
    };
    for (const auto& el : comps[i].basis) {
        for (unsigned a = 1; a <= m.length(); ++a)
            for (unsigned b = 1; b <= m.length(); ++b) {
                const int tdeg = static_cast<int>(i) - static_cast<int>(a) - static_cast<int>(b);
                if (space_dim(tdeg) == 0) continue;
                for (std::size_t sa = 0; sa < m.dim(a); ++sa)
                    for (std::size_t sb = 0; sb < m.dim(b); ++sb) {
                        Vec lhs(space_dim(tdeg));
                        if (a + b <= m.length()) {
                            const Vec& xy = m.bracket_basis(a, sa, b, sb);
                            for (std::size_t k = 0; k < xy.size(); ++k)
                                if (!xy[k].is_zero())
                                    add_scaled(lhs, xy[k],
                                               el.blocks[a + b - 1].apply(unit_vec(m.dim(a + b), k)));
                        }
                        Vec fx = el.blocks[a - 1].apply(unit_vec(m.dim(a), sa));
                        const int pfx = static_cast<int>(i) - static_cast<int>(a);
                        Vec t1 = pfx >= 0 ? component_eval(comps, static_cast<unsigned>(pfx), fx, b,
                                                           unit_vec(m.dim(b), sb))
                                          : m.bracket_vec(static_cast<unsigned>(-pfx), fx, b,
                                                          unit_vec(m.dim(b), sb));
                        Vec fy = el.blocks[b - 1].apply(unit_vec(m.dim(b), sb));
                        const int pfy = static_cast<int>(i) - static_cast<int>(b);
                        Vec t2;
                        if (pfy >= 0)
                            t2 = scaled(component_eval(comps, static_cast<unsigned>(pfy), fy, a,
                                                       unit_vec(m.dim(a), sa)),
                                        GaussianRational(-1));
                        else
                            t2 = m.bracket_vec(a, unit_vec(m.dim(a), sa), static_cast<unsigned>(-pfy), fy);
                        add_scaled(lhs, GaussianRational(-1), t1);
                        add_scaled(lhs, GaussianRational(-1), t2);
                        if (!is_zero_vec(lhs)) return false;
                    }
            }
    }
    return true;
}

// Assembled prolongation: base algebra, components, full structure constants
// over degrees -l..L, and the extended conjugation.
class ProlongationResult {
public:
    ProlongationResult(GradedLieAlgebra base, std::vector<ProlongationComponent> comps)
        : base_(std::move(base)), comps_(std::move(comps)) {
        assemble();
    }

    const GradedLieAlgebra& base() const { return base_; }
    const std::vector<ProlongationComponent>& components() const { return comps_; }
    bool rigid() const { return comps_.size() == 1; }
    int min_degree() const { return -static_cast<int>(base_.length()); }
    int max_degree() const { return static_cast<int>(comps_.size()) - 1; }

    std::size_t space_dim(int deg) const {
        if (deg < min_degree() || deg > max_degree()) return 0;
        if (deg < 0) return base_.dim(static_cast<unsigned>(-deg));
        return comps_[static_cast<std::size_t>(deg)].dim();
    }

    std::vector<std::size_t> dims_negative() const { return base_.depth_dims(); }
    std::vector<std::size_t> dims_nonnegative() const {
        std::vector<std::size_t> out;
        for (const auto& c : comps_) out.push_back(c.dim());
        return out;
    }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (int d = min_degree(); d <= max_degree(); ++d) s += space_dim(d);
        return s;
    }

    Vec full_bracket_basis(int p, std::size_t ip, int q, std::size_t iq) const {
        const std::size_t dim_pq = space_dim(p + q);
        if (p < 0 && q < 0) {
            if (p + q < min_degree()) return Vec(dim_pq);
            return base_.bracket_basis(static_cast<unsigned>(-p), ip, static_cast<unsigned>(-q), iq);
        }
        auto it = table_.find({p, q});
        if (it == table_.end()) return Vec(dim_pq);
        return it->second[ip * space_dim(q) + iq];
    }

    // Antilinear conjugation matrix of each space (v -> S conj(v)).
    const Matrix& space_sigma(int deg) const {
        if (deg < 0) return base_.sigma_matrix(static_cast<unsigned>(-deg));
        return comp_sigma_[static_cast<std::size_t>(deg)];
    }

private:
    // Bracket of the basis element (p >= 0, ip) with a vector v in space(d),
    // valid once the tables for smaller total degree are filled.
    Vec bracket_with_element(int p, std::size_t ip, int d, const Vec& v) const {
        const std::size_t out_dim = space_dim(p + d);
        Vec out(out_dim);
        if (d < 0) {
            if (p + d < min_degree()) return out;
            const Matrix& b = comps_[static_cast<std::size_t>(p)].basis[ip].blocks[static_cast<std::size_t>(-d) - 1];
            return b.apply(v);
        }
        auto it = table_.find({p, d});
        if (it == table_.end()) return out;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            add_scaled(out, v[k], it->second[ip * space_dim(d) + k]);
        }
        return out;
    }

    void assemble() {
        const int L = max_degree();

        std::vector<Matrix> f1_flat(comps_.size());
        for (std::size_t p = 0; p < comps_.size(); ++p) {
            const std::size_t rows =
                comps_[p].dim() ? comps_[p].basis[0].blocks[0].rows() * base_.dim(1) : 0;
            Matrix f(rows, comps_[p].dim());
            for (std::size_t t = 0; t < comps_[p].dim(); ++t) {
                const Matrix& b1 = comps_[p].basis[t].blocks[0];
                for (std::size_t r = 0; r < b1.rows(); ++r)
                    for (std::size_t c = 0; c < b1.cols(); ++c) f.at(r * b1.cols() + c, t) = b1.at(r, c);
            }
            f1_flat[p] = std::move(f);
        }

        // Mixed pairs (component, negative): evaluation blocks.
        for (int p = 0; p <= L; ++p)
            for (int q = min_degree(); q < 0; ++q) {
                std::vector<Vec> tab(space_dim(p) * space_dim(q));
                std::vector<Vec> anti(space_dim(q) * space_dim(p));
                for (std::size_t ip = 0; ip < space_dim(p); ++ip)
                    for (std::size_t iq = 0; iq < space_dim(q); ++iq) {
                        const Matrix& b =
                            comps_[static_cast<std::size_t>(p)].basis[ip].blocks[static_cast<std::size_t>(-q) - 1];
                        Vec v(b.rows());
                        for (std::size_t r = 0; r < b.rows(); ++r) v[r] = b.at(r, iq);
                        anti[iq * space_dim(p) + ip] = scaled(v, GaussianRational(-1));
                        tab[ip * space_dim(q) + iq] = std::move(v);
                    }
                table_[{p, q}] = std::move(tab);
                table_[{q, p}] = std::move(anti);
            }

        // Non-negative pairs by increasing total degree; [A,B] is pinned down
        // by its induced action on g_{-1}.
        for (int s = 0; s <= 2 * L; ++s)
            for (int p = 0; p <= L; ++p) {
                const int q = s - p;
                if (q < 0 || q > L) continue;
                std::vector<Vec> tab(space_dim(p) * space_dim(q));
                for (std::size_t ip = 0; ip < space_dim(p); ++ip)
                    for (std::size_t iq = 0; iq < space_dim(q); ++iq) {
                        const std::size_t rows = space_dim(s - 1);
                        Matrix induced(rows, base_.dim(1));
                        for (std::size_t x = 0; x < base_.dim(1); ++x) {
                            Vec xv = unit_vec(base_.dim(1), x);
                            Vec bx = comps_[static_cast<std::size_t>(q)].basis[iq].blocks[0].apply(xv);
                            Vec t1 = bracket_with_element(p, ip, q - 1, bx);
                            Vec ax = comps_[static_cast<std::size_t>(p)].basis[ip].blocks[0].apply(xv);
                            Vec t2 = bracket_with_element(q, iq, p - 1, ax);
                            for (std::size_t r = 0; r < rows; ++r) induced.at(r, x) = t1[r] - t2[r];
                        }
                        if (s > L || space_dim(s) == 0) {
                            if (!induced.is_zero())
                                throw std::logic_error("prolongation bracket escapes computed components");
                            tab[ip * space_dim(q) + iq] = Vec(space_dim(s));
                            continue;
                        }
                        Vec flat(induced.rows() * induced.cols());
                        for (std::size_t r = 0; r < induced.rows(); ++r)
                            for (std::size_t c = 0; c < induced.cols(); ++c)
                                flat[r * induced.cols() + c] = induced.at(r, c);
                        auto coords = solve(f1_flat[static_cast<std::size_t>(s)], flat);
                        if (!coords)
                            throw std::logic_error("prolongation bracket not in computed component");
                        tab[ip * space_dim(q) + iq] = std::move(*coords);
                    }
                table_[{p, q}] = std::move(tab);
            }

        // Conjugation on the components: sigma(f) = sigma o f o sigma, solved
        // back into coordinates via the block-1 flattening.
        comp_sigma_.resize(comps_.size());
        for (std::size_t p = 0; p < comps_.size(); ++p) {
            Matrix sp(comps_[p].dim(), comps_[p].dim());
            for (std::size_t t = 0; t < comps_[p].dim(); ++t) {
                const Matrix& b1 = comps_[p].basis[t].blocks[0];
                const Matrix& s_target = p == 0 ? base_.sigma_matrix(1) : comp_sigma_[p - 1];
                Matrix tb = s_target * b1.conjugate() * base_.sigma_matrix(1).conjugate();
                Vec flat(tb.rows() * tb.cols());
                for (std::size_t r = 0; r < tb.rows(); ++r)
                    for (std::size_t c = 0; c < tb.cols(); ++c) flat[r * tb.cols() + c] = tb.at(r, c);
                auto coords = solve(f1_flat[p], flat);
                if (!coords) throw std::logic_error("sigma does not preserve prolongation component");
                for (std::size_t r = 0; r < comps_[p].dim(); ++r) sp.at(r, t) = (*coords)[r];
            }
            comp_sigma_[p] = std::move(sp);
        }
    }

    GradedLieAlgebra base_;
    std::vector<ProlongationComponent> comps_;
    std::map<std::pair<int, int>, std::vector<Vec>> table_;
    std::vector<Matrix> comp_sigma_;
};

template <class S>
using FullElem = std::vector<std::vector<S>>;  // index 0 corresponds to degree -l

template <class S>
FullElem<S> full_zero_elem(const ProlongationResult& P) {
    FullElem<S> e;
    for (int d = P.min_degree(); d <= P.max_degree(); ++d) e.emplace_back(P.space_dim(d), S());
    return e;
}

template <class S>
FullElem<S> full_bracket(const ProlongationResult& P, const FullElem<S>& x, const FullElem<S>& y) {
    FullElem<S> out = full_zero_elem<S>(P);
    const int lo = P.min_degree();
    for (int p = lo; p <= P.max_degree(); ++p)
        for (int q = lo; q <= P.max_degree(); ++q) {
            const int t = p + q;
            if (t < lo || t > P.max_degree()) continue;
            const auto& xs = x[static_cast<std::size_t>(p - lo)];
            const auto& ys = y[static_cast<std::size_t>(q - lo)];
            for (std::size_t ip = 0; ip < xs.size(); ++ip) {
                if (xs[ip].is_zero()) continue;
                for (std::size_t iq = 0; iq < ys.size(); ++iq) {
                    if (ys[iq].is_zero()) continue;
                    S prod = xs[ip] * ys[iq];
                    if (prod.is_zero()) continue;
                    Vec c = P.full_bracket_basis(p, ip, q, iq);
                    for (std::size_t k = 0; k < c.size(); ++k)
                        if (!c[k].is_zero()) out[static_cast<std::size_t>(t - lo)][k] += prod * c[k];
                }
            }
        }
    return out;
}

template <class S>
FullElem<S> full_basis_elem(const ProlongationResult& P, int deg, std::size_t i) {
    auto e = full_zero_elem<S>(P);
    e[static_cast<std::size_t>(deg - P.min_degree())][i] = S(1);
    return e;
}

// Coordinates in comps[p] of the element with the given block-1 matrix, if
// that map extends to a prolongation element.
inline std::optional<Vec> component_coords_from_block1(const std::vector<ProlongationComponent>& comps,
                                                       unsigned p, const Matrix& b1) {
    const auto& comp = comps[p];
    const std::size_t cols = b1.cols();
    Matrix flat(b1.rows() * cols, comp.dim());
    for (std::size_t t = 0; t < comp.dim(); ++t) {
        const Matrix& tb = comp.basis[t].blocks[0];
        for (std::size_t r = 0; r < tb.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) flat.at(r * cols + c, t) = tb.at(r, c);
    }
    Vec rhs(b1.rows() * cols);
    for (std::size_t r = 0; r < b1.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) rhs[r * cols + c] = b1.at(r, c);
    return solve(flat, rhs);
}

// The grading element E of g_0: acts as multiplication by -d on g_{-d}.
inline Vec grading_element_coords(const ProlongationResult& P) {
    auto c = component_coords_from_block1(P.components(), 0,
                                          GaussianRational(-1) * Matrix::identity(P.base().dim(1)));
    if (!c) throw std::logic_error("grading element missing from g_0");
    return *c;
}

inline ProlongationResult prolong_all(const GradedLieAlgebra& m, bool verify = true) {
    require_cr_nondegenerate(m);
    std::vector<ProlongationComponent> comps;
    comps.push_back(compute_g0(m));
    for (unsigned i = 1;; ++i) {
        if (i > 2 * m.length()) throw std::logic_error("prolongation did not terminate by degree 2l");
        ProlongationComponent c = compute_gi(m, comps, i);
        if (c.dim() == 0) break;
        comps.push_back(std::move(c));
    }
    if (verify)
        for (unsigned i = 0; i < comps.size(); ++i)
            if (!derivation_identity_holds(m, comps, i))
                throw std::logic_error("derivation identity violated post hoc");
    return ProlongationResult(m, std::move(comps));
}

struct RigidityCertificate {
    bool rigid = false;
    std::size_t dim_g0 = 0;
    std::size_t dim_g1 = 0;
    std::optional<Matrix> witness;  // block 1 of one basis element of g_1
};

// Rigidity needs only g_0 and g_1: g_1 = 0 forces all higher components to
// vanish, each element being determined by its value block on g_{-1}.
inline RigidityCertificate certify_rigidity(const GradedLieAlgebra& m, bool verify = true) {
    require_cr_nondegenerate(m);
    std::vector<ProlongationComponent> comps;
    comps.push_back(compute_g0(m));
    ProlongationComponent g1 = compute_gi(m, comps, 1);
    RigidityCertificate cert;
    cert.dim_g0 = comps[0].dim();
    cert.dim_g1 = g1.dim();
    cert.rigid = g1.dim() == 0;
    if (!cert.rigid) cert.witness = g1.basis[0].blocks[0];
    if (verify) {
        comps.push_back(g1);
        for (unsigned i = 0; i < (cert.rigid ? 1u : 2u); ++i)
            if (!derivation_identity_holds(m, comps, i))
                throw std::logic_error("derivation identity violated post hoc");
    }
    return cert;
}

}  // namespace levitan
