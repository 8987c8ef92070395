#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "levitan/bch.hpp"
#include "levitan/liealg.hpp"
#include "levitan/linalg.hpp"
#include "levitan/poly.hpp"

namespace levitan {

// sigma-adapted real coordinates on m, plus a holomorphic frame on the +i
// eigenspace of I. The frame fixes the z-coordinates of the embedding; the
// canonical choice is the RREF eigenbasis, and catalog models may supply the
// frame printed in their source instead.
struct RealStructure {
    std::vector<std::vector<Vec>> real_basis;  // [depth-1][b]: complexified coordinates
    std::vector<Matrix> to_real;               // [depth-1]: complexified -> real-basis coords
    std::vector<Vec> holo_frame;               // basis of the +i eigenspace of I
    Matrix frame_coords;                       // n x dim1: coordinates in the frame (on g^{10})
    Matrix x_from_z;                           // 2n x 2n: x = x_from_z (zeta, zetabar)

    std::size_t real_dim() const {
        std::size_t s = 0;
        for (const auto& rb : real_basis) s += rb.size();
        return s;
    }
};

namespace detail {

inline Matrix invert(const Matrix& m, const char* what) {
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aug.at(i, j) = m.at(i, j);
            if (i == j) aug.at(i, n + j) = GaussianRational(1);
        }
    RrefResult rr = rref(aug);
    if (rr.pivots.size() != n || (n && rr.pivots.back() != n - 1))
        throw std::logic_error(std::string("matrix not invertible: ") + what);
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
    return inv;
}

inline Matrix columns_matrix(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    return m;
}

}  // namespace detail

inline RealStructure real_structure_with_frame(const GradedLieAlgebra& g, std::vector<Vec> frame) {
    if (!g.has_complex_structure()) throw std::invalid_argument("algebra has no complex structure");
    const unsigned n = static_cast<unsigned>(g.dim(1) / 2);
    if (frame.size() != n) throw std::invalid_argument("holomorphic frame has wrong size");
    const Matrix& ii = g.complex_structure();
    for (const Vec& h : frame) {
        Vec ih = ii.apply(h);
        add_scaled(ih, -GaussianRational::i(), h);
        if (!is_zero_vec(ih)) throw std::invalid_argument("frame vector not a +i eigenvector of I");
    }

    RealStructure rs;
    rs.holo_frame = std::move(frame);

    // Canonical sigma-fixed real basis per depth: greedy over the candidates
    // (e_k + sigma e_k)/2 and i (e_k - sigma e_k)/2. R-independent sigma-fixed
    // vectors are C-independent, so a C-rank test drives the selection.
    for (unsigned d = 1; d <= g.length(); ++d) {
        const std::size_t dim = g.dim(d);
        std::vector<Vec> picked;
        IncrementalRref ir(dim);
        auto try_pick = [&](Vec v) {
            if (is_zero_vec(v) || picked.size() == dim) return;
            const std::size_t before = ir.rank();
            ir.add_row(v);
            if (ir.rank() > before) picked.push_back(std::move(v));
        };
        for (std::size_t k = 0; k < dim; ++k) {
            Vec e = unit_vec(dim, k);
            Vec se = g.sigma_apply(d, e);
            Vec sum = e;
            add_scaled(sum, GaussianRational(1), se);
            try_pick(scaled(std::move(sum), GaussianRational(Rational(1, 2))));
            Vec diff = e;
            add_scaled(diff, GaussianRational(-1), se);
            try_pick(scaled(std::move(diff), GaussianRational(Rational(0), Rational(1, 2))));
        }
        if (picked.size() != dim) throw std::logic_error("real basis construction failed");
        rs.to_real.push_back(detail::invert(detail::columns_matrix(picked, dim), "real basis"));
        rs.real_basis.push_back(std::move(picked));
    }

    // Coordinates in the holomorphic frame: first n rows of [F | sigma F]^{-1}
    // (sigma F spans the conjugate eigenspace g^{01}).
    const std::size_t dim1 = g.dim(1);
    Matrix fext(dim1, dim1);
    for (std::size_t c = 0; c < n; ++c) {
        Vec sf = g.sigma_apply(1, rs.holo_frame[c]);
        for (std::size_t r = 0; r < dim1; ++r) {
            fext.at(r, c) = rs.holo_frame[c][r];
            fext.at(r, n + c) = sf[r];
        }
    }
    Matrix fext_inv = detail::invert(fext, "holomorphic frame");
    rs.frame_coords = Matrix(n, dim1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < dim1; ++c) rs.frame_coords.at(r, c) = fext_inv.at(r, c);

    // zeta_i = sum_b M[i][b] x_b for M[i][b] = frame coords of (r_b - i I r_b)/2;
    // stacking with the conjugate rows and inverting solves x from (z, zbar).
    Matrix mz(dim1, dim1);
    for (std::size_t b = 0; b < dim1; ++b) {
        Vec v = rs.real_basis[0][b];
        Vec iv = g.complex_structure().apply(v);
        add_scaled(v, -GaussianRational::i(), iv);
        v = scaled(std::move(v), GaussianRational(Rational(1, 2)));
        Vec zc = rs.frame_coords.apply(v);
        for (std::size_t i = 0; i < n; ++i) {
            mz.at(i, b) = zc[i];
            mz.at(n + i, b) = zc[i].conj();
        }
    }
    rs.x_from_z = detail::invert(mz, "x from z");
    return rs;
}

inline RealStructure canonical_real_structure(const GradedLieAlgebra& g) {
    if (!g.has_complex_structure()) throw std::invalid_argument("algebra has no complex structure");
    Matrix eig = g.complex_structure();
    for (std::size_t i = 0; i < eig.rows(); ++i) eig.at(i, i) -= GaussianRational::i();
    Subspace holo = null_space(eig);
    if (holo.dim() * 2 != g.dim(1)) throw std::logic_error("complex structure has wrong eigenspaces");
    std::vector<Vec> frame;
    for (std::size_t r = 0; r < holo.dim(); ++r) frame.push_back(holo.basis().row(r));
    return real_structure_with_frame(g, std::move(frame));
}

// ---------------------------------------------------------------------------
// Model surfaces: Im(w_j) = P_j(z, zbar, u), u_j = Re(w_j). Polynomials use
// the variable layout z_1..z_n, zbar_1..zbar_n, u_1..u_k.

struct ModelSurface {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<unsigned> weights;      // m_j, ascending
    std::vector<Polynomial> equations;  // P_j over 2n+k variables

    std::size_t nvars() const { return 2 * static_cast<std::size_t>(n) + k; }
    std::vector<unsigned> variable_weights() const {
        std::vector<unsigned> w(nvars(), 1);
        for (unsigned j = 0; j < k; ++j) w[2 * n + j] = weights[j];
        return w;
    }
};

inline Polynomial surface_conj(const Polynomial& p, unsigned n, unsigned k) {
    std::vector<std::size_t> perm(2 * static_cast<std::size_t>(n) + k);
    for (unsigned i = 0; i < n; ++i) {
        perm[i] = n + i;
        perm[n + i] = i;
    }
    for (unsigned j = 0; j < k; ++j) perm[2 * n + j] = 2 * n + j;
    return p.remap_variables(perm, p.nvars()).map_coefficients(
        [](const GaussianRational& c) { return c.conj(); });
}

inline Polynomial surface_re(const Polynomial& p, unsigned n, unsigned k) {
    return (p + surface_conj(p, n, k)) * GaussianRational(Rational(1, 2));
}

inline Polynomial surface_im(const Polynomial& p, unsigned n, unsigned k) {
    return (p - surface_conj(p, n, k)) * GaussianRational(Rational(0), Rational(-1, 2));
}

inline bool check_homogeneity(const ModelSurface& s) {
    const auto w = s.variable_weights();
    for (unsigned j = 0; j < s.k; ++j)
        if (!s.equations[j].is_homogeneous(w, s.weights[j])) return false;
    return true;
}

inline bool surface_is_real(const ModelSurface& s) {
    for (const auto& p : s.equations)
        if (surface_conj(p, s.n, s.k) != p) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Naruki embedding phi: m -> n with symbolic real coordinates. Real
// coordinate variables are ordered depth 1 first, then depth 2, ... matching
// the matrix displays x_{-1,1}, ..., x_{-2,..}, ...

struct NilElement {
    unsigned n = 0;
    std::vector<Polynomial> z;                    // frame coordinates of the g^{10} part
    std::vector<std::vector<Polynomial>> deep;    // [depth-2][b]: real-basis coordinates
};

inline NilElement naruki_embedding(const GradedLieAlgebra& g, const RealStructure& rs) {
    const unsigned l = g.length();
    const std::size_t nx = rs.real_dim();
    const unsigned n = static_cast<unsigned>(g.dim(1) / 2);

    // Generic element X = sum x_{d,b} r_{d,b} with complexified polynomial coordinates.
    GradedElem<Polynomial> x = zero_elem<Polynomial>(g);
    {
        std::size_t var = 0;
        for (unsigned d = 1; d <= l; ++d) {
            for (auto& c : x[d - 1]) c = Polynomial(nx);
            for (std::size_t b = 0; b < rs.real_basis[d - 1].size(); ++b, ++var) {
                Polynomial xv = Polynomial::variable(nx, var);
                for (std::size_t kcoord = 0; kcoord < g.dim(d); ++kcoord) {
                    const GaussianRational& c = rs.real_basis[d - 1][b][kcoord];
                    if (!c.is_zero()) x[d - 1][kcoord] += xv * c;
                }
            }
        }
    }

    // W = -1/2 (X_{-1} + i I(X_{-1})) in g^{01}.
    GradedElem<Polynomial> w = zero_elem<Polynomial>(g);
    for (auto& comp : w)
        for (auto& c : comp) c = Polynomial(nx);
    {
        Vec dummy;  // complex structure applied to polynomial coordinates, by columns
        const Matrix& ii = g.complex_structure();
        for (std::size_t r = 0; r < g.dim(1); ++r) {
            Polynomial acc(nx);
            for (std::size_t c = 0; c < g.dim(1); ++c)
                if (!ii.at(r, c).is_zero()) acc += x[0][c] * ii.at(r, c);
            // w_r = -1/2 x_r - i/2 (I x)_r
            w[0][r] = x[0][r] * GaussianRational(Rational(-1, 2)) +
                      acc * GaussianRational(Rational(0), Rational(-1, 2));
        }
        (void)dummy;
    }

    GradedElem<Polynomial> phi = bch(g, x, w);

    NilElement out;
    out.n = n;
    out.z.assign(n, Polynomial(nx));
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial acc(nx);
        for (std::size_t c = 0; c < g.dim(1); ++c)
            if (!rs.frame_coords.at(i, c).is_zero()) acc += phi[0][c] * rs.frame_coords.at(i, c);
        out.z[i] = std::move(acc);
    }
    for (unsigned d = 2; d <= l; ++d) {
        std::vector<Polynomial> coords(g.dim(d), Polynomial(nx));
        for (std::size_t r = 0; r < g.dim(d); ++r) {
            Polynomial acc(nx);
            for (std::size_t c = 0; c < g.dim(d); ++c)
                if (!rs.to_real[d - 1].at(r, c).is_zero()) acc += phi[d - 1][c] * rs.to_real[d - 1].at(r, c);
            coords[r] = std::move(acc);
        }
        out.deep.push_back(std::move(coords));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Staged elimination: solve the real coordinates depth by depth and read off
// Im(w_j) = P_j(z, zbar, Re w).

inline ModelSurface defining_equations(const GradedLieAlgebra& g, const RealStructure& rs) {
    require_cr_nondegenerate(g);
    const unsigned l = g.length();
    const unsigned n = static_cast<unsigned>(g.dim(1) / 2);
    unsigned k = 0;
    for (unsigned d = 2; d <= l; ++d) k += static_cast<unsigned>(g.dim(d));
    const std::size_t sv = 2 * static_cast<std::size_t>(n) + k;  // z, zbar, u

    NilElement phi = naruki_embedding(g, rs);
    const std::size_t nx = rs.real_dim();

    // solved[x-var] = polynomial in (z, zbar, u); filled in depth order.
    std::vector<std::optional<Polynomial>> solved(nx);
    for (std::size_t b = 0; b < 2 * static_cast<std::size_t>(n); ++b) {
        Polynomial acc(sv);
        for (std::size_t c = 0; c < 2 * static_cast<std::size_t>(n); ++c) {
            const GaussianRational& m = rs.x_from_z.at(b, c);
            if (!m.is_zero()) acc += Polynomial::variable(sv, c) * m;
        }
        solved[b] = std::move(acc);
    }

    auto substitute_solved = [&](const Polynomial& p) {
        std::vector<Polynomial> images(nx, Polynomial(sv));
        for (const auto& [e, c] : p.terms())
            for (std::size_t v = 0; v < nx; ++v)
                if (e[v] > 0 && !solved[v].has_value())
                    throw std::logic_error("elimination touched an unsolved deeper coordinate");
        for (std::size_t v = 0; v < nx; ++v)
            if (solved[v]) images[v] = *solved[v];
        return p.substitute(images);
    };

    ModelSurface s;
    s.n = n;
    s.k = k;
    std::size_t xvar = 2 * static_cast<std::size_t>(n);
    unsigned wvar = 0;
    for (unsigned d = 2; d <= l; ++d) {
        for (std::size_t b = 0; b < g.dim(d); ++b, ++xvar, ++wvar) {
            // y = x + Q: strip the linear symbol from the phi coordinate.
            Polynomial q = phi.deep[d - 2][b];
            q -= Polynomial::variable(nx, xvar);
            Polynomial qs = substitute_solved(q);
            Polynomial re = surface_re(qs, n, k);
            Polynomial im = surface_im(qs, n, k);
            Polynomial xsol = Polynomial::variable(sv, 2 * static_cast<std::size_t>(n) + wvar) - re;
            solved[xvar] = std::move(xsol);
            s.weights.push_back(d);
            s.equations.push_back(std::move(im));
        }
    }

    if (!check_homogeneity(s)) throw std::logic_error("defining equations not weighted homogeneous");
    if (!surface_is_real(s)) throw std::logic_error("defining equations not real");
    for (unsigned j = 0; j < s.k; ++j) {
        Polynomial::Exponents e(sv, 0);
        e[2 * static_cast<std::size_t>(n) + j] = 1;
        if (!s.equations[j].coeff(e).is_zero())
            throw std::logic_error("defining equation has a linear term in its own u");
    }
    return s;
}

inline ModelSurface defining_equations(const GradedLieAlgebra& g) {
    return defining_equations(g, canonical_real_structure(g));
}

}  // namespace levitan
