#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "levitan/liealg.hpp"
#include "levitan/linalg.hpp"
#include "levitan/surface.hpp"

namespace levitan {

// A graded simple Lie algebra realized by real matrices (complex entries
// doubled into 2x2 blocks), carrying the negative part as explicit basis
// matrices together with the complex structure and the coordinate frame used
// for the printed equations.
struct MatrixGradedAlgebra {
    std::string name;
    std::size_t matrix_size = 0;  // real size (doubled)
    unsigned n = 0;               // CR dimension
    unsigned l = 0;
    std::vector<std::vector<Matrix>> neg_basis;  // [depth-1][b]
    std::vector<std::vector<std::string>> labels;
    Matrix complex_structure;           // on the depth-1 basis
    std::vector<Vec> holo_frame;        // documented frame (coordinates in the depth-1 basis)
    std::vector<std::size_t> pos_dims;  // real dims of g_{+d}, d = 1..l
    std::size_t dim_g0 = 0;             // real dim of g_0 in the matrix model

    // Abstract graded algebra with structure constants from commutators.
    GradedLieAlgebra derived() const {
        GradedLieAlgebra::Data data;
        data.n = n;
        data.l = l;
        data.labels = labels;
        // Flattened matrices per depth for expressing commutators.
        std::vector<Matrix> flat(l);
        const std::size_t mm = matrix_size * matrix_size;
        for (unsigned d = 1; d <= l; ++d) {
            Matrix f(mm, neg_basis[d - 1].size());
            for (std::size_t b = 0; b < neg_basis[d - 1].size(); ++b)
                for (std::size_t r = 0; r < matrix_size; ++r)
                    for (std::size_t c = 0; c < matrix_size; ++c)
                        f.at(r * matrix_size + c, b) = neg_basis[d - 1][b].at(r, c);
            flat[d - 1] = std::move(f);
        }
        data.brackets.assign(l, std::vector<std::vector<Vec>>(l));
        for (unsigned a = 1; a <= l; ++a)
            for (unsigned b = 1; a + b <= l; ++b) {
                const std::size_t da = neg_basis[a - 1].size(), db = neg_basis[b - 1].size();
                auto& table = data.brackets[a - 1][b - 1];
                table.resize(da * db);
                for (std::size_t ia = 0; ia < da; ++ia)
                    for (std::size_t ib = 0; ib < db; ++ib) {
                        Matrix comm = neg_basis[a - 1][ia] * neg_basis[b - 1][ib] -
                                      neg_basis[b - 1][ib] * neg_basis[a - 1][ia];
                        Vec rhs(mm);
                        for (std::size_t r = 0; r < matrix_size; ++r)
                            for (std::size_t c = 0; c < matrix_size; ++c)
                                rhs[r * matrix_size + c] = comm.at(r, c);
                        auto coords = solve(flat[a + b - 1], rhs);
                        if (!coords) throw std::logic_error("matrix basis not closed under brackets");
                        table[ia * db + ib] = std::move(*coords);
                    }
            }
        // Real matrix basis: conjugation is plain coefficient conjugation.
        for (unsigned d = 1; d <= l; ++d)
            data.sigma.push_back(Matrix::identity(neg_basis[d - 1].size()));
        data.complex_structure = complex_structure;
        return GradedLieAlgebra(std::move(data));
    }

    RealStructure real_structure() const {
        return real_structure_with_frame(derived(), holo_frame);
    }
};

// The sp(4,C) model of Section 5-style: derivations preserving the
// antisymmetric form (a,b) -> a1 b4 - a4 b1 + a2 b3 - a3 b2 on C^4,
// identified with R^8, graded by Xi = {1,2}. Matrices exactly as printed.
inline MatrixGradedAlgebra sp4_grading() {
    MatrixGradedAlgebra cat;
    cat.name = "sp4";
    cat.matrix_size = 8;
    cat.n = 2;
    cat.l = 3;
    struct Entry {
        int r, c, v;
    };
    auto mat = [&](std::initializer_list<Entry> entries) {
        Matrix m(8, 8);
        for (const auto& e : entries)
            m.at(static_cast<std::size_t>(e.r), static_cast<std::size_t>(e.c)) =
                GaussianRational(Rational(e.v));
        return m;
    };
    std::vector<Matrix> d1 = {
        mat({{2, 0, 1}, {3, 1, 1}, {6, 4, -1}, {7, 5, -1}}),   // x_{-1,1}
        mat({{2, 1, -1}, {3, 0, 1}, {6, 5, 1}, {7, 4, -1}}),   // x_{-1,2}
        mat({{4, 2, 1}, {5, 3, 1}}),                           // x_{-1,3}
        mat({{4, 3, -1}, {5, 2, 1}}),                          // x_{-1,4}
    };
    std::vector<Matrix> d2 = {
        mat({{4, 0, 1}, {5, 1, 1}, {6, 2, 1}, {7, 3, 1}}),     // x_{-2,5}
        mat({{4, 1, -1}, {5, 0, 1}, {6, 3, -1}, {7, 2, 1}}),   // x_{-2,6}
    };
    std::vector<Matrix> d3 = {
        mat({{6, 0, 1}, {7, 1, 1}}),                           // x_{-3,7}
        mat({{6, 1, -1}, {7, 0, 1}}),                          // x_{-3,8}
    };
    cat.neg_basis = {d1, d2, d3};
    cat.labels = {{"x[-1,1]", "x[-1,2]", "x[-1,3]", "x[-1,4]"},
                  {"x[-2,5]", "x[-2,6]"},
                  {"x[-3,7]", "x[-3,8]"}};
    // I acts as i on x1 + i x2 and on x4 + i x3.
    Matrix ii(4, 4);
    ii.at(1, 0) = GaussianRational(1);    // I r1 = r2
    ii.at(0, 1) = GaussianRational(-1);   // I r2 = -r1
    ii.at(3, 2) = GaussianRational(-1);   // I r3 = -r4
    ii.at(2, 3) = GaussianRational(1);    // I r4 = r3
    cat.complex_structure = std::move(ii);
    // z1 = (x1 + i x2)/2 on H1 = r1 - i r2; z2 = (x4 + i x3)/2 on H2 = r4 - i r3.
    cat.holo_frame = {
        Vec{GaussianRational(1), -GaussianRational::i(), GaussianRational(0), GaussianRational(0)},
        Vec{GaussianRational(0), GaussianRational(0), -GaussianRational::i(), GaussianRational(1)}};
    cat.pos_dims = {4, 2, 2};
    cat.dim_g0 = 4;
    return cat;
}

// Block gradings of sl(rank+1, C) (as doubled real matrices) by a set Xi of
// simple roots: the degree of the root space E_{ij} is the number of
// Xi-crossings between i and j, negative below the diagonal. l = |Xi|.
inline MatrixGradedAlgebra an_grading(unsigned rank, const std::vector<unsigned>& xi_in) {
    if (rank < 1 || rank > 6) throw std::invalid_argument("an_grading: 1 <= rank <= 6");
    std::vector<unsigned> xi = xi_in;
    std::sort(xi.begin(), xi.end());
    xi.erase(std::unique(xi.begin(), xi.end()), xi.end());
    if (xi.size() < 2) throw std::invalid_argument("an_grading: need |Xi| >= 2 for a CR structure");
    for (unsigned m : xi)
        if (m < 1 || m > rank) throw std::invalid_argument("an_grading: Xi out of range");

    const unsigned nc = rank + 1;       // complex size
    const std::size_t rsz = 2 * nc;     // real size
    // Xi+ / Xi- alternate along the diagram; the sign of a height-1 root is
    // the sign of its unique Xi-crossing.
    std::map<unsigned, int> xi_sign;
    for (std::size_t k = 0; k < xi.size(); ++k) xi_sign[xi[k]] = k % 2 == 0 ? +1 : -1;

    auto height = [&](unsigned j, unsigned i) {  // columns j < i, 1-based
        unsigned h = 0;
        for (unsigned m = j; m < i; ++m)
            if (xi_sign.count(m)) ++h;
        return h;
    };

    MatrixGradedAlgebra cat;
    cat.name = "a" + std::to_string(rank);
    cat.matrix_size = rsz;
    cat.l = static_cast<unsigned>(xi.size());

    auto real_enc = [&](unsigned r, unsigned c, bool imaginary) {
        // E_{rc} (1-based complex positions) or i E_{rc}, doubled.
        Matrix m(rsz, rsz);
        const std::size_t r0 = 2 * (r - 1), c0 = 2 * (c - 1);
        if (!imaginary) {
            m.at(r0, c0) = GaussianRational(1);
            m.at(r0 + 1, c0 + 1) = GaussianRational(1);
        } else {
            m.at(r0, c0 + 1) = GaussianRational(-1);
            m.at(r0 + 1, c0) = GaussianRational(1);
        }
        return m;
    };

    cat.neg_basis.assign(cat.l, {});
    cat.labels.assign(cat.l, {});
    std::vector<int> depth1_signs;
    for (unsigned d = 1; d <= cat.l; ++d)
        for (unsigned i = 2; i <= nc; ++i)
            for (unsigned j = 1; j < i; ++j) {
                if (height(j, i) != d) continue;
                cat.neg_basis[d - 1].push_back(real_enc(i, j, false));
                cat.neg_basis[d - 1].push_back(real_enc(i, j, true));
                const std::string tag = std::to_string(i) + std::to_string(j);
                cat.labels[d - 1].push_back("e" + tag);
                cat.labels[d - 1].push_back("f" + tag);
                if (d == 1) {
                    int sign = 0;
                    for (unsigned m = j; m < i; ++m)
                        if (xi_sign.count(m)) sign = xi_sign[m];
                    depth1_signs.push_back(sign);
                }
            }

    const std::size_t n1 = cat.neg_basis[0].size();
    cat.n = static_cast<unsigned>(n1 / 2);
    Matrix ii(n1, n1);
    for (std::size_t root = 0; root < cat.n; ++root) {
        // multiplication by +-i: A -> +-B, B -> -+A
        const GaussianRational s{Rational(depth1_signs[root])};
        ii.at(2 * root + 1, 2 * root) = s;
        ii.at(2 * root, 2 * root + 1) = -s;
    }
    cat.complex_structure = std::move(ii);
    for (std::size_t root = 0; root < cat.n; ++root) {
        Vec h(n1);
        h[2 * root] = GaussianRational(1);
        h[2 * root + 1] = -GaussianRational::i() * GaussianRational(Rational(depth1_signs[root]));
        cat.holo_frame.push_back(std::move(h));
    }

    cat.pos_dims.assign(cat.l, 0);
    std::size_t height0 = 0;
    for (unsigned i = 2; i <= nc; ++i)
        for (unsigned j = 1; j < i; ++j) {
            unsigned h = height(j, i);
            if (h == 0)
                ++height0;
            else
                cat.pos_dims[h - 1] += 2;
        }
    cat.dim_g0 = 2 * (rank + 2 * height0);
    return cat;
}

}  // namespace levitan
