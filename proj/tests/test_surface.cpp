#include <catch2/catch_amalgamated.hpp>

#include "levitan/surface.hpp"
#include "test_util.hpp"

using namespace levitan;

namespace {

GaussianRational eval_poly(const Polynomial& p, const std::vector<GaussianRational>& vals) {
    GaussianRational out;
    for (const auto& [e, c] : p.terms()) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
        out += t;
    }
    return out;
}

// Exact point check: the image of a random real point of m under phi
// satisfies every emitted defining equation.
void check_point_on_surface(const GradedLieAlgebra& g, const RealStructure& rs,
                            const ModelSurface& s, testutil::SplitMix64& rng) {
    NilElement phi = naruki_embedding(g, rs);
    std::vector<GaussianRational> x;
    for (std::size_t i = 0; i < rs.real_dim(); ++i)
        x.emplace_back(Rational(rng.range(-3, 3), rng.range(1, 3)));
    // surface variables: z, zbar, u = Re(y)
    std::vector<GaussianRational> vals(2 * static_cast<std::size_t>(s.n) + s.k);
    for (unsigned i = 0; i < s.n; ++i) {
        GaussianRational zi = eval_poly(phi.z[i], x);
        vals[i] = zi;
        vals[s.n + i] = zi.conj();
    }
    std::vector<GaussianRational> y;
    for (const auto& coords : phi.deep)
        for (const auto& c : coords) y.push_back(eval_poly(c, x));
    for (unsigned j = 0; j < s.k; ++j) vals[2 * s.n + j] = GaussianRational(y[j].re);
    for (unsigned j = 0; j < s.k; ++j) {
        GaussianRational pj = eval_poly(s.equations[j], vals);
        CHECK(pj == GaussianRational(y[j].im));
    }
}

}  // namespace

TEST_CASE("hyperquadric defining equation") {
    GradedLieAlgebra g = universal_levi_tanaka(1, 2);
    ModelSurface s = defining_equations(g);
    REQUIRE(s.n == 1);
    REQUIRE(s.k == 1);
    CHECK(s.weights == std::vector<unsigned>{2});
    // Independent hand derivation with the canonical normalization:
    // Im(w_1) = 1/2 z_1 zbar_1.
    Polynomial expect(3);
    expect.add_term({1, 1, 0}, GaussianRational(Rational(1, 2)));
    CHECK(s.equations[0] == expect);
    CHECK(check_homogeneity(s));
    CHECK(surface_is_real(s));
}

TEST_CASE("naruki embedding: X with zero depth-1 part is fixed") {
    GradedLieAlgebra g = universal_levi_tanaka(1, 3);
    RealStructure rs = canonical_real_structure(g);
    NilElement phi = naruki_embedding(g, rs);
    const std::size_t nx = rs.real_dim();
    // kill the depth-1 variables
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < nx; ++v)
        images.push_back(v < g.dim(1) ? Polynomial(nx) : Polynomial::variable(nx, v));
    std::size_t var = g.dim(1);
    for (unsigned d = 2; d <= g.length(); ++d)
        for (std::size_t b = 0; b < g.dim(d); ++b, ++var)
            CHECK(phi.deep[d - 2][b].substitute(images) == Polynomial::variable(nx, var));
    for (unsigned i = 0; i < phi.n; ++i) CHECK(phi.z[i].substitute(images).is_zero());
}

TEST_CASE("naruki embedding: depth -2 correction is i/4 [I X, X]") {
    for (auto [n, l] : {std::pair<unsigned, unsigned>{1, 2}, {2, 3}}) {
        GradedLieAlgebra g = universal_levi_tanaka(n, l);
        RealStructure rs = canonical_real_structure(g);
        NilElement phi = naruki_embedding(g, rs);
        const std::size_t nx = rs.real_dim();
        // generic X as complexified polynomial coordinates
        GradedElem<Polynomial> x = zero_elem<Polynomial>(g);
        std::size_t var = 0;
        for (unsigned d = 1; d <= g.length(); ++d) {
            for (auto& c : x[d - 1]) c = Polynomial(nx);
            for (std::size_t b = 0; b < rs.real_basis[d - 1].size(); ++b, ++var)
                for (std::size_t kc = 0; kc < g.dim(d); ++kc) {
                    const GaussianRational& c = rs.real_basis[d - 1][b][kc];
                    if (!c.is_zero()) x[d - 1][kc] += Polynomial::variable(nx, var) * c;
                }
        }
        GradedElem<Polynomial> ix = x;
        const Matrix& ii = g.complex_structure();
        for (std::size_t r = 0; r < g.dim(1); ++r) {
            Polynomial acc(nx);
            for (std::size_t c = 0; c < g.dim(1); ++c)
                if (!ii.at(r, c).is_zero()) acc += x[0][c] * ii.at(r, c);
            ix[0][r] = std::move(acc);
        }
        for (unsigned d = 2; d <= g.length(); ++d)
            for (auto& c : ix[d - 1]) c = Polynomial(nx);
        GradedElem<Polynomial> corr = elem_bracket(g, ix, x);
        // phi_{-2} (complexified, converted back from real coords) must be
        // X_{-2} + (i/4)[I X_{-1}, X_{-1}]
        for (std::size_t kc = 0; kc < g.dim(2); ++kc) {
            Polynomial expect = x[1][kc] + corr[1][kc] * GaussianRational(Rational(0), Rational(1, 4));
            // reconstruct complexified coordinate kc from the real outputs
            Polynomial got(nx);
            for (std::size_t b = 0; b < g.dim(2); ++b) {
                const GaussianRational& c = rs.real_basis[1][b][kc];
                if (!c.is_zero()) got += phi.deep[0][b] * c;
            }
            CHECK(got == expect);
        }
    }
}

TEST_CASE("defining equations of universal algebras: shape and soundness") {
    testutil::SplitMix64 rng(2718);
    for (auto [n, l] : {std::pair<unsigned, unsigned>{1, 2}, {1, 3}, {2, 3}}) {
        GradedLieAlgebra g = universal_levi_tanaka(n, l);
        RealStructure rs = canonical_real_structure(g);
        ModelSurface s = defining_equations(g, rs);
        CHECK(s.n == n);
        std::size_t expect_k = 0;
        for (unsigned d = 2; d <= l; ++d) expect_k += g.dim(d);
        CHECK(s.k == expect_k);
        CHECK(check_homogeneity(s));
        CHECK(surface_is_real(s));
        CHECK(bloom_graham_type(g) == std::vector<unsigned>(s.weights.begin(), s.weights.end()));
        for (int rep = 0; rep < 3; ++rep) check_point_on_surface(g, rs, s, rng);
    }
}

TEST_CASE("universal(2,3) has sixteen equations") {
    CHECK(defining_equations(universal_levi_tanaka(2, 3)).k == 16);
}

TEST_CASE("homogeneity check rejects mixed degrees") {
    ModelSurface s;
    s.n = 1;
    s.k = 1;
    s.weights = {2};
    Polynomial p(3);
    p.add_term({1, 1, 0}, GaussianRational(1));
    p.add_term({1, 0, 0}, GaussianRational(1));  // z_1 alone
    s.equations.push_back(p);
    CHECK_FALSE(check_homogeneity(s));
}

TEST_CASE("degenerate input is rejected before elimination") {
    // A quadric whose Levi form is degenerate cannot arise from
    // universal_levi_tanaka, so build one by quotienting away too much: the
    // whole depth-2 of universal(1,2) is forbidden ("length would drop"), so
    // check the guard directly on an algebra without complex structure.
    CHECK_THROWS_AS(defining_equations(free_nilpotent(2, 2)), std::invalid_argument);
}
