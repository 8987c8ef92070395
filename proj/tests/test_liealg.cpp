#include <catch2/catch_amalgamated.hpp>

#include "levitan/liealg.hpp"
#include "test_util.hpp"

using namespace levitan;

namespace {

// Heisenberg plus a central degree -1 line: the extra generator brackets to
// zero, so the algebra is Levi degenerate.
GradedLieAlgebra heisenberg_plus_line() {
    GradedLieAlgebra::Data d;
    d.n = 0;
    d.l = 2;
    d.labels = {{"e1", "e2", "e3"}, {"c"}};
    d.brackets.assign(2, std::vector<std::vector<Vec>>(2));
    auto& t = d.brackets[0][0];
    t.assign(9, Vec(1));
    t[0 * 3 + 1] = Vec{GaussianRational(1)};
    t[1 * 3 + 0] = Vec{GaussianRational(-1)};
    d.sigma = {Matrix::identity(3), Matrix::identity(1)};
    return GradedLieAlgebra(d);
}

}  // namespace

TEST_CASE("free nilpotent: rank 2 class 2 is Heisenberg") {
    GradedLieAlgebra g = free_nilpotent(2, 2);
    REQUIRE(g.depth_dims() == std::vector<std::size_t>{2, 1});
    CHECK(g.labels(2)[0] == "z1 z2");
    CHECK(g.bracket_basis(1, 0, 1, 1) == Vec{GaussianRational(1)});
    CHECK(g.bracket_basis(1, 1, 1, 0) == Vec{GaussianRational(-1)});
    CHECK(antisymmetry_holds(g));
    CHECK(jacobi_holds(g));
}

TEST_CASE("free nilpotent dimensions match Witt counts") {
    CHECK(free_nilpotent(2, 3).depth_dims() == std::vector<std::size_t>{2, 1, 2});
    CHECK(free_nilpotent(4, 3).depth_dims() == std::vector<std::size_t>{4, 6, 20});
}

TEST_CASE("free nilpotent satisfies Lie axioms and is fundamental") {
    for (auto [gen, l] : {std::pair<unsigned, unsigned>{2, 4}, {3, 3}}) {
        GradedLieAlgebra g = free_nilpotent(gen, l);
        CHECK(antisymmetry_holds(g));
        CHECK(jacobi_holds(g));
        CHECK(is_fundamental(g));
        CHECK(sigma_compatible(g));
    }
}

TEST_CASE("universal Levi-Tanaka dimensions") {
    CHECK(universal_levi_tanaka(1, 2).depth_dims() == std::vector<std::size_t>{2, 1});
    CHECK(universal_levi_tanaka(1, 3).depth_dims() == std::vector<std::size_t>{2, 1, 2});
    CHECK(universal_levi_tanaka(2, 3).depth_dims() == std::vector<std::size_t>{4, 4, 12});
}

TEST_CASE("universal Levi-Tanaka structure") {
    for (auto [n, l] : {std::pair<unsigned, unsigned>{1, 3}, {2, 3}, {1, 4}}) {
        GradedLieAlgebra g = universal_levi_tanaka(n, l);
        CHECK(antisymmetry_holds(g));
        CHECK(jacobi_holds(g));
        CHECK(is_fundamental(g));
        CHECK(sigma_compatible(g));
        CHECK(complex_structure_compatible(g));
        CHECK(levi_nondegenerate(g));
        for (unsigned d = 2; d <= l; ++d) CHECK(g.dim(d) == count_admissible(n, d));
        // The +-i eigenspaces of I are abelian.
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                CHECK(is_zero_vec(g.bracket_basis(1, i, 1, j)));
                CHECK(is_zero_vec(g.bracket_basis(1, n + i, 1, n + j)));
            }
    }
}

TEST_CASE("levi nondegeneracy counterexamples") {
    CHECK_FALSE(levi_nondegenerate(free_nilpotent(1, 1)));
    CHECK_FALSE(levi_nondegenerate(heisenberg_plus_line()));
}

TEST_CASE("quotient by the zero subspace is the identity") {
    GradedLieAlgebra g = universal_levi_tanaka(2, 3);
    GradedLieAlgebra q = quotient_by_subspace(g, Subspace::zero(g.dim(3)));
    CHECK(q.depth_dims() == g.depth_dims());
    CHECK(q.labels(3) == g.labels(3));
}

TEST_CASE("quotient of universal(1,3) by the sigma-fixed line") {
    GradedLieAlgebra g = universal_levi_tanaka(1, 3);
    REQUIRE(g.labels(3) == std::vector<std::string>{"z1 z1 Z1", "z1 Z1 Z1"});
    // sigma swaps the two depth-3 basis words, so their sum spans a real line.
    Vec v{GaussianRational(1), GaussianRational(1)};
    CHECK(g.sigma_apply(3, v) == v);
    GradedLieAlgebra q = quotient_by_subspace(g, Subspace::span({v}, 2));
    CHECK(q.depth_dims() == std::vector<std::size_t>{2, 1, 1});
    CHECK(jacobi_holds(q));
    CHECK(antisymmetry_holds(q));
    CHECK(sigma_compatible(q));
    CHECK(is_fundamental(q));
    CHECK(levi_nondegenerate(q));
}

TEST_CASE("quotient bookkeeping and error cases") {
    GradedLieAlgebra g = universal_levi_tanaka(2, 3);
    // Any sigma-fixed real vector gives a codimension-1 drop.
    testutil::SplitMix64 rng(5);
    Vec v = testutil::rand_vec(rng, g.dim(3));
    Vec real = v;
    add_scaled(real, GaussianRational(1), g.sigma_apply(3, v));
    REQUIRE_FALSE(is_zero_vec(real));
    GradedLieAlgebra q = quotient_by_subspace(g, Subspace::span({real}, g.dim(3)));
    CHECK(q.depth_dims() == std::vector<std::size_t>{4, 4, 11});

    // Not sigma-invariant: the line through a single word basis vector of
    // universal(1,3) maps to the other word under sigma.
    GradedLieAlgebra h = universal_levi_tanaka(1, 3);
    CHECK_THROWS_WITH(quotient_by_subspace(h, Subspace::span({unit_vec(2, 0)}, 2)),
                      "subspace not real");
    CHECK_THROWS_WITH(quotient_by_subspace(h, Subspace::full(2)), "length would drop");
}

TEST_CASE("bloom-graham type") {
    GradedLieAlgebra g = universal_levi_tanaka(2, 3);
    std::vector<unsigned> expect(4, 2);
    expect.insert(expect.end(), 12, 3);
    CHECK(bloom_graham_type(g) == expect);
}

TEST_CASE("thm2 dimension condition") {
    CHECK(check_thm2_condition(universal_levi_tanaka(1, 2), 2));
    CHECK(check_thm2_condition(universal_levi_tanaka(2, 3), 3));
    CHECK(check_thm2_condition(universal_levi_tanaka(1, 4), 4));
    GradedLieAlgebra g = universal_levi_tanaka(2, 4);
    testutil::SplitMix64 rng(17);
    Vec v = testutil::rand_vec(rng, g.dim(4));
    Vec real = v;
    add_scaled(real, GaussianRational(1), g.sigma_apply(4, v));
    GradedLieAlgebra q = quotient_by_subspace(g, Subspace::span({real}, g.dim(4)));
    CHECK(check_thm2_condition(q, 3));  // l+2 = 6 <= 2K = 6; depths -2, -3 untouched
    CHECK_THROWS_AS(check_thm2_condition(g, 1), std::invalid_argument);
}
