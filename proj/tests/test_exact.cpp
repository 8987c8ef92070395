#include <catch2/catch_amalgamated.hpp>

#include "levitan/linalg.hpp"
#include "test_util.hpp"

using namespace levitan;
using testutil::SplitMix64;

TEST_CASE("rational canonical form and serialization") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("rational arithmetic round-trips") {
    SplitMix64 rng(101);
    for (int k = 0; k < 200; ++k) {
        Rational a = testutil::rand_rational(rng);
        Rational b = testutil::rand_rational(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a / b) * (b / a) == Rational(1));
    }
}

TEST_CASE("gaussian rational conjugation distributes") {
    SplitMix64 rng(7);
    for (int k = 0; k < 200; ++k) {
        GaussianRational x = testutil::rand_gaussian(rng);
        GaussianRational y = testutil::rand_gaussian(rng);
        CHECK(conj(x * y) == conj(x) * conj(y));
        CHECK(conj(x + y) == conj(x) + conj(y));
        CHECK(conj(conj(x)) == x);
        CHECK(x * y == y * x);
    }
    GaussianRational a = testutil::rand_gaussian(rng);
    GaussianRational b = testutil::rand_gaussian(rng);
    GaussianRational c = testutil::rand_gaussian(rng);
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("null space: identity, zero map, gaussian elimination case") {
    CHECK(null_space(Matrix::identity(3)).dim() == 0);
    CHECK(null_space(Matrix(2, 5)).dim() == 5);

    // [[1, i], [-i, 1]] has rank 1; kernel spanned by (-i, 1) up to scaling.
    Matrix m(2, 2);
    m.at(0, 0) = GaussianRational(1);
    m.at(0, 1) = GaussianRational::i();
    m.at(1, 0) = -GaussianRational::i();
    m.at(1, 1) = GaussianRational(1);
    Subspace ns = null_space(m);
    REQUIRE(ns.dim() == 1);
    CHECK(ns.contains(Vec{-GaussianRational::i(), GaussianRational(1)}));
}

TEST_CASE("null space: empty matrix yields full ambient space") {
    CHECK(null_space(Matrix(0, 4)).dim() == 4);
}

TEST_CASE("solve: identity, inconsistent, diagonal") {
    SplitMix64 rng(55);
    Vec b = testutil::rand_vec(rng, 4);
    auto x = solve(Matrix::identity(4), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK_FALSE(solve(Matrix(2, 3), Vec{GaussianRational(1), GaussianRational(0)}).has_value());

    Matrix d(2, 2);
    d.at(0, 0) = GaussianRational(2);
    d.at(1, 1) = GaussianRational(3);
    auto y = solve(d, Vec{GaussianRational(1), GaussianRational(1)});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{GaussianRational(Rational(1, 2)), GaussianRational(Rational(1, 3))});

    CHECK_THROWS_AS(solve(d, Vec{GaussianRational(1)}), std::invalid_argument);
}

TEST_CASE("solve composes back and is deterministic") {
    SplitMix64 rng(99);
    for (int k = 0; k < 30; ++k) {
        Matrix m = testutil::rand_matrix(rng, 4, 6);
        Vec x0 = testutil::rand_vec(rng, 6);
        Vec b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
        auto again = solve(m, b);
        CHECK(*again == *x);
    }
}

TEST_CASE("rank-nullity on random matrices") {
    SplitMix64 rng(2024);
    for (int k = 0; k < 30; ++k) {
        std::size_t rows = 1 + rng.next() % 5;
        std::size_t cols = 1 + rng.next() % 6;
        Matrix m = testutil::rand_matrix(rng, rows, cols);
        CHECK(rank(m) + null_space(m).dim() == cols);
    }
}

TEST_CASE("subspace intersection: trivial cases") {
    Subspace full = Subspace::full(3);
    std::vector<Vec> bvecs = {Vec{GaussianRational(1), GaussianRational(2), GaussianRational(0)},
                              Vec{GaussianRational(0), GaussianRational(1), GaussianRational(5)}};
    Subspace b = Subspace::span(bvecs, 3);
    CHECK(intersect(full, b) == b);

    Vec e1 = unit_vec(3, 0), e2 = unit_vec(3, 1), e3 = unit_vec(3, 2);
    Subspace a12 = Subspace::span({e1, e2}, 3);
    Subspace a23 = Subspace::span({e2, e3}, 3);
    Subspace meet = intersect(a12, a23);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(e2));

    CHECK_THROWS_AS(intersect(Subspace::full(2), Subspace::full(3)), std::invalid_argument);
}

TEST_CASE("subspace intersection dimension formula") {
    SplitMix64 rng(31337);
    for (int k = 0; k < 25; ++k) {
        Subspace a = Subspace::from_matrix(testutil::rand_matrix(rng, 3, 5));
        Subspace b = Subspace::from_matrix(testutil::rand_matrix(rng, 3, 5));
        Subspace meet = intersect(a, b);
        Subspace join = sum(a, b);
        CHECK(meet.dim() == a.dim() + b.dim() - join.dim());
        if (a.dim() == 3 && b.dim() == 3) CHECK(meet.dim() >= 1);
        CHECK(a.contains(meet));
        CHECK(b.contains(meet));
    }
}

TEST_CASE("null space basis is reduced and canonical") {
    SplitMix64 rng(4242);
    for (int k = 0; k < 10; ++k) {
        Matrix m = testutil::rand_matrix(rng, 3, 6);
        Subspace s1 = null_space(m);
        Subspace s2 = null_space(m);
        CHECK(s1.basis().str() == s2.basis().str());
        // Span the same space from scrambled combinations: canonical basis agrees.
        std::vector<Vec> mixed;
        for (std::size_t r = 0; r < s1.dim(); ++r) {
            Vec v = s1.basis().row(r);
            if (r + 1 < s1.dim()) add_scaled(v, testutil::rand_gaussian(rng), s1.basis().row(r + 1));
            mixed.push_back(scaled(std::move(v), GaussianRational(Rational(3, 2))));
        }
        Subspace s3 = Subspace::span(mixed, 6);
        CHECK(s3.basis().str() == s1.basis().str());
    }
}
