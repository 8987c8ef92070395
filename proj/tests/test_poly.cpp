#include <catch2/catch_amalgamated.hpp>

#include "levitan/poly.hpp"

using namespace levitan;

TEST_CASE("polynomial arithmetic basics") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);
    Polynomial p = (x + y) * (x - y);
    Polynomial q = x * x - y * y;
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.coeff({2, 0}) == GaussianRational(1));
    CHECK(p.coeff({0, 2}) == GaussianRational(-1));
    CHECK(p.coeff({1, 1}).is_zero());
    CHECK((x * GaussianRational(Rational(0))).is_zero());
}

TEST_CASE("polynomial derivative") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);
    Polynomial p = x.pow(3) * y + x * GaussianRational(Rational(2));
    Polynomial dx = p.derivative(0);
    CHECK(dx == x.pow(2) * y * GaussianRational(Rational(3)) +
                    Polynomial::constant(2, GaussianRational(Rational(2))));
    CHECK(p.derivative(1) == x.pow(3));
}

TEST_CASE("polynomial substitution") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);
    Polynomial p = x * x + y;
    // x -> u + v, y -> u v in a 2-variable target ring
    Polynomial u = Polynomial::variable(2, 0);
    Polynomial v = Polynomial::variable(2, 1);
    Polynomial got = p.substitute({u + v, u * v});
    CHECK(got == u * u + u * v * GaussianRational(Rational(3)) + v * v);
}

TEST_CASE("polynomial weighted homogeneity") {
    Polynomial z = Polynomial::variable(3, 0);
    Polynomial zb = Polynomial::variable(3, 1);
    Polynomial u = Polynomial::variable(3, 2);
    std::vector<unsigned> w{1, 1, 2};
    CHECK((z * zb).is_homogeneous(w, 2));
    CHECK((z * z * zb + u * z).is_homogeneous(w, 3));
    CHECK_FALSE((z * zb + z).is_homogeneous(w, 2));
}

TEST_CASE("polynomial variable remap") {
    Polynomial p = Polynomial::variable(2, 0) * Polynomial::variable(2, 1).pow(2);
    Polynomial q = p.remap_variables({1, 0}, 2);
    CHECK(q == Polynomial::variable(2, 1) * Polynomial::variable(2, 0).pow(2));
}
