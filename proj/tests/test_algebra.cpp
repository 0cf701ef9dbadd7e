#include <doctest.h>

#include "cycperm/errors.hpp"
#include "cycperm/numbers.hpp"
#include "cycperm/poly.hpp"
#include "cycperm/series.hpp"

using namespace cycperm;

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, -1) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK_THROWS_AS(fibonacci(0), InvalidInput);
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(6) == 132);
}

TEST_CASE("polynomial arithmetic and printing") {
    const IntPolynomial p({0, 1, 2, 1});  // q + 2q^2 + q^3
    CHECK(p.str() == "q + 2q^2 + q^3");
    CHECK(p.degree() == 3);
    CHECK(p.low_degree() == 1);
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(7) == 0);
    CHECK(p.eval_at_one() == 4);

    const IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.str() == "0");

    IntPolynomial q;
    q.add_term(1, 1);
    q.add_term(3, 1);
    q.add_term(3, -1);
    CHECK(q == IntPolynomial::monomial(1, 1));
    CHECK_THROWS_AS(q.add_term(-1, 2), InvalidInput);

    CHECK(IntPolynomial({1, 1}) * IntPolynomial({1, 1}) == IntPolynomial({1, 2, 1}));
    CHECK(p - p == zero);
    CHECK(p + zero == p);
    CHECK(poly_pow(IntPolynomial({1, 1}), 3) == IntPolynomial({1, 3, 3, 1}));
    CHECK(poly_pow(p, 0) == IntPolynomial::one());
}

TEST_CASE("coefficient reversal and symmetry") {
    CHECK(reverse_transform(IntPolynomial({0, 1, 3}), 3) == IntPolynomial({0, 3, 1}));
    CHECK(reverse_transform(IntPolynomial::one(), 2) == IntPolynomial::monomial(1, 2));
    CHECK_THROWS_AS(reverse_transform(IntPolynomial({0, 0, 0, 0, 1}), 3), InvalidInput);

    CHECK(is_symmetric(IntPolynomial({0, 1, 2, 1})));
    CHECK(is_symmetric(IntPolynomial()));
    CHECK_FALSE(is_symmetric(IntPolynomial({0, 1, 2})));
}

TEST_CASE("bivariate polynomials") {
    BivarPolynomial b;
    b.add_term(1, 1, 1);
    b.add_term(2, 1, 1);
    b.add_term(2, 1, -1);
    b.add_term(2, 2, 3);
    REQUIRE(b.terms().size() == 2);
    CHECK(b.specialize_t_one() == IntPolynomial({0, 1, 3}));

    BivarPolynomial c;
    c.add_term(2, 2, 3);
    c.add_term(1, 1, 1);
    CHECK(b == c);
}

TEST_CASE("rational series arithmetic") {
    RationalSeries one_plus_x(2, {1, 1, 0});
    RationalSeries one_minus_x(2, {1, -1, 0});
    CHECK(one_plus_x * one_minus_x == RationalSeries(2, {1, 0, -1}));
    CHECK(one_plus_x + one_minus_x == RationalSeries(2, {2, 0, 0}));
    CHECK((one_plus_x - one_plus_x).is_zero());

    RationalSeries s(3);
    s.set_coeff(0, 1);
    s.set_coeff(1, 1);
    s.set_coeff(2, Rat(1, 2));
    CHECK(s.derivative() == RationalSeries(2, {1, 1, 0}));
    CHECK(s.truncated(1) == RationalSeries(1, {1, 1}));
    CHECK(s.coeff(3) == 0);
}

TEST_CASE("series exponential") {
    RationalSeries x(4);
    x.set_coeff(1, 1);
    const RationalSeries e = series_exp(x);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == 1);
    CHECK(e.coeff(2) == Rat(1, 2));
    CHECK(e.coeff(3) == Rat(1, 6));
    CHECK(e.coeff(4) == Rat(1, 24));

    RationalSeries f(3);
    f.set_coeff(1, 1);
    f.set_coeff(2, 1);
    const RationalSeries g = series_exp(f);  // exp(x + x^2)
    CHECK(g.coeff(2) == Rat(3, 2));
    CHECK(g.coeff(3) == Rat(7, 6));

    RationalSeries bad(3);
    bad.set_coeff(0, 1);
    CHECK_THROWS_AS(series_exp(bad), ConventionViolation);
}

TEST_CASE("differential-equation residuals") {
    // e = x: e' - (e^2 - e + 1) = 1 - (x^2 - x + 1) = x - x^2
    RationalSeries e(3);
    e.set_coeff(1, 1);
    CHECK(ode_residual_quadratic(e) == RationalSeries(2, {0, 1, -1}));

    // e = x^2/2: e' - exp(e - x^2/2) = x - 1
    RationalSeries h(3);
    h.set_coeff(2, Rat(1, 2));
    CHECK(ode_residual_exponential(h) == RationalSeries(2, {-1, 1, 0}));

    RationalSeries c(3);
    c.set_coeff(0, 1);
    CHECK_THROWS_AS(ode_residual_exponential(c), ConventionViolation);
}
