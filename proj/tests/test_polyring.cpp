#include <doctest.h>

#include "dqsym/polyring.hpp"
#include "test_support.hpp"

using namespace dqsym;
using dqsym::testing::X;
using dqsym::testing::Y;

TEST_CASE("add cancels and keeps canonical form") {
  CHECK((X(1) - Y(1)) + Y(1) == X(1));
  const Polynomial p = X(1) * X(2) - 3 * Y(4);
  CHECK(p + Polynomial{} == p);
  CHECK(add(p, negate(p)).terms().empty());

  const Polynomial sum = (Y(1) - Y(4)) + (Y(2) - Y(5));
  CHECK(sum == Y(1) + Y(2) - Y(4) - Y(5));
  CHECK(sum.size() == 4);
}

TEST_CASE("mul expands products") {
  const Polynomial lhs = mul(X(1) - Y(1), X(1) - Y(2));
  CHECK(lhs == X(1) * X(1) - (Y(1) + Y(2)) * X(1) + Y(1) * Y(2));
  CHECK(lhs * Polynomial(1) == lhs);
  CHECK(lhs * Polynomial{} == Polynomial{});

  CHECK((Y(1) - Y(6)) * (Y(3) - Y(7)) == Y(1) * Y(3) - Y(1) * Y(7) - Y(3) * Y(6) + Y(6) * Y(7));
}

TEST_CASE("coefficients are arbitrary precision") {
  Polynomial p = pow(Polynomial(2) * X(1), 100);
  Integer expected = 1;
  for (int k = 0; k < 100; ++k) expected *= 2;
  CHECK(p.coefficient(Monomial::of(x_var(1), 100)) == expected);
}

TEST_CASE("substitute") {
  CHECK(substitute(X(1) - Y(1), {{y_var(1), Polynomial{}}}) == X(1));
  CHECK(substitute(X(1) * X(2), {{x_var(1), Polynomial(1)}, {x_var(2), Polynomial(1)}}) ==
        Polynomial(1));

  // z^3 - t z w + w^2 at t=1, z=2, w=1, with t, z, w played by x1, x2, x3.
  const Polynomial rel = pow(X(2), 3) - X(1) * X(2) * X(3) + X(3) * X(3);
  const Polynomial v =
      substitute(rel, {{x_var(1), Polynomial(1)}, {x_var(2), Polynomial(2)}, {x_var(3), Polynomial(1)}});
  CHECK(v == Polynomial(7));

  SUBCASE("simultaneous, not sequential") {
    const Polynomial swapped = substitute(X(1) - X(2), {{x_var(1), X(2)}, {x_var(2), X(1)}});
    CHECK(swapped == X(2) - X(1));
  }
}

TEST_CASE("x_degree_component and coefficient_of_x_monomial") {
  const Polynomial p = X(1) * X(1) + X(1) * Y(1) + Y(2);
  CHECK(x_degree_component(p, 2) == X(1) * X(1));
  CHECK(x_degree_component(p, 1) == X(1) * Y(1));
  CHECK(x_degree_component(p, 0) == Y(2));
  CHECK(x_degree_component(p, 3).is_zero());

  // (x1 + x2 - 2 y1)^2, top x-degree part by hand.
  const Polynomial m1 = X(1) + X(2) - 2 * Y(1);
  CHECK(x_degree_component(m1 * m1, 2) == X(1) * X(1) + 2 * X(1) * X(2) + X(2) * X(2));

  CHECK(coefficient_of_x_monomial(X(1) - Y(1), Monomial::of(x_var(1))) == Polynomial(1));
  CHECK(coefficient_of_x_monomial(X(1) - Y(1), Monomial{}) == -Y(1));
  const Polynomial m2 = (X(1) - Y(1)) * (X(1) - Y(2));
  CHECK(coefficient_of_x_monomial(m2, Monomial::of(x_var(1), 2)) == Polynomial(1));
  CHECK_THROWS_AS(coefficient_of_x_monomial(m2, Monomial::of(y_var(1))), std::invalid_argument);
}

TEST_CASE("monomial invariants") {
  const Monomial m({{2, 1}, {1, 0}, {2, 2}}, {{3, 0}});
  CHECK(m.x_exponents() == ExponentList{{2, 3}});
  CHECK(m.y_exponents().empty());
  CHECK_THROWS_AS(Monomial({{0, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(x_var(0), std::invalid_argument);
}

TEST_CASE("canonical term order is graded lex, x before y") {
  const Polynomial p = Y(1) + X(1) + X(2) * X(2) + X(1) * Y(3) + Polynomial(4) + Y(2) * Y(1);
  std::vector<std::string> order;
  for (const auto& [m, c] : p.terms()) order.push_back(to_string(m));
  CHECK(order == std::vector<std::string>{"x1*y3", "x2^2", "y1*y2", "x1", "y1", "1"});
  CHECK(to_string(Y(2) - Y(1)) == "-y1 + y2");
  CHECK(to_string(Polynomial{}) == "0");
}

TEST_CASE("ring axioms on random polynomials (property)") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned nx = 3, ny = 3;
    const auto p = testing::random_polynomial(rng, nx, ny, 4, 5);
    const auto q = testing::random_polynomial(rng, nx, ny, 4, 5);
    const auto r = testing::random_polynomial(rng, nx, ny, 4, 5);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).terms().empty());

    // The evaluator reads raw terms, so it checks the arithmetic independently.
    const auto pt = testing::random_point(rng, nx, ny);
    CHECK(testing::evaluate(p * q, pt) == testing::evaluate(p, pt) * testing::evaluate(q, pt));
    CHECK(testing::evaluate(p + q, pt) == testing::evaluate(p, pt) + testing::evaluate(q, pt));

    const Polynomial pq = p * q;
    for (const auto& [m, c] : pq.terms()) CHECK(c != 0);

    Polynomial recombined;
    for (unsigned d = 0; d <= 8; ++d) recombined += x_degree_component(p * q, d);
    CHECK(recombined == p * q);
  }
}

TEST_CASE("substitute commutes with add and mul (property)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_polynomial(rng, 2, 3, 3, 4);
    const auto q = testing::random_polynomial(rng, 2, 3, 3, 4);
    const Assignment sigma{{x_var(1), Y(2) - X(2)},
                           {y_var(3), Polynomial(2)},
                           {y_var(1), testing::random_polynomial(rng, 2, 3, 2, 3)}};
    CHECK(substitute(p + q, sigma) == substitute(p, sigma) + substitute(q, sigma));
    CHECK(substitute(p * q, sigma) == substitute(p, sigma) * substitute(q, sigma));
    CHECK(specialize_y_to_zero(p * q) == specialize_y_to_zero(p) * specialize_y_to_zero(q));
  }
}
