#include <catch_amalgamated.hpp>

#include "ellcov/propagator.hpp"
#include "fixtures.hpp"

using namespace ellcov;

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<int>{1});
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<int>{1, 7});
}

TEST_CASE("rational forms as printed by Singular") {
  CHECK(rational_form(propagator_coeff(2, 0, 1, 0)) ==
        "(x(1)^2*x(2)^2)/(x(1)^4-2*x(1)^2*x(2)^2+x(2)^4)");
  CHECK(rational_form(propagator_coeff(2, 0, 1, 3)) ==
        "(3*x(1)^12+x(1)^8*x(2)^4+x(1)^4*x(2)^8+3*x(2)^12)/(x(1)^6*x(2)^6)");
}

TEST_CASE("positive degree coefficients") {
  // d = 2: 1 (x^2/y^2 + y^2/x^2) + 2 (x^4/y^4 + y^4/x^4)
  auto p = std::get<Laurent>(propagator_coeff(2, 0, 1, 2));
  CHECK(p.size() == 4);
  CHECK(p.coeff(Laurent::monomial(2, {2, -2}).terms()[0].first) == 1);
  CHECK(p.coeff(Laurent::monomial(2, {-4, 4}).terms()[0].first) == 2);
  for (int d = 1; d <= 6; ++d) {
    CHECK(std::get<Laurent>(propagator_coeff(3, 0, 2, d)) ==
          std::get<Laurent>(propagator_coeff(3, 2, 0, d)));
  }
}

TEST_CASE("loops and bad input") {
  CHECK_THROWS_AS(propagator_coeff(2, 1, 1, 2), Error);
  CHECK_THROWS_AS(propagator_coeff(2, 0, 1, -1), Error);
  CHECK_THROWS_AS(expand_zero_term(2, 0, 1, 0), Error);
  try {
    edge_factor(fixtures::dumbbell(), 0, 1, VertexOrder::identity(2), 3);
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopEdge);
  }
}

TEST_CASE("zero-degree expansion inverts (1 - t)^2 up to truncation") {
  // With t = x^2 / y^2: sum_{w<=W} w t^w (1 - t)^2 = t - (W+1) t^{W+1} + W t^{W+2}.
  for (int W : {1, 3, 6}) {
    auto s = expand_zero_term(2, 0, 1, W);
    auto one_minus_t = Laurent::constant(2, Rational(1)) - Laurent::monomial(2, {2, -2});
    auto prod = s * one_minus_t * one_minus_t;
    auto expected = Laurent::monomial(2, {2, -2}) -
                    Laurent::monomial(2, {2 * (W + 1), -2 * (W + 1)}, Rational(W + 1)) +
                    Laurent::monomial(2, {2 * (W + 2), -2 * (W + 2)}, Rational(W));
    CHECK(prod == expected);
  }
}

TEST_CASE("edge factor orientation follows the vertex order") {
  const auto g = fixtures::raupe();
  auto f = edge_factor(g, 0, 0, fixtures::order({3, 1, 2, 4}), 2);
  // Edge {1,3} with x3 first: (x3/x1)^2 + 2 (x3/x1)^4.
  CHECK(f.expansion == Laurent::from_terms(4, {{Laurent::monomial(4, {-2, 0, 2, 0}).terms()[0].first, Rational(1)},
                                              {Laurent::monomial(4, {-4, 0, 4, 0}).terms()[0].first, Rational(2)}}));
  auto r = edge_factor(g, 0, 0, fixtures::order({1, 3, 2, 4}), 2);
  CHECK(r.expansion == f.expansion.swapped(0, 2));
}

TEST_CASE("graded edge series collects all degree coefficients") {
  const auto g = fixtures::theta();
  const auto order = VertexOrder::identity(2);
  const int D = 4;
  auto s = graded_edge_series(g, 0, order, D);
  for (int d = 0; d <= D; ++d) {
    auto slice = s.coeff_in(2, d);
    Laurent expected(3);
    if (d == 0) {
      expected = expand_zero_term(3, 0, 1, D);
    } else {
      expected = std::get<Laurent>(propagator_coeff(3, 0, 1, d));
    }
    CHECK(slice == expected);
  }
  CHECK(s.coeff_in(2, D + 1).is_zero());
}
