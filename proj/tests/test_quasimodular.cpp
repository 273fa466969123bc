#include <catch_amalgamated.hpp>

#include "ellcov/integrals.hpp"
#include "ellcov/quasimodular.hpp"
#include "fixtures.hpp"

using namespace ellcov;

namespace {

std::vector<Rational> scaled(long num, long den, std::vector<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(Rational(Integer(num * x), Integer(den)));
  return out;
}

ErrorCode fit_error(const QSeries& s, int g) {
  try {
    fit(s, g);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("fit accepted the series");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("divisor sums") {
  CHECK(sigma_k(1, 6) == 12);
  CHECK(sigma_k(3, 2) == 9);
  CHECK(sigma_k(0, 12) == 6);
  CHECK_THROWS_AS(sigma_k(1, 0), Error);
}

TEST_CASE("Eisenstein series in q^2") {
  const auto e2 = eisenstein(2, 13), e4 = eisenstein(4, 13), e6 = eisenstein(6, 13);
  CHECK(e2[0] == 1);
  CHECK(e2[2] == -24);
  CHECK(e2[6] == -96);
  CHECK(e4[0] == 1);
  CHECK(e4[2] == 240);
  CHECK(e4[4] == 2160);
  CHECK(e6[2] == -504);
  CHECK(e2.odd_coefficients_vanish());
  CHECK_THROWS_AS(eisenstein(8, 4), Error);
  CHECK(eisenstein(4, 0).precision() == 0);
}

TEST_CASE("the discriminant has Ramanujan tau coefficients") {
  // (E4^3 - E6^2) / 1728 = q^2 - 24 q^4 + 252 q^6 - 1472 q^8 + 4830 q^10.
  const std::size_t P = 11;
  auto e4 = eisenstein(4, P), e6 = eisenstein(6, P);
  auto delta = Rational(1, 1728) * (e4 * e4 * e4 + Rational(-1) * (e6 * e6));
  CHECK(delta.coefficients() ==
        QSeries::from_even({0, 1, -24, 252, -1472, 4830}).coefficients());
}

TEST_CASE("weight bases") {
  const std::vector<EisensteinMonomial> w12{{0, 0, 2}, {0, 3, 0}, {1, 1, 1}, {2, 2, 0},
                                            {3, 0, 1}, {4, 1, 0}, {6, 0, 0}};
  CHECK(weight_basis(12) == w12);
  CHECK(weight_basis(6).size() == 3);
  CHECK(weight_basis(18).size() == 12);
  for (int w : {0, 2, 6, 12, 18, 24}) {
    for (const auto& m : weight_basis(w)) CHECK(2 * m[0] + 4 * m[1] + 6 * m[2] == w);
  }
  CHECK_THROWS_AS(weight_basis(5), Error);
}

TEST_CASE("fit of the genus 3 graph series") {
  const auto s1 = i_gamma_series(fixtures::raupe(), 8);
  const auto r1 = fit(s1, 3);
  CHECK(r1.coeffs == scaled(16, 1492992, {4, 4, -12, -3, 4, 6, -3}));
  CHECK(eval_rep(r1, 17) == s1);
  CHECK(to_string(r1) ==
        "1/93312*(4*E6^2+4*E4^3-12*E2*E4*E6-3*E2^2*E4^2+4*E2^3*E6+6*E2^4*E4-3*E2^6)");

  const auto s2 = i_gamma_series(fixtures::k4(), 8);
  const auto r2 = fit(s2, 3);
  CHECK(r2.coeff({0, 3, 0}) == Rational(24 * 3, 1492992));
  CHECK(r2.coeff({2, 2, 0}) == Rational(24 * -9, 1492992));
  CHECK(r2.coeff({4, 1, 0}) == Rational(24 * 9, 1492992));
  CHECK(r2.coeff({6, 0, 0}) == Rational(24 * -3, 1492992));
  CHECK(r2.coeff({0, 0, 2}) == 0);
  CHECK(r2.coeff({1, 1, 1}) == 0);
  CHECK(r2.coeff({3, 0, 1}) == 0);
  CHECK(eval_rep(r2, 17)[8] == 20736);
}

TEST_CASE("overdetermined fits agree with the square fit") {
  for (const auto& g : {fixtures::raupe(), fixtures::k4()}) {
    const auto full = i_gamma_series(g, 8);
    CHECK(fit(full.truncated(13), 3) == fit(full, 3));
  }
}

TEST_CASE("F3 fit") {
  const auto f3 = f_g(3, 8);
  const auto rep = fit(f3, 3);
  CHECK(rep.coeffs == scaled(1, 1492992, {4, 7, -12, -12, 4, 15, -6}));
  CHECK(eval_rep(rep, 17) == f3);
}

TEST_CASE("zero series and failure modes") {
  CHECK(fit(QSeries(13), 3).is_zero());
  CHECK(eval_rep(fit(QSeries(13), 3), 9) == QSeries(9));
  CHECK(fit_error(QSeries(11), 3) == ErrorCode::Underdetermined);
  auto bad = i_gamma_series(fixtures::raupe(), 8);
  bad.at(16) += 1;
  CHECK(fit_error(bad, 3) == ErrorCode::Inconsistent);
  auto odd = QSeries(13);
  odd.at(3) = 1;
  CHECK(fit_error(odd, 3) == ErrorCode::Inconsistent);
}

TEST_CASE("genus 2 fit round trip") {
  const auto f2 = f_g(2, 6);
  const auto rep = fit(f2, 2);
  CHECK(rep.basis.size() == 3);
  CHECK(eval_rep(rep, f2.precision()) == f2);
}
