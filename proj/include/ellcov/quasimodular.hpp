#pragma once

// Quasimodular forms in Q[E2, E4, E6], written in q^2: E_k here stands for
// E_k(q^2), so the coefficient of q^{2n} is the usual n-th coefficient.

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "ellcov/error.hpp"
#include "ellcov/qseries.hpp"
#include "ellcov/rational.hpp"

namespace ellcov {

/// sigma_k(n) = sum of d^k over the divisors d of n.
inline Integer sigma_k(int k, int n) {
  if (n < 1 || k < 0) throw Error(ErrorCode::InvalidArgument, "sigma_k needs n >= 1, k >= 0");
  Integer s(0);
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p(1);
    for (int i = 0; i < k; ++i) p *= d;
    s += p;
  }
  return s;
}

/// E_2, E_4 or E_6 in q^2, coefficients of q^0 .. q^{precision-1}.
inline QSeries eisenstein(int weight, std::size_t precision) {
  long scale = 0;
  switch (weight) {
    case 2: scale = -24; break;
    case 4: scale = 240; break;
    case 6: scale = -504; break;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "Eisenstein weight must be 2, 4 or 6");
  }
  QSeries s(precision);
  if (precision == 0) return s;
  s.at(0) = 1;
  for (std::size_t m = 2; m < precision; m += 2) {
    s.at(m) = Rational(Integer(scale) * sigma_k(weight - 1, static_cast<int>(m / 2)));
  }
  return s;
}

/// Exponents (i, j, k) of E2^i E4^j E6^k.
using EisensteinMonomial = std::array<int, 3>;

/// Monomials of weight w, i ascending then j ascending:
/// weight 12 gives E6^2, E4^3, E2E4E6, E2^2E4^2, E2^3E6, E2^4E4, E2^6.
inline std::vector<EisensteinMonomial> weight_basis(int w) {
  if (w < 0 || w % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "weight must be even and >= 0");
  }
  std::vector<EisensteinMonomial> out;
  for (int i = 0; 2 * i <= w; ++i) {
    for (int j = 0; 2 * i + 4 * j <= w; ++j) {
      const int rest = w - 2 * i - 4 * j;
      if (rest % 6 == 0) out.push_back({i, j, rest / 6});
    }
  }
  return out;
}

inline QSeries eisenstein_monomial(const EisensteinMonomial& m,
                                   std::size_t precision) {
  QSeries s(precision);
  if (precision == 0) return s;
  s.at(0) = 1;
  const int weights[3] = {2, 4, 6};
  for (int v = 0; v < 3; ++v) {
    if (m[v] == 0) continue;
    const auto e = eisenstein(weights[v], precision);
    for (int p = 0; p < m[v]; ++p) s = s * e;
  }
  return s;
}

struct QuasimodularRep {
  int weight = 0;
  std::vector<EisensteinMonomial> basis;
  std::vector<Rational> coeffs;  // parallel to basis

  Rational coeff(const EisensteinMonomial& m) const {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b] == m) return coeffs[b];
    }
    return Rational(0);
  }
  bool is_zero() const {
    for (const auto& c : coeffs) {
      if (c != 0) return false;
    }
    return true;
  }
  bool operator==(const QuasimodularRep&) const = default;
};

inline std::string monomial_string(const EisensteinMonomial& m) {
  std::string s;
  const char* names[3] = {"E2", "E4", "E6"};
  for (int v = 0; v < 3; ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[v];
    if (m[v] != 1) s += '^' + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

/// "1/93312*(4*E6^2+4*E4^3-12*E2*E4*E6+...)": the positive rational content
/// is pulled out so the bracket has coprime integer coefficients.
inline std::string to_string(const QuasimodularRep& rep) {
  if (rep.is_zero()) return "0";
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : rep.coeffs) {
    if (c == 0) continue;
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(boost::multiprecision::numerator(c)));
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  }
  const Rational content(num_gcd, den_lcm);
  std::ostringstream os;
  if (content != 1) os << content.str() << "*(";
  bool first = true;
  for (std::size_t b = 0; b < rep.basis.size(); ++b) {
    const auto& c = rep.coeffs[b];
    if (c == 0) continue;
    const Rational k = c / content;
    if (!first && k > 0) os << '+';
    first = false;
    if (k == -1) {
      os << '-';
    } else if (k != 1) {
      os << k.str() << '*';
    }
    os << monomial_string(rep.basis[b]);
  }
  if (content != 1) os << ')';
  return os.str();
}

/// Expands a representation back into a q-series.
inline QSeries eval_rep(const QuasimodularRep& rep, std::size_t precision) {
  QSeries s(precision);
  for (std::size_t b = 0; b < rep.basis.size(); ++b) {
    if (rep.coeffs[b] == 0) continue;
    s = s + rep.coeffs[b] * eisenstein_monomial(rep.basis[b], precision);
  }
  return s;
}

/// The unique weight 6g-6 combination matching `series` at every supplied
/// coefficient. Surplus coefficients beyond the basis size are checked,
/// not ignored.
inline QuasimodularRep fit(const QSeries& series, int g) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "genus must be >= 2");
  QuasimodularRep rep;
  rep.weight = 6 * g - 6;
  rep.basis = weight_basis(rep.weight);
  const auto m = rep.basis.size();
  const auto precision = series.precision();
  const auto rows = (precision + 1) / 2;  // coefficients of q^0, q^2, ...
  if (rows < m) {
    throw Error(ErrorCode::Underdetermined,
                std::to_string(rows) + " q^2-coefficients for " +
                    std::to_string(m) + " unknowns");
  }
  if (!series.odd_coefficients_vanish()) {
    throw Error(ErrorCode::Inconsistent, "odd powers of q present");
  }

  // Augmented matrix [A | s], A[r][b] = coefficient of q^{2r} in basis b.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m + 1));
  for (std::size_t b = 0; b < m; ++b) {
    const auto col = eisenstein_monomial(rep.basis[b], precision);
    for (std::size_t r = 0; r < rows; ++r) a[r][b] = col[2 * r];
  }
  for (std::size_t r = 0; r < rows; ++r) a[r][m] = series[2 * r];

  std::vector<std::size_t> pivot_row(m);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) {
      throw Error(ErrorCode::Underdetermined,
                  "coefficient of " + monomial_string(rep.basis[c]) +
                      " not determined by the supplied terms");
    }
    std::swap(a[p], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t k = c; k <= m; ++k) a[rank][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_row[c] = rank++;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (a[r][m] != 0) {
      throw Error(ErrorCode::Inconsistent,
                  "q^" + std::to_string(2 * r) +
                      " coefficient contradicts the weight " +
                      std::to_string(rep.weight) + " fit");
    }
  }
  rep.coeffs.resize(m);
  for (std::size_t c = 0; c < m; ++c) rep.coeffs[c] = a[pivot_row[c]][m];
  return rep;
}

}  // namespace ellcov
