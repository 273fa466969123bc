#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "ellcov/error.hpp"
#include "ellcov/rational.hpp"

namespace ellcov {

/// Truncated power series sum_{n < precision} c_n q^n + O(q^precision).
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::size_t precision)
      : coeffs_(precision, Rational(0)) {}
  explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Series in q^2: coefficient k of `even` multiplies q^{2k}.
  static QSeries from_even(const std::vector<Rational>& even) {
    QSeries s(even.empty() ? 0 : 2 * even.size() - 1);
    for (std::size_t k = 0; k < even.size(); ++k) s.coeffs_[2 * k] = even[k];
    return s;
  }

  std::size_t precision() const noexcept { return coeffs_.size(); }

  Rational operator[](std::size_t n) const {
    if (n >= coeffs_.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "coefficient q^" + std::to_string(n) +
                      " beyond precision " + std::to_string(coeffs_.size()));
    }
    return coeffs_[n];
  }
  Rational& at(std::size_t n) { return coeffs_.at(n); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool odd_coefficients_vanish() const {
    for (std::size_t n = 1; n < coeffs_.size(); n += 2) {
      if (coeffs_[n] != 0) return false;
    }
    return true;
  }

  QSeries truncated(std::size_t precision) const {
    QSeries s = *this;
    if (precision < s.coeffs_.size()) s.coeffs_.resize(precision);
    return s;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.precision(), b.precision()));
    for (std::size_t n = 0; n < s.precision(); ++n) {
      s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    }
    return s;
  }

  friend QSeries operator*(const Rational& c, const QSeries& a) {
    QSeries s = a;
    for (auto& x : s.coeffs_) x *= c;
    return s;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.precision(), b.precision()));
    for (std::size_t i = 0; i < s.precision(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < s.precision(); ++j) {
        s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return s;
  }

  bool operator==(const QSeries&) const = default;

  /// "32*q^4+1792*q^6+O(q^8)"; the zero series prints as "0+O(q^n)".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      const auto& c = coeffs_[n];
      if (c == 0) continue;
      if (!first && c > 0) os << '+';
      first = false;
      if (n == 0) {
        os << c.str();
      } else {
        if (c == -1) {
          os << '-';
        } else if (c != 1) {
          os << c.str() << '*';
        }
        os << 'q';
        if (n != 1) os << '^' << n;
      }
    }
    if (first) os << '0';
    os << "+O(q^" << coeffs_.size() << ')';
    return os.str();
  }

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace ellcov
