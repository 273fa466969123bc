#pragma once

// Sparse multivariate Laurent polynomials with exact coefficients.
//
// A polynomial has a fixed arity (number of variables, at most kMaxArity).
// Terms are kept sorted by exponent vector with no zero coefficients, so two
// polynomials are equal iff their term lists are equal.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ellcov/error.hpp"
#include "ellcov/rational.hpp"

namespace ellcov {

inline constexpr std::size_t kMaxArity = 12;

struct Monomial {
  std::array<std::int32_t, kMaxArity> exps{};

  std::int32_t operator[](std::size_t i) const { return exps[i]; }
  std::int32_t& operator[](std::size_t i) { return exps[i]; }

  Monomial& operator+=(const Monomial& other) {
    for (std::size_t i = 0; i < kMaxArity; ++i) exps[i] += other.exps[i];
    return *this;
  }
  friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto e : m.exps) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(e)) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Caps the exponent of one variable during multiplication; terms above the
/// cap are dropped. Used for truncated power series in a grading variable.
struct DegreeCap {
  std::size_t var;
  std::int32_t max_exponent;
};

template <class Coeff = Rational>
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Coeff>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t arity) : arity_(arity) {
    if (arity > kMaxArity) {
      throw Error(ErrorCode::InvalidArgument,
                  "arity " + std::to_string(arity) + " exceeds maximum " +
                      std::to_string(kMaxArity));
    }
  }

  static LaurentPoly constant(std::size_t arity, Coeff c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
    return p;
  }

  static LaurentPoly monomial(std::size_t arity,
                              std::initializer_list<std::int32_t> exps,
                              Coeff c = Coeff(1)) {
    return monomial(arity, std::span<const std::int32_t>(exps.begin(), exps.size()),
                    std::move(c));
  }

  static LaurentPoly monomial(std::size_t arity,
                              std::span<const std::int32_t> exps,
                              Coeff c = Coeff(1)) {
    if (exps.size() != arity) {
      throw Error(ErrorCode::ArityMismatch, "exponent vector length " +
                                                std::to_string(exps.size()) +
                                                " != arity " +
                                                std::to_string(arity));
    }
    Monomial m;
    std::copy(exps.begin(), exps.end(), m.exps.begin());
    return monomial(arity, m, std::move(c));
  }

  static LaurentPoly monomial(std::size_t arity, const Monomial& m,
                              Coeff c = Coeff(1)) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
  }

  /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
  /// terms.
  static LaurentPoly from_terms(std::size_t arity, std::vector<Term> terms) {
    LaurentPoly p(arity);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  Coeff coeff(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Coeff(0);
  }

  Coeff constant_term() const { return coeff(Monomial{}); }

  /// Terms whose exponent in `var` equals `exponent`, with that exponent set
  /// to zero. The arity is unchanged.
  LaurentPoly coeff_in(std::size_t var, std::int32_t exponent) const {
    check_var(var);
    LaurentPoly out(arity_);
    for (const auto& [m, c] : terms_) {
      if (m[var] != exponent) continue;
      Monomial stripped = m;
      stripped[var] = 0;
      out.terms_.emplace_back(stripped, c);
    }
    // Zeroing one slot of a sorted list of distinct monomials that all
    // share that slot keeps them sorted and distinct.
    return out;
  }

  /// Drops every term whose exponent in `var` exceeds `max_exponent`.
  LaurentPoly truncated(std::size_t var, std::int32_t max_exponent) const {
    check_var(var);
    LaurentPoly out(arity_);
    for (const auto& t : terms_) {
      if (t.first[var] <= max_exponent) out.terms_.push_back(t);
    }
    return out;
  }

  /// Exchanges the roles of two variables.
  LaurentPoly swapped(std::size_t a, std::size_t b) const {
    check_var(a);
    check_var(b);
    std::vector<Term> terms = terms_;
    for (auto& t : terms) std::swap(t.first[a], t.first[b]);
    return from_terms(arity_, std::move(terms));
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    *this = *this + other;
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = multiply(*this, other);
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    check_same_arity(p, q);
    LaurentPoly out(p.arity_);
    out.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto i = p.terms_.begin();
    auto j = q.terms_.begin();
    while (i != p.terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end() || (i != p.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == p.terms_.end() || j->first < i->first) {
        out.terms_.push_back(*j++);
      } else {
        Coeff c = i->second + j->second;
        if (c != 0) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out = p;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
    return p + (-q);
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    return multiply(p, q);
  }

  friend LaurentPoly operator*(const Coeff& s, const LaurentPoly& p) {
    LaurentPoly out(p.arity_);
    if (s == 0) return out;
    out.terms_ = p.terms_;
    for (auto& t : out.terms_) t.second *= s;
    return out;
  }

  /// Product of p and q; with a cap, terms exceeding it are never formed.
  static LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q,
                              std::optional<DegreeCap> cap = std::nullopt) {
    check_same_arity(p, q);
    if (cap) p.check_var(cap->var);
    LaurentPoly out(p.arity_);
    if (p.is_zero() || q.is_zero()) return out;
    if (q.size() == 1 && q.terms_.front().first == Monomial{} && !cap) {
      return q.terms_.front().second * p;
    }
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(p.size() * q.size());
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) {
        Monomial m = mp + mq;
        if (cap && m[cap->var] > cap->max_exponent) continue;
        auto [it, inserted] = acc.try_emplace(m, cp);
        if (inserted) {
          it->second *= cq;
        } else {
          it->second += cp * cq;
        }
      }
    }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) out.terms_.emplace_back(m, std::move(c));
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return out;
  }

  bool operator==(const LaurentPoly& other) const {
    return arity_ == other.arity_ && terms_ == other.terms_;
  }

  /// Debug form: sorted monomial list, e.g. "[2*x1^2*x2^-2, -1/3*x1^-4]".
  /// Variables are named `<prefix>1 .. <prefix>n`.
  std::string to_string(std::string_view prefix = "x") const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << ", ";
      first = false;
      os << c.str();
      for (std::size_t v = 0; v < arity_; ++v) {
        if (m[v] == 0) continue;
        os << '*' << prefix << (v + 1);
        if (m[v] != 1) os << '^' << m[v];
      }
    }
    os << ']';
    return os.str();
  }

 private:
  void check_var(std::size_t var) const {
    if (var >= arity_) {
      throw Error(ErrorCode::InvalidArgument,
                  "variable index " + std::to_string(var) +
                      " out of range for arity " + std::to_string(arity_));
    }
  }

  static void check_same_arity(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.arity_ != q.arity_) {
      throw Error(ErrorCode::ArityMismatch,
                  std::to_string(p.arity_) + " vs " + std::to_string(q.arity_));
    }
  }

  void normalize() {
    for (auto& t : terms_) {
      for (std::size_t v = arity_; v < kMaxArity; ++v) {
        if (t.first[v] != 0) {
          throw Error(ErrorCode::ArityMismatch,
                      "exponent set beyond arity " + std::to_string(arity_));
        }
      }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        if (!merged.empty() && merged.back().second == 0) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().second == 0) merged.pop_back();
    terms_ = std::move(merged);
  }

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

using Laurent = LaurentPoly<Rational>;

}  // namespace ellcov
