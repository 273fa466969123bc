#pragma once

// Hurwitz numbers of the elliptic curve by counting monodromy tuples
// (tau_1, ..., tau_{2g-2}, alpha, sigma) in S_d with transpositions tau_i,
//   tau_{2g-2} o ... o tau_1 o sigma = alpha o sigma o alpha^{-1},
// and a transitive generated subgroup. The count divided by d! is N_{d,g}.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ellcov/error.hpp"
#include "ellcov/parallel.hpp"
#include "ellcov/rational.hpp"

namespace ellcov {

/// A permutation of {0, ..., d-1}; printed and parsed 1-based in cycle
/// notation. Composition is right to left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int x : image_) {
      if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || seen[x]) {
        throw Error(ErrorCode::InvalidArgument, "not a bijection");
      }
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  /// The transposition exchanging i and j (0-based).
  static Permutation transposition(std::size_t d, std::size_t i,
                                   std::size_t j) {
    if (i == j || i >= d || j >= d) {
      throw Error(ErrorCode::InvalidArgument, "bad transposition");
    }
    auto p = identity(d);
    std::swap(p.image_[i], p.image_[j]);
    return p;
  }

  /// Parses 1-based cycle notation such as "(1 3)(2 4)" or "(2,3,4)";
  /// "()" and "" give the identity.
  static Permutation from_cycles(std::size_t d, const std::string& text) {
    auto p = identity(d);
    std::vector<bool> used(d, false);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) ||
              text[i] == ','))
        ++i;
    };
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::ParseError,
                   "permutation '" + text + "': " + why);
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '(') throw fail("expected '('");
      ++i;
      std::vector<int> cycle;
      for (;;) {
        skip();
        if (i >= text.size()) throw fail("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        std::size_t len = 0;
        long v = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          ++i;
          ++len;
          if (v > 1000000) throw fail("point out of range");
        }
        if (len == 0) throw fail("expected a point");
        if (v < 1 || static_cast<std::size_t>(v) > d) {
          throw fail("point out of range");
        }
        if (used[v - 1]) throw fail("repeated point");
        used[v - 1] = true;
        cycle.push_back(static_cast<int>(v - 1));
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        p.image_[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      skip();
    }
    return p;
  }

  /// All d! permutations in lexicographic order of their image arrays.
  static std::vector<Permutation> all(std::size_t d) {
    std::vector<Permutation> out;
    auto p = identity(d);
    do {
      out.push_back(p);
    } while (std::next_permutation(p.image_.begin(), p.image_.end()));
    return out;
  }

  std::size_t size() const noexcept { return image_.size(); }
  int operator()(int x) const { return image_.at(x); }
  const std::vector<int>& image() const noexcept { return image_; }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
      throw Error(ErrorCode::InvalidArgument, "permutation sizes differ");
    }
    Permutation r;
    r.image_.resize(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r.image_[x] = p.image_[q.image_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.image_.resize(size());
    for (std::size_t x = 0; x < size(); ++x) r.image_[image_[x]] = static_cast<int>(x);
    return r;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < size(); ++x) {
      if (image_[x] != static_cast<int>(x)) return false;
    }
    return true;
  }

  bool is_transposition() const {
    int moved = 0;
    for (std::size_t x = 0; x < size(); ++x) {
      if (image_[x] != static_cast<int>(x)) {
        ++moved;
        if (image_[image_[x]] != static_cast<int>(x)) return false;
      }
    }
    return moved == 2;
  }

  /// Cycle lengths, fixed points included, in descending order.
  std::vector<int> cycle_type() const {
    std::vector<int> out;
    std::vector<bool> seen(size(), false);
    for (std::size_t x = 0; x < size(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (auto y = x; !seen[y]; y = image_[y]) {
        seen[y] = true;
        ++len;
      }
      out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  /// 1-based cycle notation without fixed points; "()" for the identity.
  std::string to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(size(), false);
    bool any = false;
    for (std::size_t x = 0; x < size(); ++x) {
      if (seen[x] || image_[x] == static_cast<int>(x)) continue;
      any = true;
      os << '(';
      for (auto y = x; !seen[y]; y = image_[y]) {
        if (y != x) os << ' ';
        seen[y] = true;
        os << (y + 1);
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  int components;

  explicit UnionFind(std::size_t n)
      : parent(n), components(static_cast<int>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  void absorb(const Permutation& p) {
    for (std::size_t x = 0; x < p.size(); ++x) unite(static_cast<int>(x), p(static_cast<int>(x)));
  }
};

inline Integer factorial_int(std::size_t n) {
  Integer f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

/// Partitions of d in descending lexicographic order, parts descending.
inline std::vector<std::vector<int>> partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

/// Permutation with consecutive cycles of the given lengths.
inline Permutation cycle_representative(const std::vector<int>& type) {
  std::size_t d = 0;
  for (int c : type) d += static_cast<std::size_t>(c);
  std::vector<int> im(d);
  int start = 0;
  for (int c : type) {
    for (int k = 0; k < c; ++k) im[start + k] = start + (k + 1) % c;
    start += c;
  }
  return Permutation(std::move(im));
}

/// Size of the conjugacy class with the given cycle type: d! / z_lambda.
inline Integer class_size(const std::vector<int>& type) {
  std::size_t d = 0;
  for (int c : type) d += static_cast<std::size_t>(c);
  Integer z(1);
  for (std::size_t i = 0; i < type.size();) {
    std::size_t j = i;
    while (j < type.size() && type[j] == type[i]) ++j;
    for (std::size_t k = i; k < j; ++k) z *= type[i];
    z *= factorial_int(j - i);
    i = j;
  }
  return factorial_int(d) / z;
}

}  // namespace detail

/// Checks the three monodromy conditions for one tuple: all tau_i are
/// transpositions, the relation holds, and the generated group is
/// transitive. Malformed input (mixed sizes) is simply not a valid tuple.
inline bool verify_tuple(const std::vector<Permutation>& taus,
                         const Permutation& alpha, const Permutation& sigma) {
  const auto d = sigma.size();
  if (alpha.size() != d) return false;
  auto lhs = sigma;
  for (const auto& t : taus) {
    if (t.size() != d || !t.is_transposition()) return false;
    lhs = t * lhs;
  }
  if (lhs != alpha * sigma * alpha.inverse()) return false;
  detail::UnionFind uf(d);
  uf.absorb(alpha);
  uf.absorb(sigma);
  for (const auto& t : taus) uf.absorb(t);
  return d == 0 || uf.components == 1;
}

struct HurwitzOptions {
  /// Enumerate one sigma per conjugacy class and weight by the class size.
  bool class_reduction = true;
  /// Upper bound on the estimated number of elementary steps.
  double work_budget = 2e8;
  unsigned threads = 1;
};

/// Estimated step count: (#sigma) * d! * (#transpositions)^{2g-3}; the last
/// transposition is determined by the relation.
inline double hurwitz_work_estimate(int d, int g, bool class_reduction) {
  double fact = 1;
  for (int k = 2; k <= d; ++k) fact *= k;
  const double sigmas =
      class_reduction ? static_cast<double>(detail::partitions(d).size()) : fact;
  const double t = d * (d - 1) / 2.0;
  double prefix = 1;
  for (int k = 0; k < 2 * g - 3; ++k) prefix *= t;
  return sigmas * fact * prefix;
}

/// N_{d,g} = (1/d!) #{valid monodromy tuples}. For d = 1 there are no
/// transpositions, so the count is 0 whenever g >= 2.
inline Rational hurwitz_count(int d, int g, const HurwitzOptions& opts = {}) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "genus must be >= 2");
  const auto est = hurwitz_work_estimate(d, g, opts.class_reduction);
  if (est > opts.work_budget) {
    std::ostringstream os;
    os << "estimated " << est << " steps for d=" << d << ", g=" << g
       << " exceeds budget " << opts.work_budget;
    throw Error(ErrorCode::BudgetExceeded, os.str());
  }
  const auto n = static_cast<std::size_t>(d);
  if (d == 1) return Rational(0);

  std::vector<Permutation> transpositions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      transpositions.push_back(Permutation::transposition(n, i, j));
    }
  }
  const auto group = Permutation::all(n);

  struct SigmaItem {
    Permutation sigma;
    Integer weight;
  };
  std::vector<SigmaItem> sigmas;
  if (opts.class_reduction) {
    for (const auto& type : detail::partitions(d)) {
      sigmas.push_back({detail::cycle_representative(type), detail::class_size(type)});
    }
  } else {
    for (const auto& s : group) sigmas.push_back({s, Integer(1)});
  }

  const int steps = 2 * g - 2;
  auto count_for = [&](std::size_t idx) -> Integer {
    const auto& sigma = sigmas[idx].sigma;
    const auto sigma_inv = sigma.inverse();
    Integer total(0);
    for (const auto& alpha : group) {
      // tau_{2g-2} o ... o tau_1 must equal alpha sigma alpha^-1 sigma^-1.
      const auto target = alpha * sigma * alpha.inverse() * sigma_inv;
      detail::UnionFind base(n);
      base.absorb(alpha);
      base.absorb(sigma);
      long hits = 0;
      auto rec = [&](auto&& self, int depth, const Permutation& prod,
                     const detail::UnionFind& uf) -> void {
        if (depth == steps - 1) {
          const auto last = target * prod.inverse();
          if (!last.is_transposition()) return;
          auto u = uf;
          u.absorb(last);
          if (u.components == 1) ++hits;
          return;
        }
        for (const auto& t : transpositions) {
          auto u = uf;
          u.absorb(t);
          self(self, depth + 1, t * prod, u);
        }
      };
      rec(rec, 0, Permutation::identity(n), base);
      total += hits;
    }
    return total * sigmas[idx].weight;
  };
  auto parts = parallel_map(sigmas.size(), opts.threads, count_for);
  Integer total(0);
  for (const auto& p : parts) total += p;
  return Rational(total, detail::factorial_int(n));
}

}  // namespace ellcov
