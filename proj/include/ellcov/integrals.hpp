#pragma once

// Refined and unrefined Feynman integrals by constant-term extraction.
//
// For a graph, a branch type a and a vertex order, the coefficient of
// q^{2a} in I_{Gamma,Omega} is the constant term in all x_i of the product
// of edge factors. Constant terms are taken one variable at a time: every
// factor touching the variable is multiplied in, then the x^0 coefficient
// is kept.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ellcov/error.hpp"
#include "ellcov/format.hpp"
#include "ellcov/graph.hpp"
#include "ellcov/laurent.hpp"
#include "ellcov/order.hpp"
#include "ellcov/parallel.hpp"
#include "ellcov/propagator.hpp"
#include "ellcov/qseries.hpp"
#include "ellcov/rational.hpp"

namespace ellcov {

/// Branch type over the base point: one non-negative degree per edge.
using BranchType = std::vector<int>;

/// Coefficients N_{a,Gamma} of the multigraded generating function, keyed by
/// branch type; zero coefficients are not stored.
using MultiSeries = std::map<BranchType, Rational>;

inline int total_degree(const BranchType& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

/// All compositions of d into `parts` non-negative parts, lexicographically
/// descending (d,0,...,0) first.
inline std::vector<BranchType> compositions(int d, std::size_t parts) {
  std::vector<BranchType> out;
  if (parts == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  BranchType a(parts, 0);
  auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == parts) {
      a[i] = left;
      out.push_back(a);
      return;
    }
    for (int x = left; x >= 0; --x) {
      a[i] = x;
      self(self, i + 1, left - x);
    }
  };
  recurse(recurse, 0, d);
  return out;
}

enum class ZeroReason {
  None,
  Bridge,           // graph has a bridge: no balanced positive flow
  ZeroBranchType,   // a = 0: an acyclic orientation cannot balance
};

struct Evaluation {
  Rational value;
  ZeroReason reason = ZeroReason::None;
};

struct IntegralOptions {
  /// Truncation of the q-constant expansions; defaults to max(1, |a|).
  std::optional<int> w_max;
  /// Order in which variables are eliminated; defaults to the vertex order.
  std::optional<std::vector<std::size_t>> elimination;
};

namespace detail {

/// Constant term in the x-variables [0, nvars) of the product of `factors`,
/// eliminating in `sequence`. Variables at index >= nvars (a grading slot)
/// are kept. Terms that the remaining factors can no longer bring to
/// exponent zero are dropped as soon as they appear.
inline Laurent eliminate(const std::vector<Laurent>& factors,
                         const std::vector<std::vector<std::size_t>>& touches,
                         std::size_t nvars,
                         const std::vector<std::size_t>& sequence,
                         std::optional<DegreeCap> cap) {
  const auto arity = factors.empty() ? nvars : factors.front().arity();
  // Exponent range each factor contributes in each variable.
  std::vector<std::vector<std::pair<int, int>>> range(
      factors.size(), std::vector<std::pair<int, int>>(nvars, {0, 0}));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (auto v : touches[k]) {
      int lo = 0, hi = 0;
      bool first = true;
      for (const auto& [m, c] : factors[k].terms()) {
        lo = first ? m[v] : std::min(lo, m[v]);
        hi = first ? m[v] : std::max(hi, m[v]);
        first = false;
      }
      range[k][v] = {lo, hi};
    }
  }
  std::vector<bool> used(factors.size(), false);
  std::vector<bool> eliminated(nvars, false);

  auto prune = [&](const Laurent& p) {
    std::vector<int> lo(nvars, 0), hi(nvars, 0);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (used[k]) continue;
      for (auto v : touches[k]) {
        lo[v] += range[k][v].first;
        hi[v] += range[k][v].second;
      }
    }
    std::vector<Laurent::Term> kept;
    for (const auto& t : p.terms()) {
      bool ok = true;
      for (std::size_t v = 0; v < nvars && ok; ++v) {
        if (eliminated[v]) continue;
        const int e = t.first[v];
        ok = (e + lo[v] <= 0) && (e + hi[v] >= 0);
      }
      if (ok) kept.push_back(t);
    }
    return Laurent::from_terms(p.arity(), std::move(kept));
  };

  Laurent acc = Laurent::constant(arity, Rational(1));
  for (auto v : sequence) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (used[k]) continue;
      if (std::find(touches[k].begin(), touches[k].end(), v) ==
          touches[k].end()) {
        continue;
      }
      acc = Laurent::multiply(acc, factors[k], cap);
      used[k] = true;
      acc = prune(acc);
      if (acc.is_zero()) return acc;
    }
    acc = acc.coeff_in(v, 0);
    eliminated[v] = true;
    if (acc.is_zero()) return acc;
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (!used[k]) acc = Laurent::multiply(acc, factors[k], cap);
  }
  return acc;
}

inline void check_branch_type(const FeynmanGraph& g, const BranchType& a) {
  if (a.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "branch type has " + std::to_string(a.size()) +
                    " entries, graph has " + std::to_string(g.edge_count()) +
                    " edges");
  }
  for (int x : a) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative branch degree");
  }
}

inline void check_order(const FeynmanGraph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex order has " + std::to_string(order.size()) +
                    " entries, graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace detail

/// Coefficient of q^{2a} in I_{Gamma,Omega}, with the reason when it is zero
/// without evaluation.
inline Evaluation evaluate_integral(const FeynmanGraph& g, const BranchType& a,
                                    const VertexOrder& order,
                                    const IntegralOptions& opts = {}) {
  validate(g);
  detail::check_branch_type(g, a);
  detail::check_order(g, order);
  if (has_bridge(g)) return {Rational(0), ZeroReason::Bridge};
  const int d = total_degree(a);
  if (d == 0) return {Rational(0), ZeroReason::ZeroBranchType};
  const int w_max = opts.w_max.value_or(std::max(1, d));
  const auto n = g.vertex_count();

  std::vector<Laurent> factors;
  std::vector<std::vector<std::size_t>> touches;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    factors.push_back(edge_factor(g, k, a[k], order, w_max).expansion);
    touches.push_back({g.edge(k).u, g.edge(k).v});
  }
  const auto& seq = opts.elimination ? *opts.elimination : order.sequence();
  if (VertexOrder(seq).size() != n) {
    throw Error(ErrorCode::InvalidArgument, "bad elimination order");
  }
  auto result = detail::eliminate(factors, touches, n, seq, std::nullopt);
  return {result.constant_term(), ZeroReason::None};
}

inline Rational integral_coeff(const FeynmanGraph& g, const BranchType& a,
                               const VertexOrder& order,
                               const IntegralOptions& opts = {}) {
  return evaluate_integral(g, a, order, opts).value;
}

/// N_{a,Gamma}: the sum of integral_coeff over all (2g-2)! orders.
inline Integer gromov_witten_a(const FeynmanGraph& g, const BranchType& a,
                               const IntegralOptions& opts = {},
                               unsigned threads = 1) {
  validate(g);
  detail::check_branch_type(g, a);
  if (has_bridge(g) || total_degree(a) == 0) return Integer(0);
  const auto orders = VertexOrder::all(g.vertex_count());
  auto parts = parallel_map(orders.size(), threads, [&](std::size_t i) {
    return integral_coeff(g, a, orders[i], opts);
  });
  Rational sum(0);
  for (const auto& p : parts) sum += p;
  return to_integer(sum);
}

/// |Aut(Gamma)| N_{d,Gamma}: the sum of N_{a,Gamma} over all compositions a
/// of d into 3g-3 parts.
inline Integer gromov_witten_d(const FeynmanGraph& g, int d,
                               unsigned threads = 1) {
  validate(g);
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (has_bridge(g) || d == 0) return Integer(0);
  const auto types = compositions(d, g.edge_count());
  auto parts = parallel_map(types.size(), threads, [&](std::size_t i) {
    return gromov_witten_a(g, types[i]);
  });
  Integer sum(0);
  for (const auto& p : parts) sum += p;
  return sum;
}

/// All non-zero N_{a,Gamma} with |a| <= d_max.
inline MultiSeries generating_function(const FeynmanGraph& g, int d_max,
                                       unsigned threads = 1) {
  validate(g);
  MultiSeries out;
  if (has_bridge(g)) return out;
  std::vector<BranchType> types;
  for (int d = 1; d <= d_max; ++d) {
    auto c = compositions(d, g.edge_count());
    types.insert(types.end(), c.begin(), c.end());
  }
  auto parts = parallel_map(types.size(), threads, [&](std::size_t i) {
    return gromov_witten_a(g, types[i]);
  });
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (parts[i] != 0) out.emplace(types[i], Rational(parts[i]));
  }
  return out;
}

/// Singular-style print of a multigraded series with q(k)^{a_k} monomials:
/// "8*q(1)^2+8*q(2)*q(3)".
inline std::string to_singular_string(const MultiSeries& s) {
  std::vector<ExponentTerm> terms;
  for (const auto& [a, c] : s) terms.push_back({a, c});
  return singular_string(std::move(terms),
                         [](std::size_t i) { return indexed_name("q", i); });
}

/// I_Gamma(q) = sum_d (|Aut| N_{d,Gamma}) q^{2d} for d <= d_max, precision
/// 2 d_max + 1. All q_k are set to one q and the whole series is extracted
/// per vertex order, carrying the degree in an extra grading slot.
inline QSeries i_gamma_series(const FeynmanGraph& g, int d_max,
                              unsigned threads = 1) {
  validate(g);
  if (d_max < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  QSeries out(static_cast<std::size_t>(2 * d_max + 1));
  if (has_bridge(g) || d_max == 0) return out;
  const auto n = g.vertex_count();
  const auto orders = VertexOrder::all(n);
  auto parts = parallel_map(orders.size(), threads, [&](std::size_t i) {
    std::vector<Laurent> factors;
    std::vector<std::vector<std::size_t>> touches;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      factors.push_back(graded_edge_series(g, k, orders[i], d_max));
      touches.push_back({g.edge(k).u, g.edge(k).v});
    }
    return detail::eliminate(factors, touches, n, orders[i].sequence(),
                             DegreeCap{n, d_max});
  });
  for (const auto& p : parts) {
    for (const auto& [m, c] : p.terms()) {
      out.at(static_cast<std::size_t>(2 * m[n])) += c;
    }
  }
  return out;
}

/// The same series assembled from gromov_witten_d, one branch type at a
/// time.
inline QSeries i_gamma_series_by_branch_type(const FeynmanGraph& g, int d_max,
                                             unsigned threads = 1) {
  QSeries out(static_cast<std::size_t>(2 * d_max + 1));
  for (int d = 1; d <= d_max; ++d) {
    out.at(static_cast<std::size_t>(2 * d)) =
        Rational(gromov_witten_d(g, d, threads));
  }
  return out;
}

/// F_g(q) = sum over isomorphism classes of I_Gamma(q) / |Aut(Gamma)|.
inline QSeries f_g(int genus, int d_max, unsigned threads = 1) {
  QSeries out(static_cast<std::size_t>(2 * d_max + 1));
  for (const auto& g : enumerate_genus(genus)) {
    if (has_bridge(g)) continue;
    const auto aut = automorphism_count(g);
    out = out + Rational(Integer(1), Integer(aut)) * i_gamma_series(g, d_max, threads);
  }
  return out;
}

}  // namespace ellcov
