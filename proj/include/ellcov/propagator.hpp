#pragma once

// Per-edge factors of the Feynman integrand.
//
// After x = e^{i pi z}, the negated propagator is
//   -P(x/y, q) = x^2 y^2 / (x^2 - y^2)^2
//                + sum_{n>=1} sum_{j|n} j (x^{2j} y^{-2j} + x^{-2j} y^{2j}) q^{2n}.
// The q-constant part is a rational function; it is only ever used through
// its geometric expansion sum_{w>=1} w (s/t)^{2w} with |s/t| < 1, where s is
// the endpoint that comes earlier in the vertex order.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ellcov/error.hpp"
#include "ellcov/format.hpp"
#include "ellcov/graph.hpp"
#include "ellcov/laurent.hpp"
#include "ellcov/order.hpp"

namespace ellcov {

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j) {
    if (n % j == 0) out.push_back(j);
  }
  return out;
}

/// The q-constant coefficient x^2 y^2 / (x^2 - y^2)^2, which has no Laurent
/// polynomial form; it must be expanded with respect to a vertex order.
struct ZeroDegreeTerm {
  std::size_t x;
  std::size_t y;
};

using PropagatorCoeff = std::variant<Laurent, ZeroDegreeTerm>;

namespace detail {

inline Laurent ratio_power(std::size_t arity, std::size_t num, std::size_t den,
                           std::int32_t power, const Rational& c) {
  Monomial m;
  m[num] += power;
  m[den] -= power;
  return Laurent::monomial(arity, m, c);
}

inline void check_vars(std::size_t arity, std::size_t x, std::size_t y) {
  if (x >= arity || y >= arity) {
    throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  }
  if (x == y) {
    throw Error(ErrorCode::LoopEdge,
                "propagator of a loop is singular (P(0, q))");
  }
}

}  // namespace detail

/// Coefficient of q^{2d} in -P(x/y, q): for d > 0 the Laurent polynomial
/// sum_{j|d} j (x^{2j} y^{-2j} + x^{-2j} y^{2j}); for d = 0 a tag.
inline PropagatorCoeff propagator_coeff(std::size_t arity, std::size_t x,
                                        std::size_t y, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  detail::check_vars(arity, x, y);
  if (d == 0) return ZeroDegreeTerm{x, y};
  Laurent out(arity);
  for (int j : divisors(d)) {
    out += detail::ratio_power(arity, x, y, 2 * j, Rational(j));
    out += detail::ratio_power(arity, y, x, 2 * j, Rational(j));
  }
  return out;
}

/// sum_{w=1}^{w_max} w (source/sink)^{2w}.
inline Laurent expand_zero_term(std::size_t arity, std::size_t source,
                                std::size_t sink, int w_max) {
  if (w_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "w_max must be at least 1");
  }
  detail::check_vars(arity, source, sink);
  std::vector<Laurent::Term> terms;
  for (int w = 1; w <= w_max; ++w) {
    Monomial m;
    m[source] = 2 * w;
    m[sink] = -2 * w;
    terms.emplace_back(m, Rational(w));
  }
  return Laurent::from_terms(arity, std::move(terms));
}

/// Singular-style rational form of a propagator coefficient, e.g.
/// "(3*x(1)^12+...)/(x(1)^6*x(2)^6)".
inline std::string rational_form(const PropagatorCoeff& coeff) {
  auto name = [](std::size_t i) { return indexed_name("x", i); };
  if (const auto* z = std::get_if<ZeroDegreeTerm>(&coeff)) {
    const auto n = std::max(z->x, z->y) + 1;
    auto mono = [n](std::size_t a, int ea, std::size_t b, int eb) {
      std::vector<int> e(n, 0);
      e[a] += ea;
      e[b] += eb;
      return e;
    };
    std::string num = singular_string(
        {{mono(z->x, 2, z->y, 2), Rational(1)}}, name);
    std::string den = singular_string({{mono(z->x, 4, z->y, 0), Rational(1)},
                                       {mono(z->x, 2, z->y, 2), Rational(-2)},
                                       {mono(z->x, 0, z->y, 4), Rational(1)}},
                                      name);
    return "(" + num + ")/(" + den + ")";
  }
  const auto& p = std::get<Laurent>(coeff);
  const auto n = p.arity();
  // Clear denominators with the smallest monomial dividing every term.
  std::vector<int> shift(n, 0);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < n; ++v) shift[v] = std::min(shift[v], m[v]);
  }
  std::vector<ExponentTerm> num;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(n);
    for (std::size_t v = 0; v < n; ++v) e[v] = m[v] - shift[v];
    num.push_back({e, c});
  }
  std::vector<int> den(n);
  for (std::size_t v = 0; v < n; ++v) den[v] = -shift[v];
  const bool trivial_den =
      std::all_of(den.begin(), den.end(), [](int e) { return e == 0; });
  if (trivial_den) return singular_string(num, name);
  return "(" + singular_string(num, name) + ")/(" +
         singular_string({{den, Rational(1)}}, name) + ")";
}

/// One factor of the integrand for a fixed branch degree.
struct EdgeFactor {
  std::size_t edge = 0;
  std::size_t first = 0;   // endpoint u of the edge as listed
  std::size_t second = 0;  // endpoint v
  int degree = 0;          // a_k
  Laurent expansion{0};
};

/// The q^{2 a_k} coefficient of -P for edge k; for a_k = 0 it is expanded
/// with the earlier endpoint in the numerator, truncated at w_max.
inline EdgeFactor edge_factor(const FeynmanGraph& g, std::size_t k, int a_k,
                              const VertexOrder& order, int w_max) {
  const auto& e = g.edge(k);
  if (e.is_loop()) {
    throw Error(ErrorCode::LoopEdge,
                "edge q" + std::to_string(k + 1) + " is a loop");
  }
  if (order.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex order size does not match the graph");
  }
  const auto n = g.vertex_count();
  EdgeFactor f{k, e.u, e.v, a_k, Laurent(n)};
  if (a_k == 0) {
    const auto src = order.before(e.u, e.v) ? e.u : e.v;
    f.expansion = expand_zero_term(n, src, e.other(src), w_max);
  } else {
    f.expansion = std::get<Laurent>(propagator_coeff(n, e.u, e.v, a_k));
  }
  return f;
}

/// The full edge factor as a truncated series in one q, for the
/// specialization q_k = q. The result has arity n + 1; the extra last slot
/// holds the exponent d of q^{2d}, and only d <= d_max is kept.
inline Laurent graded_edge_series(const FeynmanGraph& g, std::size_t k,
                                  const VertexOrder& order, int d_max) {
  const auto n = g.vertex_count();
  const auto& e = g.edge(k);
  if (e.is_loop()) {
    throw Error(ErrorCode::LoopEdge,
                "edge q" + std::to_string(k + 1) + " is a loop");
  }
  const auto src = order.before(e.u, e.v) ? e.u : e.v;
  const auto dst = e.other(src);
  std::vector<Laurent::Term> terms;
  for (int w = 1; w <= std::max(1, d_max); ++w) {
    Monomial m;
    m[src] = 2 * w;
    m[dst] = -2 * w;
    terms.emplace_back(m, Rational(w));
  }
  for (int d = 1; d <= d_max; ++d) {
    for (int j : divisors(d)) {
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        Monomial m;
        m[a] = 2 * j;
        m[b] = -2 * j;
        m[n] = d;
        terms.emplace_back(m, Rational(j));
      }
    }
  }
  return Laurent::from_terms(n + 1, std::move(terms));
}

}  // namespace ellcov
