#pragma once

// Labeled tropical covers of the tropical elliptic curve, enumerated
// directly as tuples of edge terms w (s/t)^{2w}, one per edge, whose product
// is constant in every vertex variable. No Laurent arithmetic is involved,
// which makes this an independent route to the refined integral
// coefficients.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ellcov/error.hpp"
#include "ellcov/graph.hpp"
#include "ellcov/integrals.hpp"
#include "ellcov/order.hpp"
#include "ellcov/propagator.hpp"
#include "ellcov/rational.hpp"

namespace ellcov {

/// The term chosen for one edge: weight w, oriented source -> sink, passing
/// the base point `wraps` times (a_k = w * wraps).
struct EdgeTerm {
  std::size_t source = 0;
  std::size_t sink = 0;
  int weight = 0;
  int wraps = 0;

  int branch_degree() const noexcept { return weight * wraps; }
  bool operator==(const EdgeTerm&) const = default;
  auto operator<=>(const EdgeTerm&) const = default;
};

struct CoverTuple {
  VertexOrder order;
  std::vector<EdgeTerm> terms;  // indexed by edge

  /// prod_k w_k, the contribution of the tuple.
  Integer multiplicity() const {
    Integer p(1);
    for (const auto& t : terms) p *= t.weight;
    return p;
  }
  BranchType branch_type() const {
    BranchType a;
    for (const auto& t : terms) a.push_back(t.branch_degree());
    return a;
  }
};

/// Balance: at every vertex, outgoing weight equals incoming weight.
inline bool is_balanced(const FeynmanGraph& g, const CoverTuple& t) {
  std::vector<long> net(g.vertex_count(), 0);
  for (const auto& e : t.terms) {
    net[e.source] += e.weight;
    net[e.sink] -= e.weight;
  }
  return std::all_of(net.begin(), net.end(), [](long x) { return x == 0; });
}

/// Every tuple in the set T_{a,Gamma,Omega}. The weight of a zero-degree
/// edge ranges over 1..w_max (default |a|); its direction is forced by the
/// order.
inline std::vector<CoverTuple> enumerate_tuples(
    const FeynmanGraph& g, const BranchType& a, const VertexOrder& order,
    std::optional<int> w_max = std::nullopt) {
  validate(g);
  detail::check_branch_type(g, a);
  detail::check_order(g, order);
  std::vector<CoverTuple> out;
  const int d = total_degree(a);
  if (has_bridge(g) || d == 0) return out;
  const int bound = w_max.value_or(d);
  const auto n = g.vertex_count();
  const auto m = g.edge_count();

  std::vector<std::vector<EdgeTerm>> choices(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& e = g.edge(k);
    if (a[k] == 0) {
      const auto src = order.before(e.u, e.v) ? e.u : e.v;
      for (int w = 1; w <= bound; ++w) {
        choices[k].push_back({src, e.other(src), w, 0});
      }
    } else {
      for (int w : divisors(a[k])) {
        choices[k].push_back({e.u, e.v, w, a[k] / w});
        choices[k].push_back({e.v, e.u, w, a[k] / w});
      }
    }
  }

  // Visit edges so that vertices early in the order are completed first;
  // a vertex is checked for balance as soon as all its edges are chosen.
  std::vector<std::size_t> edge_seq(m);
  for (std::size_t k = 0; k < m; ++k) edge_seq[k] = k;
  auto late = [&](std::size_t k) {
    return std::max(order.rank(g.edge(k).u), order.rank(g.edge(k).v));
  };
  std::stable_sort(edge_seq.begin(), edge_seq.end(),
                   [&](auto x, auto y) { return late(x) < late(y); });
  std::vector<int> remaining(n, 0);
  for (const auto& e : g.edges()) {
    ++remaining[e.u];
    ++remaining[e.v];
  }

  std::vector<long> net(n, 0);
  CoverTuple current{order, std::vector<EdgeTerm>(m)};
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == m) {
      out.push_back(current);
      return;
    }
    const auto k = edge_seq[pos];
    const auto& e = g.edge(k);
    --remaining[e.u];
    --remaining[e.v];
    for (const auto& c : choices[k]) {
      net[c.source] += c.weight;
      net[c.sink] -= c.weight;
      const bool ok = (remaining[e.u] > 0 || net[e.u] == 0) &&
                      (remaining[e.v] > 0 || net[e.v] == 0);
      if (ok) {
        current.terms[k] = c;
        self(self, pos + 1);
      }
      net[c.source] -= c.weight;
      net[c.sink] += c.weight;
    }
    ++remaining[e.u];
    ++remaining[e.v];
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.terms < y.terms;
  });
  return out;
}

/// N_{a,Gamma,Omega}: the sum of tuple multiplicities.
inline Integer count_covers(const FeynmanGraph& g, const BranchType& a,
                            const VertexOrder& order,
                            std::optional<int> w_max = std::nullopt) {
  Integer sum(0);
  for (const auto& t : enumerate_tuples(g, a, order, w_max)) {
    sum += t.multiplicity();
  }
  return sum;
}

/// N_{a,Gamma} summed over all vertex orders via tuple enumeration.
inline Integer count_covers_all_orders(const FeynmanGraph& g,
                                       const BranchType& a) {
  Integer sum(0);
  for (const auto& o : VertexOrder::all(g.vertex_count())) {
    sum += count_covers(g, a, o);
  }
  return sum;
}

struct CoverEdge {
  std::size_t edge = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  int weight = 0;
  int wraps = 0;          // preimages of the base point on this edge
  int branch_degree = 0;  // weight * wraps
};

/// An explicit labeled tropical cover of E = R/Z. The base point p0 sits at
/// 0 and vertex x with order rank r maps to (r + 1) / (n + 1); only the
/// combinatorics matter, the placement just makes the fibers checkable.
struct TropicalCover {
  VertexOrder order;
  std::vector<Rational> vertex_image;  // per vertex
  std::vector<CoverEdge> edges;
  int degree = 0;
  Integer multiplicity;

  /// Weighted number of preimages of a point t in (0, 1) that is not a
  /// branch point.
  Integer covering_weight(const Rational& t) const {
    Integer total(0);
    for (const auto& e : edges) {
      const auto& s = vertex_image[e.source];
      const auto& f = vertex_image[e.sink];
      long passes = 0;
      if (e.wraps == 0) {
        passes = (s < t && t < f) ? 1 : 0;
      } else {
        passes = (e.wraps - 1) + (t > s ? 1 : 0) + (t < f ? 1 : 0);
      }
      total += Integer(passes) * e.weight;
    }
    return total;
  }
};

/// Draws the cover of a tuple: each edge leaves its source to the right and
/// enters its sink from the left, wrapping `wraps` times through p0.
inline TropicalCover reconstruct_cover(const CoverTuple& t) {
  TropicalCover c;
  c.order = t.order;
  const auto n = t.order.size();
  c.vertex_image.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    c.vertex_image[x] = Rational(Integer(t.order.rank(x) + 1), Integer(n + 1));
  }
  c.multiplicity = t.multiplicity();
  for (std::size_t k = 0; k < t.terms.size(); ++k) {
    const auto& e = t.terms[k];
    if (e.wraps == 0 && !t.order.before(e.source, e.sink)) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge q" + std::to_string(k + 1) +
                      " runs against the order without wrapping");
    }
    CoverEdge ce;
    ce.edge = k;
    ce.source = e.source;
    ce.sink = e.sink;
    ce.weight = e.weight;
    ce.wraps = e.wraps;
    ce.branch_degree = e.branch_degree();
    c.degree += ce.branch_degree;
    c.edges.push_back(ce);
  }
  return c;
}

inline nlohmann::json cover_to_json(const TropicalCover& c) {
  nlohmann::json order = nlohmann::json::array();
  for (auto v : c.order.sequence()) order.push_back(v + 1);
  nlohmann::json images = nlohmann::json::array();
  for (const auto& p : c.vertex_image) images.push_back(to_string(p));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : c.edges) {
    edges.push_back({{"edge", e.edge + 1},
                     {"source", e.source + 1},
                     {"sink", e.sink + 1},
                     {"weight", e.weight},
                     {"wraps", e.wraps},
                     {"branch_degree", e.branch_degree}});
  }
  return {{"order", order},
          {"vertex_images", images},
          {"degree", c.degree},
          {"multiplicity", to_string(c.multiplicity)},
          {"edges", edges}};
}

}  // namespace ellcov
