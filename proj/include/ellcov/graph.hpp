#pragma once

// Feynman graphs: connected trivalent multigraphs of genus g >= 2 with
// 2g-2 labeled vertices and 3g-3 labeled edges. Loops and parallel edges
// are allowed. Vertices and edges are 0-based here; the JSON form and all
// printed output use 1-based vertex labels.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ellcov/error.hpp"

namespace ellcov {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool is_loop() const noexcept { return u == v; }
  bool touches(std::size_t x) const noexcept { return u == x || v == x; }
  std::size_t other(std::size_t x) const noexcept { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

class FeynmanGraph {
 public:
  FeynmanGraph() = default;
  FeynmanGraph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.u >= vertex_count_ || e.v >= vertex_count_) {
        throw Error(ErrorCode::InvalidArgument,
                    "edge endpoint out of range for " +
                        std::to_string(vertex_count_) + " vertices");
      }
    }
  }

  /// Builds a graph from 1-based endpoint pairs, the order fixing q_1, q_2, ...
  static FeynmanGraph from_one_based(
      std::size_t vertex_count,
      const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 1 || b < 1) {
        throw Error(ErrorCode::InvalidArgument, "vertex labels start at 1");
      }
      es.push_back({static_cast<std::size_t>(a - 1),
                    static_cast<std::size_t>(b - 1)});
    }
    return FeynmanGraph(vertex_count, std::move(es));
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }

  /// Valence of x: a loop counts twice.
  std::size_t valence(std::size_t x) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.u == x) + (e.v == x);
    return d;
  }

  /// Edge indices incident to x (a loop appears once).
  std::vector<std::size_t> incident_edges(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (edges_[k].touches(x)) out.push_back(k);
    }
    return out;
  }

  bool has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.is_loop(); });
  }

  /// Symmetric multiplicity matrix; the diagonal counts loops.
  std::vector<std::vector<int>> multiplicity_matrix() const {
    std::vector<std::vector<int>> m(vertex_count_,
                                    std::vector<int>(vertex_count_, 0));
    for (const auto& e : edges_) {
      ++m[e.u][e.v];
      if (!e.is_loop()) ++m[e.v][e.u];
    }
    return m;
  }

  bool operator==(const FeynmanGraph&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline bool is_connected(std::size_t n, const std::vector<Edge>& edges,
                         std::optional<std::size_t> skip_edge = std::nullopt) {
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (skip_edge && *skip_edge == k) continue;
    auto a = find(edges[k].u), b = find(edges[k].v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace detail

/// Checks the Feynman graph invariants and returns the genus.
inline int validate(const FeynmanGraph& g) {
  const auto n = g.vertex_count();
  const auto m = g.edge_count();
  // n = 2g-2 and m = 3g-3 with g >= 2.
  if (n < 2 || n % 2 != 0 || 2 * m != 3 * n) {
    throw Error(ErrorCode::BadCardinality,
                std::to_string(n) + " vertices and " + std::to_string(m) +
                    " edges do not fit any genus g >= 2");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (g.valence(x) != 3) {
      throw Error(ErrorCode::NotTrivalent,
                  "vertex " + std::to_string(x + 1) + " has valence " +
                      std::to_string(g.valence(x)));
    }
  }
  if (!detail::is_connected(n, g.edges())) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  return static_cast<int>(m - n + 1);
}

// ---------------------------------------------------------------------------
// Bridges

/// Indices of all bridges, ascending. Loops are never bridges; parallel edges
/// are distinguished by edge index.
inline std::vector<std::size_t> bridges(const FeynmanGraph& g) {
  const auto n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].is_loop()) continue;
    adj[edges[k].u].push_back({edges[k].v, k});
    adj[edges[k].v].push_back({edges[k].u, k});
  }
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnset), low(n, 0);
  std::vector<std::size_t> out;
  std::size_t timer = 0;

  // Iterative Tarjan lowlink; frames are (vertex, parent edge, next index).
  struct Frame {
    std::size_t v, parent_edge, next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kUnset) continue;
    std::vector<Frame> stack{{root, kUnset, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, k] = adj[f.v][f.next++];
        if (k == f.parent_edge) continue;
        if (disc[w] == kUnset) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, k, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          auto& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) out.push_back(done.parent_edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_bridge(const FeynmanGraph& g) { return !bridges(g).empty(); }

// ---------------------------------------------------------------------------
// Canonical forms and automorphisms

namespace detail {

/// Colour refinement of an ordered partition. `colour` ranks the cells;
/// a vertex's new colour is the rank of (old colour, sorted multiset of
/// (neighbour colour, multiplicity)). Cell order only depends on the
/// isomorphism class, so the refined partition is invariant.
inline std::vector<int> refine(const std::vector<std::vector<int>>& m,
                               std::vector<int> colour) {
  const auto n = m.size();
  auto cell_count = [](const std::vector<int>& c) {
    return std::set<int>(c.begin(), c.end()).size();
  };
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      sig[x].push_back(colour[x]);
      sig[x].push_back(m[x][x]);
      std::vector<std::pair<int, int>> nb;
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x && m[x][y] > 0) nb.push_back({colour[y], m[x][y]});
      }
      std::sort(nb.begin(), nb.end());
      for (auto [c, k] : nb) {
        sig[x].push_back(c);
        sig[x].push_back(k);
      }
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (std::size_t x = 0; x < n; ++x) {
      next[x] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[x]) -
          sorted.begin());
    }
    const bool stable = cell_count(next) == cell_count(colour);
    colour = std::move(next);
    if (stable) return colour;
  }
}

inline std::vector<int> relabeled_upper_triangle(
    const std::vector<std::vector<int>>& m,
    const std::vector<std::size_t>& position_of) {
  const auto n = m.size();
  std::vector<std::size_t> at(n);
  for (std::size_t x = 0; x < n; ++x) at[position_of[x]] = x;
  std::vector<int> out;
  out.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.push_back(m[at[i]][at[j]]);
  }
  return out;
}

struct SearchResult {
  std::vector<int> best;
  std::vector<std::size_t> position_of;
  std::uint64_t best_leaves = 0;  // leaves attaining `best`
};

/// Individualization-refinement: split the first smallest non-singleton
/// cell on each of its vertices in turn, refine, and recurse down to
/// discrete partitions. Every leaf is a labeling; the minimal certificate
/// over all leaves is canonical, and the leaves attaining it form one orbit
/// of the vertex automorphism group, which acts freely on them.
inline SearchResult canonical_search(const std::vector<std::vector<int>>& m) {
  const auto n = m.size();
  SearchResult res;
  auto recurse = [&](auto&& self, std::vector<int> colour) -> void {
    colour = refine(m, std::move(colour));
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t x = 0; x < n; ++x) cells[colour[x]].push_back(x);
    if (cells.size() == n) {
      std::vector<std::size_t> pos(n);
      for (std::size_t x = 0; x < n; ++x) {
        pos[x] = static_cast<std::size_t>(colour[x]);
      }
      auto cert = relabeled_upper_triangle(m, pos);
      if (res.best_leaves == 0 || cert < res.best) {
        res.best = std::move(cert);
        res.position_of = std::move(pos);
        res.best_leaves = 1;
      } else if (cert == res.best) {
        ++res.best_leaves;
      }
      return;
    }
    const std::vector<std::size_t>* target = nullptr;
    int target_colour = 0;
    for (const auto& [c, cell] : cells) {
      if (cell.size() > 1 && (!target || cell.size() < target->size())) {
        target = &cell;
        target_colour = c;
      }
    }
    for (auto v : *target) {
      auto split = colour;
      for (auto& c : split) c *= 2;
      split[v] = 2 * target_colour - 1;
      self(self, std::move(split));
    }
  };
  recurse(recurse, std::vector<int>(n, 0));
  return res;
}

}  // namespace detail

/// Canonical certificate: the upper-triangular multiplicity matrix under the
/// canonical labeling. Two graphs are isomorphic iff their certificates are
/// equal.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<int> upper;  // row-major upper triangle incl. diagonal
  std::vector<std::size_t> position_of;  // vertex -> canonical label

  auto operator<=>(const CanonicalForm& o) const {
    if (auto c = vertex_count <=> o.vertex_count; c != 0) return c;
    return upper <=> o.upper;
  }
  bool operator==(const CanonicalForm& o) const {
    return vertex_count == o.vertex_count && upper == o.upper;
  }
};

inline CanonicalForm canonical_form(const FeynmanGraph& g) {
  auto res = detail::canonical_search(g.multiplicity_matrix());
  return {g.vertex_count(), std::move(res.best), std::move(res.position_of)};
}

inline bool isomorphic(const FeynmanGraph& a, const FeynmanGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

/// The canonical representative: vertices relabeled canonically, edges listed
/// in lexicographic order of their (u <= v) endpoints.
inline FeynmanGraph canonical_graph(const FeynmanGraph& g) {
  const auto cf = canonical_form(g);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    auto a = cf.position_of[e.u], b = cf.position_of[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  return FeynmanGraph(g.vertex_count(), std::move(edges));
}

namespace detail {

inline std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detail

/// Order of the multigraph automorphism group (acting on half-edges): vertex
/// permutations preserving all multiplicities, times m! per bundle of m
/// parallel edges, times 2^l l! for l loops at a vertex.
inline std::uint64_t automorphism_count(const FeynmanGraph& g) {
  const auto m = g.multiplicity_matrix();
  const auto n = m.size();
  std::uint64_t edge_factor = 1;
  for (std::size_t i = 0; i < n; ++i) {
    edge_factor *= detail::factorial(m[i][i]) << m[i][i];
    for (std::size_t j = i + 1; j < n; ++j) {
      edge_factor *= detail::factorial(m[i][j]);
    }
  }
  return detail::canonical_search(m).best_leaves * edge_factor;
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kDefaultMaxGenus = 5;

struct EnumerateOptions {
  bool bridgeless_only = false;
  int max_genus = kDefaultMaxGenus;
};

/// One canonical representative per isomorphism class of connected trivalent
/// multigraphs of genus g, sorted by canonical certificate.
inline std::vector<FeynmanGraph> enumerate_genus(int genus,
                                                 EnumerateOptions opts = {}) {
  if (genus < 2) {
    throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
  }
  if (genus > opts.max_genus) {
    throw Error(ErrorCode::GenusTooLarge,
                "genus " + std::to_string(genus) + " exceeds bound " +
                    std::to_string(opts.max_genus));
  }
  const auto n = static_cast<std::size_t>(2 * genus - 2);
  // Fill the multiplicity matrix cell by cell (row-major, upper triangle),
  // keeping each vertex's remaining valence non-negative. Every labeled
  // multigraph appears at most once; an isomorphism-invariant filter keeps
  // only labelings whose vertex signatures are non-increasing, which every
  // class admits.
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  std::vector<int> free(n, 3);
  std::set<CanonicalForm> seen;
  std::vector<FeynmanGraph> out;

  auto emit = [&]() {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (int k = 0; k < m[i][j]; ++k) edges.push_back({i, j});
      }
    }
    if (!detail::is_connected(n, edges)) return;
    FeynmanGraph g(n, std::move(edges));
    auto cf = canonical_form(g);
    if (seen.count(cf)) return;
    seen.insert(cf);
    auto rep = canonical_graph(g);
    if (opts.bridgeless_only && has_bridge(rep)) return;
    out.push_back(std::move(rep));
  };

  // Loop count, then neighbour multiplicities in decreasing order.
  auto signature = [&](std::size_t x) {
    std::vector<int> sig;
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && m[x][y] > 0) sig.push_back(m[x][y]);
    }
    std::sort(sig.rbegin(), sig.rend());
    sig.insert(sig.begin(), m[x][x]);
    return sig;
  };

  auto recurse = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == n) {
      emit();
      return;
    }
    if (j == n) {
      if (free[i] != 0) return;
      if (i > 0 && signature(i) > signature(i - 1)) return;
      self(self, i + 1, i + 1);
      return;
    }
    if (i == j) {
      for (int loops = free[i] / 2; loops >= 0; --loops) {
        if (i > 0 && loops > m[i - 1][i - 1]) continue;
        m[i][i] = loops;
        free[i] -= 2 * loops;
        self(self, i, j + 1);
        free[i] += 2 * loops;
        m[i][i] = 0;
      }
      return;
    }
    for (int k = std::min(free[i], free[j]); k >= 0; --k) {
      m[i][j] = m[j][i] = k;
      free[i] -= k;
      free[j] -= k;
      self(self, i, j + 1);
      free[i] += k;
      free[j] += k;
      m[i][j] = m[j][i] = 0;
    }
  };
  recurse(recurse, 0, 0);

  std::vector<std::pair<CanonicalForm, FeynmanGraph>> keyed;
  for (auto& g : out) keyed.push_back({canonical_form(g), std::move(g)});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [cf, g] : keyed) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Balanced orientations

/// Per-edge orientation: edge k runs from source[k] to sink[k]. Loops carry
/// no meaningful direction and are flagged.
struct Orientation {
  std::vector<std::size_t> source;
  std::vector<std::size_t> sink;
  std::vector<bool> loop;
};

struct BalancedFlow {
  Orientation orientation;
  std::vector<long> weights;
};

/// True iff every weight is positive and at each vertex the outgoing weight
/// equals the incoming weight.
inline bool is_balanced(const FeynmanGraph& g, const BalancedFlow& f) {
  if (f.weights.size() != g.edge_count()) return false;
  std::vector<long> net(g.vertex_count(), 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (f.weights[k] <= 0) return false;
    if (f.orientation.loop[k]) continue;
    net[f.orientation.source[k]] -= f.weights[k];
    net[f.orientation.sink[k]] += f.weights[k];
  }
  return std::all_of(net.begin(), net.end(), [](long x) { return x == 0; });
}

namespace detail {

/// Ear decomposition: orient a first cycle, then repeatedly attach an
/// oriented path that leaves the known part through one edge and returns
/// through another. Every vertex ends on a directed cycle through the first
/// vertex of the initial cycle, so no cut is oriented one way only.
inline Orientation ear_orientation(const FeynmanGraph& g) {
  const auto n = g.vertex_count();
  const auto& edges = g.edges();
  const auto m = edges.size();
  Orientation o{std::vector<std::size_t>(m), std::vector<std::size_t>(m),
                std::vector<bool>(m, false)};
  std::vector<bool> oriented(m, false), known(n, false);
  for (std::size_t k = 0; k < m; ++k) {
    o.loop[k] = edges[k].is_loop();
    o.source[k] = edges[k].u;
    o.sink[k] = edges[k].v;
    if (o.loop[k]) oriented[k] = true;
  }
  auto orient = [&](std::size_t k, std::size_t from) {
    o.source[k] = from;
    o.sink[k] = edges[k].other(from);
    oriented[k] = true;
  };

  // Path from `start` through unknown vertices back to the known part (or
  // back to `start` when nothing is known yet), never using `banned`.
  // Returns the edge sequence, or empty if none exists.
  auto find_ear = [&](std::size_t start, std::size_t banned,
                      std::size_t target_when_empty, bool anything_known) {
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> via(n, kNone);
    std::vector<bool> visited(n, false);
    std::queue<std::size_t> q;
    q.push(start);
    visited[start] = true;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (std::size_t k = 0; k < m; ++k) {
        if (k == banned || oriented[k] || edges[k].is_loop() ||
            !edges[k].touches(x)) {
          continue;
        }
        auto y = edges[k].other(x);
        const bool hit =
            anything_known ? known[y] : (y == target_when_empty);
        if (hit) {
          std::vector<std::size_t> path{k};
          for (auto z = x; z != start;) {
            auto e = via[z];
            path.push_back(e);
            z = edges[e].other(z);
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (!visited[y] && !known[y]) {
          visited[y] = true;
          via[y] = k;
          q.push(y);
        }
      }
    }
    return std::vector<std::size_t>{};
  };

  auto walk = [&](std::size_t from, const std::vector<std::size_t>& path) {
    auto x = from;
    for (auto k : path) {
      orient(k, x);
      known[x] = true;
      x = edges[k].other(x);
    }
  };

  // Initial cycle through vertex 0: leave along some edge, come back
  // along a different one.
  for (std::size_t k = 0; k < m; ++k) {
    if (edges[k].is_loop() || !edges[k].touches(0)) continue;
    auto y = edges[k].other(0);
    auto back = find_ear(y, k, 0, false);
    if (back.empty()) continue;
    orient(k, 0);
    known[0] = true;
    walk(y, back);
    break;
  }
  if (!known[0]) {
    throw Error(ErrorCode::HasBridge, "no cycle through vertex 1");
  }

  for (;;) {
    bool progressed = false, done = true;
    for (std::size_t k = 0; k < m && !progressed; ++k) {
      if (oriented[k]) continue;
      const auto& e = edges[k];
      if (known[e.u] == known[e.v]) continue;
      done = false;
      auto inside = known[e.u] ? e.u : e.v;
      auto outside = e.other(inside);
      auto path = find_ear(outside, k, 0, true);
      if (path.empty()) continue;
      orient(k, inside);
      walk(outside, path);
      progressed = true;
    }
    if (!progressed) {
      if (!done) throw Error(ErrorCode::HasBridge, "ear construction failed");
      break;
    }
  }
  if (std::find(known.begin(), known.end(), false) != known.end()) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  // Chords between known vertices keep their listed direction.
  return o;
}

/// Minimum-total positive integer circulation on a fixed orientation:
/// weights = 1 + extra, extra found by successive shortest paths.
inline std::optional<std::vector<long>> min_positive_circulation(
    std::size_t n, const Orientation& o) {
  const auto m = o.source.size();
  std::vector<long> w(m, 1);
  std::vector<long> excess(n, 0);  // inflow - outflow with unit weights
  for (std::size_t k = 0; k < m; ++k) {
    if (o.loop[k]) continue;
    excess[o.source[k]] -= 1;
    excess[o.sink[k]] += 1;
  }
  // A vertex with positive excess must send extra flow out along its edges
  // to a vertex with negative excess; residual arcs run forward (cost +1)
  // or backward over edges already carrying extra flow (cost -1).
  for (;;) {
    std::size_t src = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (excess[x] > 0) {
        src = x;
        break;
      }
    }
    if (src == n) return w;
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<long> dist(n, kInf);
    std::vector<std::pair<std::size_t, int>> pred(n, {m, 0});
    dist[src] = 0;
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (std::size_t k = 0; k < m; ++k) {
        if (o.loop[k]) continue;
        auto a = o.source[k], b = o.sink[k];
        if (dist[a] < kInf && dist[a] + 1 < dist[b]) {
          dist[b] = dist[a] + 1;
          pred[b] = {k, +1};
          changed = true;
        }
        if (w[k] > 1 && dist[b] < kInf && dist[b] - 1 < dist[a]) {
          dist[a] = dist[b] - 1;
          pred[a] = {k, -1};
          changed = true;
        }
      }
      if (!changed) break;
    }
    std::size_t dst = n;
    long best = kInf;
    for (std::size_t x = 0; x < n; ++x) {
      if (excess[x] < 0 && dist[x] < best) {
        best = dist[x];
        dst = x;
      }
    }
    if (dst == n) return std::nullopt;
    for (auto x = dst; x != src;) {
      auto [k, dir] = pred[x];
      w[k] += dir;
      x = dir > 0 ? o.source[k] : o.sink[k];
    }
    excess[src] -= 1;
    excess[dst] += 1;
  }
}

}  // namespace detail

/// An orientation with no one-way cut, plus minimal positive balanced
/// integer weights on it.
inline BalancedFlow balanced_orientation(const FeynmanGraph& g) {
  validate(g);
  if (auto b = bridges(g); !b.empty()) {
    throw Error(ErrorCode::HasBridge,
                "edge q" + std::to_string(b.front() + 1) + " is a bridge");
  }
  BalancedFlow flow;
  flow.orientation = detail::ear_orientation(g);
  auto w = detail::min_positive_circulation(g.vertex_count(), flow.orientation);
  if (!w) throw Error(ErrorCode::HasBridge, "no positive circulation");
  flow.weights = std::move(*w);
  return flow;
}

// ---------------------------------------------------------------------------
// JSON: {"vertices": n, "edges": [[i, j], ...]} with 1-based vertices.

inline FeynmanGraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("vertices").get<long>();
    if (n < 0) throw Error(ErrorCode::ParseError, "negative vertex count");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::ParseError, "edge must be a pair [i, j]");
      }
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return FeynmanGraph::from_one_based(static_cast<std::size_t>(n), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline nlohmann::json graph_to_json(const FeynmanGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

/// Singular-style listing, e.g. "[[1, 3], [1, 2], [1, 2]]".
inline std::string edge_list_string(const FeynmanGraph& g) {
  std::string s = "[";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k) s += ", ";
    s += "[" + std::to_string(g.edge(k).u + 1) + ", " +
         std::to_string(g.edge(k).v + 1) + "]";
  }
  return s + "]";
}

}  // namespace ellcov
