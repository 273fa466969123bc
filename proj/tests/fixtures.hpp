#pragma once

#include <vector>

#include "ellcov/graph.hpp"
#include "ellcov/order.hpp"

namespace fixtures {

// Graphs as listed in the Singular session: edge order fixes q_1, q_2, ...
inline ellcov::FeynmanGraph raupe() {
  return ellcov::FeynmanGraph::from_one_based(
      4, {{1, 3}, {1, 2}, {1, 2}, {2, 4}, {3, 4}, {3, 4}});
}
inline ellcov::FeynmanGraph k4() {
  return ellcov::FeynmanGraph::from_one_based(
      4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}
inline ellcov::FeynmanGraph theta() {
  return ellcov::FeynmanGraph::from_one_based(2, {{1, 2}, {1, 2}, {1, 2}});
}
inline ellcov::FeynmanGraph dumbbell() {
  return ellcov::FeynmanGraph::from_one_based(2, {{1, 1}, {1, 2}, {2, 2}});
}

inline ellcov::VertexOrder order(std::vector<int> labels) {
  return ellcov::VertexOrder::from_one_based(labels);
}

}  // namespace fixtures
