#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "ellcov/error.hpp"

namespace ellcov {

/// A total order on the vertices, earliest first. Stored 0-based.
class VertexOrder {
 public:
  VertexOrder() = default;

  explicit VertexOrder(std::vector<std::size_t> sequence)
      : sequence_(std::move(sequence)), rank_(sequence_.size()) {
    std::vector<bool> seen(sequence_.size(), false);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
      const auto v = sequence_[i];
      if (v >= sequence_.size() || seen[v]) {
        throw Error(ErrorCode::InvalidArgument,
                    "vertex order is not a permutation");
      }
      seen[v] = true;
      rank_[v] = i;
    }
  }

  static VertexOrder identity(std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), std::size_t{0});
    return VertexOrder(std::move(s));
  }

  /// From 1-based labels, e.g. {3, 1, 2, 4} for x3 < x1 < x2 < x4.
  static VertexOrder from_one_based(const std::vector<int>& labels) {
    std::vector<std::size_t> s;
    s.reserve(labels.size());
    for (int l : labels) {
      if (l < 1) {
        throw Error(ErrorCode::InvalidArgument, "vertex labels start at 1");
      }
      s.push_back(static_cast<std::size_t>(l - 1));
    }
    return VertexOrder(std::move(s));
  }

  /// All n! orders in lexicographic order of their sequences.
  static std::vector<VertexOrder> all(std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), std::size_t{0});
    std::vector<VertexOrder> out;
    do {
      out.emplace_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
  }

  std::size_t size() const noexcept { return sequence_.size(); }
  const std::vector<std::size_t>& sequence() const noexcept {
    return sequence_;
  }
  std::size_t rank(std::size_t v) const { return rank_.at(v); }
  bool before(std::size_t a, std::size_t b) const {
    return rank_.at(a) < rank_.at(b);
  }

  VertexOrder reversed() const {
    return VertexOrder(
        std::vector<std::size_t>(sequence_.rbegin(), sequence_.rend()));
  }

  /// "x3<x1<x2<x4"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
      if (i) s += '<';
      s += 'x' + std::to_string(sequence_[i] + 1);
    }
    return s;
  }

  bool operator==(const VertexOrder& o) const {
    return sequence_ == o.sequence_;
  }

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> rank_;
};

}  // namespace ellcov
