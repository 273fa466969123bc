#pragma once

// Printing in the style of Singular's `dp` ordering, so output can be diffed
// against Singular sessions by eye.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ellcov/rational.hpp"

namespace ellcov {

using ExponentTerm = std::pair<std::vector<int>, Rational>;

/// Degree reverse lexicographic comparison: true if a comes before b in
/// Singular's printed order (larger first).
inline bool degrevlex_before(const std::vector<int>& a,
                             const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// "3*x(1)^12+x(1)^8*x(2)^4"; `name(i)` names variable i (0-based).
inline std::string singular_string(
    std::vector<ExponentTerm> terms,
    const std::function<std::string(std::size_t)>& name) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return degrevlex_before(a.first, b.first);
  });
  std::string s;
  bool first = true;
  for (const auto& [exps, c] : terms) {
    if (c == 0) continue;
    const bool constant =
        std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    if (!first && c > 0) s += '+';
    first = false;
    if (constant) {
      s += c.str();
      continue;
    }
    if (c == -1) {
      s += '-';
    } else if (c != 1) {
      s += c.str() + '*';
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!first_factor) s += '*';
      first_factor = false;
      s += name(i);
      if (exps[i] != 1) s += '^' + std::to_string(exps[i]);
    }
  }
  return first ? "0" : s;
}

inline std::string indexed_name(const std::string& base, std::size_t i) {
  return base + "(" + std::to_string(i + 1) + ")";
}

}  // namespace ellcov
