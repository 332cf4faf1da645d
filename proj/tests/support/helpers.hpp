#pragma once

#include <string>
#include <vector>

#include "cpath/path_expr.hpp"
#include "cpath/space.hpp"

namespace testing_support {

inline void positionsInto(const cpath::PathExpr& e, cpath::Position& cur, std::vector<cpath::Position>& out) {
  out.push_back(cur);
  if (e.isSymm()) {
    cur.push_back(cpath::Move::symm);
    positionsInto(e.child(), cur, out);
    cur.pop_back();
  } else if (e.isTrans()) {
    cur.push_back(cpath::Move::left);
    positionsInto(e.left(), cur, out);
    cur.back() = cpath::Move::right;
    positionsInto(e.right(), cur, out);
    cur.pop_back();
  }
}

inline std::vector<cpath::Position> allPositions(const cpath::PathExpr& e) {
  std::vector<cpath::Position> out;
  cpath::Position cur;
  positionsInto(e, cur, out);
  return out;
}

// All expressions of depth <= maxDepth over the given leaves, grouped by
// exact depth (index 0 unused). Loops only, so every tree is well formed.
inline std::vector<std::vector<cpath::PathExpr>> exprsByDepth(const std::vector<cpath::PathExpr>& leaves,
                                                              int maxDepth) {
  std::vector<std::vector<cpath::PathExpr>> by(static_cast<std::size_t>(maxDepth) + 1);
  by[1] = leaves;
  std::vector<cpath::PathExpr> below = leaves;
  for (int d = 2; d <= maxDepth; ++d) {
    auto& layer = by[static_cast<std::size_t>(d)];
    for (const auto& x : by[static_cast<std::size_t>(d) - 1]) layer.push_back(cpath::PathExpr::symm(x));
    for (const auto& x : below)
      for (const auto& y : below)
        if (x.depth() == static_cast<std::size_t>(d) - 1 || y.depth() == static_cast<std::size_t>(d) - 1)
          layer.push_back(cpath::PathExpr::trans(x, y));
    below.insert(below.end(), layer.begin(), layer.end());
  }
  return by;
}

}  // namespace testing_support
