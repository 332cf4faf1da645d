#include "cpath/complex_map.hpp"

#include "cpath/error.hpp"

namespace cpath {

void validateMap(const ComplexMap& m, const SpacePresentation& source,
                 const SpacePresentation& target) {
  for (const auto& p : source.points()) {
    auto it = m.pointMap.find(p);
    if (it == m.pointMap.end()) throw Error(ErrorCode::IllFormedMap, "point '" + p + "' unmapped");
    if (!target.hasPoint(it->second))
      throw Error(ErrorCode::IllFormedMap, "image of '" + p + "' is not a target point");
  }
  for (const auto& e : source.edges()) {
    auto it = m.edgeMap.find(e.name);
    if (it == m.edgeMap.end())
      throw Error(ErrorCode::IllFormedMap, "edge '" + e.name + "' unmapped");
    std::pair<std::string, std::string> ends;
    try {
      ends = endpoints(it->second, target);
    } catch (const Error& err) {
      throw Error(ErrorCode::IllFormedMap, "image of '" + e.name + "': " + err.what());
    }
    if (ends.first != m.pointMap.at(e.src) || ends.second != m.pointMap.at(e.dst))
      throw Error(ErrorCode::IllFormedMap, "image of '" + e.name + "' has wrong endpoints");
  }
}

ComplexMap identityMap(const SpacePresentation& space) {
  ComplexMap m;
  for (const auto& p : space.points()) m.pointMap.emplace(p, p);
  for (const auto& e : space.edges()) m.edgeMap.emplace(e.name, PathExpr::edge(e.name));
  return m;
}

PathExpr mapPath(const ComplexMap& m, const PathExpr& expr) {
  switch (expr.kind()) {
    case NodeKind::refl: {
      auto it = m.pointMap.find(expr.name());
      if (it == m.pointMap.end()) throw Error(ErrorCode::UnknownPoint, "'" + expr.name() + "'");
      return PathExpr::refl(it->second);
    }
    case NodeKind::edge: {
      auto it = m.edgeMap.find(expr.name());
      if (it == m.edgeMap.end()) throw Error(ErrorCode::UnknownEdge, "'" + expr.name() + "'");
      if (expr.orientation() == Orientation::fwd) return it->second;
      // a single letter just flips, so the identity map is exact on e^-1 too
      if (it->second.isEdge()) return PathExpr::edge(it->second.letter().inverse());
      return PathExpr::symm(it->second);
    }
    case NodeKind::symm:
      return PathExpr::symm(mapPath(m, expr.child()));
    case NodeKind::trans: {
      PathExpr l = mapPath(m, expr.left());
      return PathExpr::trans(std::move(l), mapPath(m, expr.right()));
    }
  }
  return expr;
}

PathExpr changeBasepoint(const PathExpr& gamma, const PathExpr& alpha,
                         const SpacePresentation& space) {
  auto g = endpoints(gamma, space);
  auto a = endpoints(alpha, space);
  if (a.first != a.second) throw Error(ErrorCode::IllComposed, "alpha is not a loop");
  if (a.first != g.first)
    throw Error(ErrorCode::IllComposed, "alpha is based at '" + a.first + "', gamma starts at '" +
                                            g.first + "'");
  return PathExpr::trans(PathExpr::symm(gamma), PathExpr::trans(alpha, gamma));
}

}  // namespace cpath
