#pragma once

#include <map>
#include <string>

#include "cpath/path_expr.hpp"
#include "cpath/space.hpp"

namespace cpath {

/// Cellular map on 1-skeletons: points to points, edges to paths.
struct ComplexMap {
  std::map<std::string, std::string> pointMap;
  std::map<std::string, PathExpr> edgeMap;
};

/// Every point and edge of `source` mapped, images well-formed in `target`
/// with matching endpoints. Throws IllFormedMap.
void validateMap(const ComplexMap& m, const SpacePresentation& source,
                 const SpacePresentation& target);

ComplexMap identityMap(const SpacePresentation& space);

/// Throws UnknownEdge, UnknownPoint.
PathExpr mapPath(const ComplexMap& m, const PathExpr& expr);

/// σ(γ)·(α·γ) for γ : a -> b and α a loop at a. Throws IllComposed.
PathExpr changeBasepoint(const PathExpr& gamma, const PathExpr& alpha,
                         const SpacePresentation& space);

}  // namespace cpath
