#pragma once

#include <string>
#include <vector>

#include "cpath/group.hpp"
#include "cpath/path_expr.hpp"
#include "cpath/space.hpp"

namespace cpath {

struct SpanningTree {
  std::vector<bool> inTree;          // per edge index
  std::vector<LetterSeq> pathTo;     // per point index, letters from the basepoint
};

/// Breadth-first from the basepoint, edges in declaration order. Seed edges
/// are grown first (in their order) so that they end up in the tree whenever
/// they form a tree themselves. Throws NotConnected.
SpanningTree spanningTree(const SpacePresentation& space,
                          const std::vector<std::string>& seedEdges = {});

/// π₁ of a connected 2-complex read off a spanning tree: non-tree edges
/// generate, 2-cells relate. Trivial relators are dropped and generators
/// killed by a one-letter relator are eliminated.
class Pi1 {
 public:
  Pi1(SpacePresentation space, const std::vector<std::string>& seedEdges = {});

  const SpacePresentation& space() const { return space_; }
  const GroupPresentation& group() const { return group_; }
  const SpanningTree& tree() const { return tree_; }

  /// Generator of an edge, or -1 for tree edges and eliminated generators.
  int generatorOf(const std::string& edge) const;
  const std::string& generatorEdge(int gen) const { return genEdges_[static_cast<std::size_t>(gen)]; }

  Word encodeLetters(const LetterSeq& letters) const;
  /// Normalizes first. Throws IllComposed unless expr is a loop at the basepoint.
  Word encodeLoop(const PathExpr& loop) const;

  LetterSeq treeLetters(const std::string& point) const;
  PathExpr treePath(const std::string& point) const;
  /// tree(src) · e · tree(dst)⁻¹, cancelled.
  LetterSeq generatorLetters(int gen) const;
  /// Loop at the basepoint whose letters are the cancelled concatenation of
  /// the generator loops.
  PathExpr realize(const Word& w) const;

 private:
  SpacePresentation space_;
  SpanningTree tree_;
  GroupPresentation group_;
  std::vector<int> edgeGen_;  // per edge index
  std::vector<std::string> genEdges_;
};

inline Pi1 presentationOfPi1(const SpacePresentation& space) { return Pi1(space); }

}  // namespace cpath
