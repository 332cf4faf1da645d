#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cpath/space.hpp"

namespace cpath {

enum class NodeKind : std::uint8_t { refl, edge, symm, trans };

/// Immutable path expression tree. Copies share structure.
class PathExpr {
 public:
  static PathExpr refl(std::string point);
  static PathExpr edge(std::string name, Orientation o = Orientation::fwd);
  static PathExpr edge(const EdgeLetter& l) { return edge(l.edge, l.orientation); }
  static PathExpr symm(PathExpr child);
  static PathExpr trans(PathExpr left, PathExpr right);

  NodeKind kind() const noexcept;
  bool isRefl() const noexcept { return kind() == NodeKind::refl; }
  bool isEdge() const noexcept { return kind() == NodeKind::edge; }
  bool isSymm() const noexcept { return kind() == NodeKind::symm; }
  bool isTrans() const noexcept { return kind() == NodeKind::trans; }

  // refl: the point; edge: the edge name
  const std::string& name() const noexcept;
  Orientation orientation() const noexcept;
  EdgeLetter letter() const { return {name(), orientation()}; }

  const PathExpr& child() const noexcept;
  const PathExpr& left() const noexcept;
  const PathExpr& right() const noexcept;

  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  bool sameNode(const PathExpr& o) const noexcept { return node_ == o.node_; }
  const void* id() const noexcept { return node_.get(); }

  // Set by the normalizer once no rule of the full set applies in letter
  // mode, which also rules out every subset and opaque mode.
  bool knownNormal() const noexcept;
  void markNormal() const noexcept;

  friend bool operator==(const PathExpr& x, const PathExpr& y);

 private:
  struct Node;
  PathExpr() = default;
  explicit PathExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PathExpr::Node {
  NodeKind kind = NodeKind::refl;
  Orientation orientation = Orientation::fwd;
  std::string name;
  PathExpr a, b;
  std::size_t size = 1;
  std::size_t depth = 1;
  std::size_t hash = 0;
  mutable std::atomic<bool> normal{false};
};

inline NodeKind PathExpr::kind() const noexcept { return node_->kind; }
inline const std::string& PathExpr::name() const noexcept { return node_->name; }
inline Orientation PathExpr::orientation() const noexcept { return node_->orientation; }
inline const PathExpr& PathExpr::child() const noexcept { return node_->a; }
inline const PathExpr& PathExpr::left() const noexcept { return node_->a; }
inline const PathExpr& PathExpr::right() const noexcept { return node_->b; }
inline std::size_t PathExpr::size() const noexcept { return node_->size; }
inline std::size_t PathExpr::depth() const noexcept { return node_->depth; }
inline std::size_t PathExpr::hash() const noexcept { return node_->hash; }
inline bool PathExpr::knownNormal() const noexcept { return node_->normal.load(std::memory_order_relaxed); }
inline void PathExpr::markNormal() const noexcept { node_->normal.store(true, std::memory_order_relaxed); }

struct PathExprHash {
  std::size_t operator()(const PathExpr& e) const noexcept { return e.hash(); }
};

enum class Move : std::uint8_t { left, right, symm };
using Position = std::vector<Move>;

/// "root" or dot-joined moves, e.g. "left.symm".
std::string positionToString(const Position& pos);
/// Throws SyntaxError.
Position parsePosition(const std::string& text);

/// Throws BadPosition.
const PathExpr& subtermAt(const PathExpr& expr, const Position& pos);
PathExpr replaceAt(const PathExpr& expr, const Position& pos, PathExpr replacement);

/// (src, dst). Throws UnknownEdge, IllComposed.
std::pair<std::string, std::string> endpoints(const PathExpr& expr, const SpacePresentation& space);
bool wellFormed(const PathExpr& expr, const SpacePresentation& space);
/// One end only, without checking composability. Throws UnknownEdge.
std::string pathSource(const PathExpr& expr, const SpacePresentation& space);
std::string pathTarget(const PathExpr& expr, const SpacePresentation& space);

/// Throws IllComposed when dst(p) != src(q).
PathExpr compose(const PathExpr& p, const PathExpr& q, const SpacePresentation& space);
PathExpr invert(const PathExpr& p);
PathExpr reflAt(const std::string& point);

/// Right-associated chain of letters, or refl(point) for the empty sequence.
PathExpr fromLetters(const LetterSeq& letters, const std::string& point);

/// Letters of a chain of edge nodes (refl counts as empty). Returns false for
/// anything else, e.g. a tree still containing σ or left-nested composition.
bool lettersOfChain(const PathExpr& expr, LetterSeq& out);

/// Edge letters in traversal order, σ reversing and flipping; no cancellation.
LetterSeq flattenLetters(const PathExpr& expr);
/// Cancels adjacent mutually inverse letters.
LetterSeq reduceLetters(const LetterSeq& letters);

}  // namespace cpath
