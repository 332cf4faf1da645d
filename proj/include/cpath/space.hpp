#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cpath {

enum class Orientation : std::uint8_t { fwd, rev };

constexpr Orientation flip(Orientation o) noexcept {
  return o == Orientation::fwd ? Orientation::rev : Orientation::fwd;
}

/// One traversal of an edge; `rev` walks it from dst to src.
struct EdgeLetter {
  std::string edge;
  Orientation orientation = Orientation::fwd;

  EdgeLetter inverse() const { return {edge, flip(orientation)}; }
  friend bool operator==(const EdgeLetter&, const EdgeLetter&) = default;
};

using LetterSeq = std::vector<EdgeLetter>;

LetterSeq inverse(const LetterSeq& letters);

struct Edge {
  std::string name;
  std::string src;
  std::string dst;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite 2-complex: points, directed edges, and 2-cells given by their
/// boundary loops. Validated on construction and immutable afterwards.
class SpacePresentation {
 public:
  SpacePresentation(std::vector<std::string> points, std::vector<Edge> edges,
                    std::vector<LetterSeq> relators, std::string basepoint);

  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<LetterSeq>& relators() const noexcept { return relators_; }
  const std::string& basepoint() const noexcept { return basepoint_; }

  bool hasPoint(const std::string& name) const { return pointIndex_.contains(name); }
  std::optional<std::size_t> pointIndex(const std::string& name) const;
  std::optional<std::size_t> edgeIndex(const std::string& name) const;

  /// Throws UnknownEdge.
  const Edge& edge(const std::string& name) const;

  std::string letterSrc(const EdgeLetter& l) const;
  std::string letterDst(const EdgeLetter& l) const;

  /// Same complex, different basepoint. Throws UnknownPoint.
  SpacePresentation withBasepoint(const std::string& point) const;

  friend bool operator==(const SpacePresentation& a, const SpacePresentation& b) {
    return a.points_ == b.points_ && a.edges_ == b.edges_ && a.relators_ == b.relators_ &&
           a.basepoint_ == b.basepoint_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<Edge> edges_;
  std::vector<LetterSeq> relators_;
  std::string basepoint_;
  std::unordered_map<std::string, std::size_t> pointIndex_;
  std::unordered_map<std::string, std::size_t> edgeIndex_;
};

/// Graph connectivity of the 1-skeleton.
bool isConnected(const SpacePresentation& space);

}  // namespace cpath
