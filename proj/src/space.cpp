#include "cpath/space.hpp"

#include <algorithm>
#include <queue>

#include "cpath/error.hpp"

namespace cpath {

namespace {

bool isNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == ':' || c == '\'';
}

void checkName(const std::string& name, const char* what) {
  if (name.empty() || !std::all_of(name.begin(), name.end(), isNameChar) || name == "refl" ||
      name == "inv") {
    throw Error(ErrorCode::InvalidSpace, std::string("invalid ") + what + " name '" + name + "'");
  }
}

}  // namespace

LetterSeq inverse(const LetterSeq& letters) {
  LetterSeq out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(it->inverse());
  return out;
}

SpacePresentation::SpacePresentation(std::vector<std::string> points, std::vector<Edge> edges,
                                     std::vector<LetterSeq> relators, std::string basepoint)
    : points_(std::move(points)),
      edges_(std::move(edges)),
      relators_(std::move(relators)),
      basepoint_(std::move(basepoint)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    checkName(points_[i], "point");
    if (!pointIndex_.emplace(points_[i], i).second)
      throw Error(ErrorCode::InvalidSpace, "duplicate point '" + points_[i] + "'");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    checkName(e.name, "edge");
    if (!pointIndex_.contains(e.src) || !pointIndex_.contains(e.dst))
      throw Error(ErrorCode::InvalidSpace, "edge '" + e.name + "' has an undeclared endpoint");
    if (!edgeIndex_.emplace(e.name, i).second)
      throw Error(ErrorCode::InvalidSpace, "duplicate edge '" + e.name + "'");
  }
  if (!pointIndex_.contains(basepoint_))
    throw Error(ErrorCode::InvalidSpace, "basepoint '" + basepoint_ + "' is not a point");

  for (std::size_t r = 0; r < relators_.size(); ++r) {
    const LetterSeq& rel = relators_[r];
    if (rel.empty()) continue;
    for (const auto& l : rel) {
      if (!edgeIndex_.contains(l.edge))
        throw Error(ErrorCode::InvalidSpace,
                    "relator " + std::to_string(r) + " uses unknown edge '" + l.edge + "'");
    }
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const auto& next = rel[(i + 1) % rel.size()];
      if (letterDst(rel[i]) != letterSrc(next))
        throw Error(ErrorCode::InvalidSpace, "relator " + std::to_string(r) + " is not a loop");
    }
  }
}

std::optional<std::size_t> SpacePresentation::pointIndex(const std::string& name) const {
  auto it = pointIndex_.find(name);
  if (it == pointIndex_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SpacePresentation::edgeIndex(const std::string& name) const {
  auto it = edgeIndex_.find(name);
  if (it == edgeIndex_.end()) return std::nullopt;
  return it->second;
}

const Edge& SpacePresentation::edge(const std::string& name) const {
  auto it = edgeIndex_.find(name);
  if (it == edgeIndex_.end()) throw Error(ErrorCode::UnknownEdge, "'" + name + "'");
  return edges_[it->second];
}

std::string SpacePresentation::letterSrc(const EdgeLetter& l) const {
  const Edge& e = edge(l.edge);
  return l.orientation == Orientation::fwd ? e.src : e.dst;
}

std::string SpacePresentation::letterDst(const EdgeLetter& l) const {
  const Edge& e = edge(l.edge);
  return l.orientation == Orientation::fwd ? e.dst : e.src;
}

SpacePresentation SpacePresentation::withBasepoint(const std::string& point) const {
  if (!hasPoint(point)) throw Error(ErrorCode::UnknownPoint, "'" + point + "'");
  return SpacePresentation(points_, edges_, relators_, point);
}

bool isConnected(const SpacePresentation& space) {
  const auto n = space.points().size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : space.edges()) {
    auto s = *space.pointIndex(e.src);
    auto d = *space.pointIndex(e.dst);
    adj[s].push_back(d);
    adj[d].push_back(s);
  }
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  todo.push(*space.pointIndex(space.basepoint()));
  seen[todo.front()] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push(w);
      }
    }
  }
  return count == n;
}

}  // namespace cpath
