#include "cpath/path_expr.hpp"

#include <algorithm>
#include <functional>

#include "cpath/error.hpp"

namespace cpath {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

PathExpr PathExpr::refl(std::string point) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::refl;
  n->hash = mix(0x51, std::hash<std::string>{}(point));
  n->name = std::move(point);
  return PathExpr(std::move(n));
}

PathExpr PathExpr::edge(std::string name, Orientation o) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::edge;
  n->orientation = o;
  n->hash = mix(o == Orientation::fwd ? 0x77 : 0x78, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return PathExpr(std::move(n));
}

PathExpr PathExpr::symm(PathExpr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::symm;
  n->size = child.size() + 1;
  n->depth = child.depth() + 1;
  n->hash = mix(0x33, child.hash());
  n->a = std::move(child);
  return PathExpr(std::move(n));
}

PathExpr PathExpr::trans(PathExpr left, PathExpr right) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::trans;
  n->size = left.size() + right.size() + 1;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->hash = mix(mix(0x99, left.hash()), right.hash());
  n->a = std::move(left);
  n->b = std::move(right);
  return PathExpr(std::move(n));
}

bool operator==(const PathExpr& x, const PathExpr& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash() || x.size() != y.size() || x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case NodeKind::refl:
      return x.name() == y.name();
    case NodeKind::edge:
      return x.orientation() == y.orientation() && x.name() == y.name();
    case NodeKind::symm:
      return x.child() == y.child();
    case NodeKind::trans:
      return x.left() == y.left() && x.right() == y.right();
  }
  return false;
}

std::string positionToString(const Position& pos) {
  if (pos.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out += '.';
    out += pos[i] == Move::left ? "left" : pos[i] == Move::right ? "right" : "symm";
  }
  return out;
}

Position parsePosition(const std::string& text) {
  Position pos;
  if (text == "root") return pos;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    std::string part = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part == "left")
      pos.push_back(Move::left);
    else if (part == "right")
      pos.push_back(Move::right);
    else if (part == "symm")
      pos.push_back(Move::symm);
    else
      throw SyntaxError(start, "bad position component '" + part + "'");
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return pos;
}

const PathExpr& subtermAt(const PathExpr& expr, const Position& pos) {
  const PathExpr* cur = &expr;
  for (Move m : pos) {
    if (m == Move::symm && cur->isSymm())
      cur = &cur->child();
    else if (m == Move::left && cur->isTrans())
      cur = &cur->left();
    else if (m == Move::right && cur->isTrans())
      cur = &cur->right();
    else
      throw Error(ErrorCode::BadPosition, positionToString(pos));
  }
  return *cur;
}

namespace {

PathExpr replaceFrom(const PathExpr& e, const Position& pos, std::size_t i, PathExpr&& r) {
  if (i == pos.size()) return std::move(r);
  switch (pos[i]) {
    case Move::symm:
      if (!e.isSymm()) break;
      return PathExpr::symm(replaceFrom(e.child(), pos, i + 1, std::move(r)));
    case Move::left:
      if (!e.isTrans()) break;
      return PathExpr::trans(replaceFrom(e.left(), pos, i + 1, std::move(r)), e.right());
    case Move::right:
      if (!e.isTrans()) break;
      return PathExpr::trans(e.left(), replaceFrom(e.right(), pos, i + 1, std::move(r)));
  }
  throw Error(ErrorCode::BadPosition, positionToString(pos));
}

}  // namespace

PathExpr replaceAt(const PathExpr& expr, const Position& pos, PathExpr replacement) {
  return replaceFrom(expr, pos, 0, std::move(replacement));
}

std::pair<std::string, std::string> endpoints(const PathExpr& expr, const SpacePresentation& space) {
  switch (expr.kind()) {
    case NodeKind::refl:
      if (!space.hasPoint(expr.name())) throw Error(ErrorCode::UnknownPoint, "'" + expr.name() + "'");
      return {expr.name(), expr.name()};
    case NodeKind::edge: {
      const Edge& e = space.edge(expr.name());
      if (expr.orientation() == Orientation::fwd) return {e.src, e.dst};
      return {e.dst, e.src};
    }
    case NodeKind::symm: {
      auto [s, d] = endpoints(expr.child(), space);
      return {std::move(d), std::move(s)};
    }
    case NodeKind::trans: {
      auto l = endpoints(expr.left(), space);
      auto r = endpoints(expr.right(), space);
      if (l.second != r.first)
        throw Error(ErrorCode::IllComposed, "composition ends at '" + l.second +
                                                "' but continues from '" + r.first + "'");
      return {std::move(l.first), std::move(r.second)};
    }
  }
  return {};
}

bool wellFormed(const PathExpr& expr, const SpacePresentation& space) {
  try {
    endpoints(expr, space);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string pathSource(const PathExpr& expr, const SpacePresentation& space) {
  switch (expr.kind()) {
    case NodeKind::refl: return expr.name();
    case NodeKind::edge: {
      const Edge& e = space.edge(expr.name());
      return expr.orientation() == Orientation::fwd ? e.src : e.dst;
    }
    case NodeKind::symm: return pathTarget(expr.child(), space);
    case NodeKind::trans: return pathSource(expr.left(), space);
  }
  return {};
}

std::string pathTarget(const PathExpr& expr, const SpacePresentation& space) {
  switch (expr.kind()) {
    case NodeKind::refl: return expr.name();
    case NodeKind::edge: {
      const Edge& e = space.edge(expr.name());
      return expr.orientation() == Orientation::fwd ? e.dst : e.src;
    }
    case NodeKind::symm: return pathSource(expr.child(), space);
    case NodeKind::trans: return pathTarget(expr.right(), space);
  }
  return {};
}

PathExpr compose(const PathExpr& p, const PathExpr& q, const SpacePresentation& space) {
  auto a = endpoints(p, space);
  auto b = endpoints(q, space);
  if (a.second != b.first)
    throw Error(ErrorCode::IllComposed, "'" + a.second + "' vs '" + b.first + "'");
  return PathExpr::trans(p, q);
}

PathExpr invert(const PathExpr& p) { return PathExpr::symm(p); }

PathExpr reflAt(const std::string& point) { return PathExpr::refl(point); }

PathExpr fromLetters(const LetterSeq& letters, const std::string& point) {
  if (letters.empty()) return PathExpr::refl(point);
  PathExpr out = PathExpr::edge(letters.back());
  for (auto it = letters.rbegin() + 1; it != letters.rend(); ++it)
    out = PathExpr::trans(PathExpr::edge(*it), std::move(out));
  return out;
}

bool lettersOfChain(const PathExpr& expr, LetterSeq& out) {
  out.clear();
  if (expr.isRefl()) return true;
  const PathExpr* cur = &expr;
  while (cur->isTrans()) {
    if (!cur->left().isEdge()) return false;
    out.push_back(cur->left().letter());
    cur = &cur->right();
  }
  if (!cur->isEdge()) return false;
  out.push_back(cur->letter());
  return true;
}

namespace {

void flattenInto(const PathExpr& e, bool flipped, LetterSeq& out) {
  switch (e.kind()) {
    case NodeKind::refl:
      return;
    case NodeKind::edge:
      out.push_back({e.name(), flipped ? flip(e.orientation()) : e.orientation()});
      return;
    case NodeKind::symm:
      flattenInto(e.child(), !flipped, out);
      return;
    case NodeKind::trans:
      flattenInto(flipped ? e.right() : e.left(), flipped, out);
      flattenInto(flipped ? e.left() : e.right(), flipped, out);
      return;
  }
}

}  // namespace

LetterSeq flattenLetters(const PathExpr& expr) {
  LetterSeq out;
  flattenInto(expr, false, out);
  return out;
}

LetterSeq reduceLetters(const LetterSeq& letters) {
  LetterSeq out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace cpath
