#include "cpath/pi1.hpp"

#include <algorithm>
#include <deque>

#include "cpath/error.hpp"
#include "cpath/rewrite.hpp"

namespace cpath {

SpanningTree spanningTree(const SpacePresentation& space, const std::vector<std::string>& seedEdges) {
  const auto& edges = space.edges();
  const std::size_t n = space.points().size();
  SpanningTree t;
  t.inTree.assign(edges.size(), false);
  t.pathTo.assign(n, {});
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;

  auto grow = [&](const std::vector<std::size_t>& candidates) {
    std::deque<std::size_t> todo(order.begin(), order.end());
    while (!todo.empty()) {
      std::size_t v = todo.front();
      todo.pop_front();
      const std::string& vn = space.points()[v];
      for (std::size_t ei : candidates) {
        const Edge& e = edges[ei];
        std::optional<EdgeLetter> step;
        std::string other;
        if (e.src == vn && !seen[*space.pointIndex(e.dst)]) {
          step = EdgeLetter{e.name, Orientation::fwd};
          other = e.dst;
        } else if (e.dst == vn && !seen[*space.pointIndex(e.src)]) {
          step = EdgeLetter{e.name, Orientation::rev};
          other = e.src;
        }
        if (!step) continue;
        std::size_t w = *space.pointIndex(other);
        seen[w] = true;
        t.inTree[ei] = true;
        t.pathTo[w] = t.pathTo[v];
        t.pathTo[w].push_back(*step);
        order.push_back(w);
        todo.push_back(w);
      }
    }
  };

  std::size_t base = *space.pointIndex(space.basepoint());
  seen[base] = true;
  order.push_back(base);
  std::vector<std::size_t> seeds;
  for (const auto& name : seedEdges) seeds.push_back(*space.edgeIndex(name));
  grow(seeds);
  std::vector<std::size_t> all(edges.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  grow(all);

  if (order.size() != n) throw Error(ErrorCode::NotConnected, "1-skeleton is not connected");
  return t;
}

Pi1::Pi1(SpacePresentation space, const std::vector<std::string>& seedEdges)
    : space_(std::move(space)), tree_(spanningTree(space_, seedEdges)) {
  const auto& edges = space_.edges();
  std::vector<int> raw(edges.size(), -1);
  int count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!tree_.inTree[i]) raw[i] = count++;

  std::vector<Word> rels;
  for (const auto& r : space_.relators()) {
    Word w;
    for (const auto& l : r) {
      int g = raw[*space_.edgeIndex(l.edge)];
      if (g >= 0) w.push_back({g, l.orientation == Orientation::rev});
    }
    rels.push_back(std::move(w));
  }

  // Tietze: drop trivial relators, kill generators equal to 1.
  std::vector<bool> killed(static_cast<std::size_t>(count), false);
  bool again = true;
  while (again) {
    again = false;
    std::vector<Word> kept;
    for (auto& r : rels) {
      Word c;
      for (const auto& l : r)
        if (!killed[static_cast<std::size_t>(l.gen)]) c.push_back(l);
      c = cyclicReduce(c);
      if (c.empty()) continue;
      if (c.size() == 1) {
        killed[static_cast<std::size_t>(c[0].gen)] = true;
        again = true;
        continue;
      }
      kept.push_back(std::move(c));
    }
    rels = std::move(kept);
  }

  std::vector<int> renum(static_cast<std::size_t>(count), -1);
  int k = 0;
  for (int g = 0; g < count; ++g)
    if (!killed[static_cast<std::size_t>(g)]) renum[static_cast<std::size_t>(g)] = k++;
  edgeGen_.assign(edges.size(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (raw[i] < 0) continue;
    int g = renum[static_cast<std::size_t>(raw[i])];
    edgeGen_[i] = g;
    if (g >= 0) {
      genEdges_.push_back(edges[i].name);
      names.push_back(edges[i].name);
    }
  }
  for (auto& r : rels)
    for (auto& l : r) l.gen = renum[static_cast<std::size_t>(l.gen)];

  group_ = recognizeFamily(opaqueGroup(k, std::move(rels), std::move(names)));
}

int Pi1::generatorOf(const std::string& edge) const {
  auto i = space_.edgeIndex(edge);
  if (!i) throw Error(ErrorCode::UnknownEdge, "'" + edge + "'");
  return edgeGen_[*i];
}

Word Pi1::encodeLetters(const LetterSeq& letters) const {
  Word w;
  for (const auto& l : letters) {
    int g = generatorOf(l.edge);
    if (g >= 0) w.push_back({g, l.orientation == Orientation::rev});
  }
  return freeReduce(w);
}

Word Pi1::encodeLoop(const PathExpr& loop) const {
  auto ends = endpoints(loop, space_);
  if (ends.first != space_.basepoint() || ends.second != space_.basepoint())
    throw Error(ErrorCode::IllComposed, "not a loop at '" + space_.basepoint() + "'");
  return encodeLetters(normalLetters(loop, space_));
}

LetterSeq Pi1::treeLetters(const std::string& point) const {
  auto i = space_.pointIndex(point);
  if (!i) throw Error(ErrorCode::UnknownPoint, "'" + point + "'");
  return tree_.pathTo[*i];
}

PathExpr Pi1::treePath(const std::string& point) const {
  return fromLetters(treeLetters(point), space_.basepoint());
}

LetterSeq Pi1::generatorLetters(int gen) const {
  const Edge& e = space_.edge(generatorEdge(gen));
  LetterSeq out = treeLetters(e.src);
  out.push_back({e.name, Orientation::fwd});
  LetterSeq back = inverse(treeLetters(e.dst));
  out.insert(out.end(), back.begin(), back.end());
  return reduceLetters(out);
}

PathExpr Pi1::realize(const Word& w) const {
  LetterSeq all;
  for (const auto& l : w) {
    LetterSeq g = generatorLetters(l.gen);
    if (l.inverse) g = inverse(g);
    all.insert(all.end(), g.begin(), g.end());
  }
  return fromLetters(reduceLetters(all), space_.basepoint());
}

}  // namespace cpath
