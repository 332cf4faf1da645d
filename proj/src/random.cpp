#include "cpath/random.hpp"

namespace cpath {

ExprGen::ExprGen(const SpacePresentation& space, std::uint64_t seed)
    : space_(space), tree_(spanningTree(space)), rng_(seed) {}

int ExprGen::pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

PathExpr ExprGen::leafFrom(const std::string& point) {
  std::vector<EdgeLetter> out;
  for (const auto& e : space_.edges()) {
    if (e.src == point) out.push_back({e.name, Orientation::fwd});
    if (e.dst == point) out.push_back({e.name, Orientation::rev});
  }
  // refl about a quarter of the time, or always when nothing leaves the point
  if (out.empty() || pick(4) == 0) return PathExpr::refl(point);
  return PathExpr::edge(out[static_cast<std::size_t>(pick(static_cast<int>(out.size())))]);
}

PathExpr ExprGen::leafTo(const std::string& point) {
  PathExpr e = leafFrom(point);
  if (e.isRefl()) return e;
  return PathExpr::edge(e.letter().inverse());
}

PathExpr ExprGen::from(const std::string& point, int depth) {
  if (depth <= 0 || pick(3) == 0) return leafFrom(point);
  if (pick(3) == 0) return PathExpr::symm(to(point, depth - 1));
  PathExpr p = from(point, depth - 1);
  std::string mid = endpoints(p, space_).second;
  return PathExpr::trans(std::move(p), from(mid, depth - 1));
}

PathExpr ExprGen::to(const std::string& point, int depth) {
  if (depth <= 0 || pick(3) == 0) return leafTo(point);
  if (pick(3) == 0) return PathExpr::symm(from(point, depth - 1));
  PathExpr q = to(point, depth - 1);
  std::string mid = endpoints(q, space_).first;
  return PathExpr::trans(to(mid, depth - 1), std::move(q));
}

PathExpr ExprGen::loop(int depth) {
  const std::string& base = space_.basepoint();
  PathExpr p = from(base, depth);
  std::string end = endpoints(p, space_).second;
  if (end == base) return p;
  auto i = *space_.pointIndex(end);
  return PathExpr::trans(std::move(p), PathExpr::symm(fromLetters(tree_.pathTo[i], base)));
}

Word randomWord(std::mt19937_64& rng, int generators, int length) {
  Word w;
  if (generators <= 0) return w;
  for (int i = 0; i < length; ++i)
    w.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(generators)), (rng() & 1) != 0});
  return w;
}

Word randomReducedWord(std::mt19937_64& rng, int generators, int length) {
  Word w;
  if (generators <= 0) return w;
  while (static_cast<int>(w.size()) < length) {
    Letter l{static_cast<int>(rng() % static_cast<std::uint64_t>(generators)), (rng() & 1) != 0};
    if (!w.empty() && w.back() == l.inv()) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace cpath
