#include "cpath/spaces.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "cpath/complex_map.hpp"
#include "cpath/error.hpp"
#include "cpath/rewrite.hpp"

namespace cpath {

CatalogParams parseParams(const std::string& text) {
  CatalogParams out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::BadParams, "expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    try {
      std::size_t used = 0;
      int v = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[key] = v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::BadParams, "bad integer in '" + item + "'");
    }
  }
  return out;
}

const std::vector<std::string>& catalogTags() {
  static const std::vector<std::string> tags = {"circle", "bouquet", "wedge", "suspension",
                                                "sphere", "torus",   "klein", "rp2",
                                                "surface", "nonorientable", "lens"};
  return tags;
}

SpacePresentation pointSpace(const std::string& name) { return SpacePresentation({name}, {}, {}, name); }

SpacePresentation oneVertexSpace(const GroupPresentation& pres) {
  std::vector<Edge> edges;
  for (const auto& n : pres.names) edges.push_back({n, "base", "base"});
  std::vector<LetterSeq> rels;
  for (const auto& r : pres.relators) {
    LetterSeq s;
    for (const auto& l : r)
      s.push_back({pres.names[static_cast<std::size_t>(l.gen)], l.inverse ? Orientation::rev : Orientation::fwd});
    rels.push_back(std::move(s));
  }
  return SpacePresentation({"base"}, std::move(edges), std::move(rels), "base");
}

SpacePresentation productSpace(const SpacePresentation& a, const SpacePresentation& b) {
  auto pt = [](const std::string& x, const std::string& y) { return x + ":" + y; };
  std::vector<std::string> points;
  for (const auto& x : a.points())
    for (const auto& y : b.points()) points.push_back(pt(x, y));
  std::vector<Edge> edges;
  for (const auto& e : a.edges())
    for (const auto& y : b.points()) edges.push_back({pt(e.name, y), pt(e.src, y), pt(e.dst, y)});
  for (const auto& x : a.points())
    for (const auto& e : b.edges()) edges.push_back({pt(x, e.name), pt(x, e.src), pt(x, e.dst)});
  std::vector<LetterSeq> rels;
  for (const auto& e : a.edges())
    for (const auto& f : b.edges())
      rels.push_back({{pt(e.name, f.src), Orientation::fwd},
                      {pt(e.dst, f.name), Orientation::fwd},
                      {pt(e.name, f.dst), Orientation::rev},
                      {pt(e.src, f.name), Orientation::rev}});
  for (const auto& r : a.relators())
    for (const auto& y : b.points()) {
      LetterSeq s;
      for (const auto& l : r) s.push_back({pt(l.edge, y), l.orientation});
      rels.push_back(std::move(s));
    }
  for (const auto& x : a.points())
    for (const auto& r : b.relators()) {
      LetterSeq s;
      for (const auto& l : r) s.push_back({pt(x, l.edge), l.orientation});
      rels.push_back(std::move(s));
    }
  return SpacePresentation(std::move(points), std::move(edges), std::move(rels),
                           pt(a.basepoint(), b.basepoint()));
}

namespace {

ComplexMap collapse(const SpacePresentation& from, const std::string& to) {
  ComplexMap m;
  for (const auto& p : from.points()) m.pointMap[p] = to;
  for (const auto& e : from.edges()) m.edgeMap.emplace(e.name, PathExpr::refl(to));
  return m;
}

SpacePresentation renamedCircle(const std::string& edge) {
  return SpacePresentation({"base"}, {{edge, "base", "base"}}, {}, "base");
}

int need(const CatalogParams& params, const std::string& key, int min) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(ErrorCode::BadParams, "missing parameter " + key);
  if (it->second < min)
    throw Error(ErrorCode::BadParams, key + " must be >= " + std::to_string(min));
  return it->second;
}

void allowOnly(const CatalogParams& params, std::set<std::string> keys) {
  for (const auto& [k, v] : params)
    if (!keys.contains(k)) throw Error(ErrorCode::BadParams, "unexpected parameter " + k);
}

SpacePresentation bouquetSpace(int n) { return oneVertexSpace(freeGroup(n)); }

PushoutSpec bouquetSpec(int n) {
  SpacePresentation a = n == 1 ? pointSpace() : bouquetSpace(n - 1);
  return wedgeSpec(a, renamedCircle(defaultNames(n).back()));
}

PushoutSpec sphereSpec(int n) {
  if (n == 2) return suspensionSpec(circleSpace());
  return suspensionSpec(buildPushout(sphereSpec(n - 1)).space);
}

}  // namespace

PushoutSpec wedgeSpec(const SpacePresentation& a, const SpacePresentation& b) {
  ComplexMap f, g;
  f.pointMap["pt"] = a.basepoint();
  g.pointMap["pt"] = b.basepoint();
  return {a, b, pointSpace("pt"), std::move(f), std::move(g), "pt"};
}

PushoutSpec suspensionSpec(const SpacePresentation& c) {
  return {pointSpace("north"), pointSpace("south"), c, collapse(c, "north"), collapse(c, "south"),
          c.basepoint()};
}

PushoutSpec cellAttachmentSpec(const SpacePresentation& bouquet, const LetterSeq& boundary) {
  SpacePresentation a(bouquet.points(), bouquet.edges(), {}, bouquet.basepoint());
  SpacePresentation c({"rim"}, {{"boundary", "rim", "rim"}}, {}, "rim");
  ComplexMap f, g;
  f.pointMap["rim"] = a.basepoint();
  f.edgeMap.emplace("boundary", fromLetters(boundary, a.basepoint()));
  g = collapse(c, "disk");
  return {std::move(a), pointSpace("disk"), std::move(c), std::move(f), std::move(g), "rim"};
}

SpaceCatalogEntry makeSpace(const std::string& tag, const CatalogParams& params) {
  auto entry = [&](SpacePresentation space, GroupPresentation expected) {
    return SpaceCatalogEntry{tag, params, std::move(space), std::nullopt, std::move(expected), false,
                             std::nullopt};
  };
  auto viaPushout = [&](PushoutSpec spec, GroupPresentation expected) {
    SpaceCatalogEntry e = entry(buildPushout(spec).space, std::move(expected));
    e.pushout = std::move(spec);
    e.svkRoute = true;
    return e;
  };
  auto attached = [&](GroupPresentation expected) {
    SpaceCatalogEntry e = entry(oneVertexSpace(expected), expected);
    e.pushout = cellAttachmentSpec(e.space, e.space.relators().at(0));
    e.svkRoute = true;
    return e;
  };

  if (tag == "circle") {
    allowOnly(params, {});
    return entry(circleSpace(), integers());
  }
  if (tag == "bouquet") {
    allowOnly(params, {"n"});
    int n = need(params, "n", 1);
    SpaceCatalogEntry e = entry(bouquetSpace(n), n == 1 ? integers() : freeGroup(n));
    e.pushout = bouquetSpec(n);
    e.svkRoute = true;
    return e;
  }
  if (tag == "wedge") {
    allowOnly(params, {});
    return viaPushout(wedgeSpec(renamedCircle("a"), renamedCircle("b")), freeGroup(2));
  }
  if (tag == "suspension") {
    allowOnly(params, {"n"});
    int n = params.contains("n") ? need(params, "n", 1) : 1;
    return viaPushout(suspensionSpec(bouquetSpace(n)), trivialGroup());
  }
  if (tag == "sphere") {
    allowOnly(params, {"n"});
    int n = need(params, "n", 2);
    return viaPushout(sphereSpec(n), trivialGroup());
  }
  if (tag == "torus") {
    allowOnly(params, {});
    return entry(productSpace(circleSpace(), circleSpace()), directProduct(integers(), integers()));
  }
  if (tag == "klein") {
    allowOnly(params, {});
    return attached(kleinGroup());
  }
  if (tag == "rp2") {
    allowOnly(params, {});
    return attached(cyclicGroup(2));
  }
  if (tag == "surface") {
    allowOnly(params, {"g"});
    return attached(orientableSurfaceGroup(need(params, "g", 1)));
  }
  if (tag == "nonorientable") {
    allowOnly(params, {"n"});
    return attached(nonOrientableSurfaceGroup(need(params, "n", 1)));
  }
  if (tag == "lens") {
    allowOnly(params, {"p", "q"});
    int p = need(params, "p", 1);
    int q = params.contains("q") ? params.at("q") : 1;
    if (std::gcd(p, q) != 1) throw Error(ErrorCode::BadParams, "lens space needs gcd(p, q) = 1");
    SpaceCatalogEntry e = attached(cyclicGroup(p));
    e.lensQ = q;
    return e;
  }
  throw Error(ErrorCode::BadParams, "unknown catalog tag '" + tag + "'");
}

Witnesses expectedWitnesses(const SpaceCatalogEntry& entry) {
  Witnesses w;
  const GroupPresentation& g = entry.expected;
  const Word a = {{0, false}};
  const Word b = {{1, false}};
  switch (g.family) {
    case Family::Trivial:
      break;
    case Family::Integers:
      w.nontrivial = {a};
      break;
    case Family::FreeGroup:
      w.nontrivial = {a};
      if (g.generators >= 2) w.nonCommuting = {{a, b}};
      break;
    case Family::Cyclic:
      if (g.param >= 2) {
        w.nontrivial = {a};
        w.torsion = {{a, g.param}};
      }
      break;
    case Family::Klein:
      w.nontrivial = {a, b};
      w.nonCommuting = {{a, b}};
      break;
    case Family::OrientableSurface:
      w.nontrivial = {a, b};
      if (g.param >= 2) w.nonCommuting = {{a, b}};
      break;
    case Family::NonOrientableSurface:
      w.nontrivial = {a};
      if (g.param == 1)
        w.torsion = {{a, 2}};
      else
        w.nonCommuting = {{a, b}};
      break;
    case Family::DirectProduct:
      w.nontrivial = {a};
      break;
    case Family::Opaque:
      break;
  }
  return w;
}

// ---- circle -----------------------------------------------------------------

const SpacePresentation& circleSpace() {
  static const SpacePresentation s({"base"}, {{"loop", "base", "base"}}, {}, "base");
  return s;
}

PathExpr circleDecode(long n) {
  LetterSeq letters(static_cast<std::size_t>(n < 0 ? -n : n),
                    EdgeLetter{"loop", n < 0 ? Orientation::rev : Orientation::fwd});
  return fromLetters(letters, "base");
}

long circleEncode(const PathExpr& loop) {
  auto ends = endpoints(loop, circleSpace());
  if (ends.first != "base" || ends.second != "base") throw Error(ErrorCode::IllComposed, "not a loop at base");
  long n = 0;
  for (const auto& l : normalLetters(loop, circleSpace())) n += l.orientation == Orientation::fwd ? 1 : -1;
  return n;
}

// ---- product ----------------------------------------------------------------

ProductPi1::ProductPi1(const SpacePresentation& a, const SpacePresentation& b)
    : a_(a), b_(b), group_(directProduct(a_.group(), b_.group())) {}

std::pair<Word, Word> ProductPi1::encodePair(const ProductLoop& loop) const {
  return {a_.encodeLoop(loop.first), b_.encodeLoop(loop.second)};
}

Word ProductPi1::encode(const ProductLoop& loop) const {
  auto [u, v] = encodePair(loop);
  for (auto& l : v) l.gen += a_.group().generators;
  return concat(u, v);
}

}  // namespace cpath
