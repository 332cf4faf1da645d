#include "cpath/pushout.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cpath/error.hpp"
#include "cpath/rewrite.hpp"
#include "cpath/text.hpp"

namespace cpath {

PushoutSpace buildPushout(const PushoutSpec& spec) {
  validateMap(spec.f, spec.C, spec.A);
  validateMap(spec.g, spec.C, spec.B);
  if (!spec.C.hasPoint(spec.c0)) throw Error(ErrorCode::IllFormedMap, "c0 is not a point of C");

  std::set<std::string> aPoints(spec.A.points().begin(), spec.A.points().end());
  std::set<std::string> bPoints(spec.B.points().begin(), spec.B.points().end());
  std::set<std::string> aEdges, bEdges;
  for (const auto& e : spec.A.edges()) aEdges.insert(e.name);
  for (const auto& e : spec.B.edges()) bEdges.insert(e.name);

  PushoutSpace out{SpacePresentation({"_"}, {}, {}, "_"), {}, {}, {}};
  std::vector<std::string> points;
  std::vector<Edge> edges;
  for (const auto& p : spec.A.points()) {
    std::string n = bPoints.contains(p) ? "inl:" + p : p;
    out.inl.pointMap[p] = n;
    points.push_back(n);
  }
  for (const auto& p : spec.B.points()) {
    std::string n = aPoints.contains(p) ? "inr:" + p : p;
    out.inr.pointMap[p] = n;
    points.push_back(n);
  }
  for (const auto& e : spec.A.edges()) {
    std::string n = bEdges.contains(e.name) ? "inl:" + e.name : e.name;
    out.inl.edgeMap.emplace(e.name, PathExpr::edge(n));
    edges.push_back({n, out.inl.pointMap[e.src], out.inl.pointMap[e.dst]});
  }
  for (const auto& e : spec.B.edges()) {
    std::string n = aEdges.contains(e.name) ? "inr:" + e.name : e.name;
    out.inr.edgeMap.emplace(e.name, PathExpr::edge(n));
    edges.push_back({n, out.inr.pointMap[e.src], out.inr.pointMap[e.dst]});
  }
  for (const auto& c : spec.C.points()) {
    std::string n = "glue:" + c;
    out.glue[c] = n;
    edges.push_back({n, out.inl.pointMap[spec.f.pointMap.at(c)], out.inr.pointMap[spec.g.pointMap.at(c)]});
  }

  auto rename = [](const ComplexMap& m, const LetterSeq& r) {
    LetterSeq out;
    for (const auto& l : r) out.push_back({m.edgeMap.at(l.edge).name(), l.orientation});
    return out;
  };
  std::vector<LetterSeq> relators;
  for (const auto& r : spec.A.relators()) relators.push_back(rename(out.inl, r));
  for (const auto& r : spec.B.relators()) relators.push_back(rename(out.inr, r));
  // naturality square f(e) · glue(c2) · g(e)⁻¹ · glue(c1)⁻¹ for e : c1 -> c2
  for (const auto& e : spec.C.edges()) {
    LetterSeq sq = rename(out.inl, flattenLetters(spec.f.edgeMap.at(e.name)));
    sq.push_back({out.glue[e.dst], Orientation::fwd});
    LetterSeq back = inverse(rename(out.inr, flattenLetters(spec.g.edgeMap.at(e.name))));
    sq.insert(sq.end(), back.begin(), back.end());
    sq.push_back({out.glue[e.src], Orientation::rev});
    relators.push_back(std::move(sq));
  }

  try {
    out.space = SpacePresentation(std::move(points), std::move(edges), std::move(relators),
                                  out.inl.pointMap[spec.f.pointMap.at(spec.c0)]);
  } catch (const Error& e) {
    throw Error(ErrorCode::IllFormedMap, e.what());
  }
  return out;
}

namespace {

std::vector<std::string> treeEdgeNames(const Pi1& pi, const ComplexMap& into) {
  std::vector<std::string> out;
  const auto& edges = pi.space().edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (pi.tree().inTree[i]) out.push_back(into.edgeMap.at(edges[i].name).name());
  return out;
}

Word imageOfGenerator(const Pi1& from, int gen, const ComplexMap& m, const Pi1& to) {
  PathExpr loop = fromLetters(from.generatorLetters(gen), from.space().basepoint());
  return to.encodeLetters(flattenLetters(mapPath(m, loop)));
}

}  // namespace

SvkInstance::SvkInstance(PushoutSpec spec)
    : spec_(std::move(spec)), pushout_(buildPushout(spec_)) {
  piA_ = std::make_unique<Pi1>(spec_.A.withBasepoint(spec_.f.pointMap.at(spec_.c0)));
  piB_ = std::make_unique<Pi1>(spec_.B.withBasepoint(spec_.g.pointMap.at(spec_.c0)));
  piC_ = std::make_unique<Pi1>(spec_.C.withBasepoint(spec_.c0));

  std::vector<std::string> seeds = treeEdgeNames(*piA_, pushout_.inl);
  seeds.push_back(glue0());
  for (auto& n : treeEdgeNames(*piB_, pushout_.inr)) seeds.push_back(std::move(n));
  piP_ = std::make_unique<Pi1>(pushout_.space, seeds);

  std::vector<Word> i1, i2;
  for (int h = 0; h < piC_->group().generators; ++h) {
    i1.push_back(imageOfGenerator(*piC_, h, spec_.f, *piA_));
    i2.push_back(imageOfGenerator(*piC_, h, spec_.g, *piB_));
  }
  ctx_ = makeFPContext(piA_->group(), piB_->group(), piC_->group(), std::move(i1), std::move(i2));

  for (const auto& [n, e] : pushout_.inl.edgeMap) origin_[e.name()] = {0, n};
  for (const auto& [n, e] : pushout_.inr.edgeMap) origin_[e.name()] = {1, n};
  for (const auto& [c, n] : pushout_.glue) origin_[n] = {2, c};
}

PathExpr SvkInstance::decode(const FPWord& w) const {
  PathExpr acc = PathExpr::refl(pushout_.space.basepoint());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Pi1& pi = it->side == Side::left ? *piA_ : *piB_;
    for (const auto& l : it->element)
      if (l.gen < 0 || l.gen >= pi.group().generators)
        throw Error(ErrorCode::IllFormedLetter, "generator out of range for its factor");
    PathExpr piece = PathExpr::refl("_");
    if (it->side == Side::left) {
      piece = mapPath(pushout_.inl, pi.realize(it->element));
    } else {
      PathExpr glue = PathExpr::edge(glue0());
      piece = PathExpr::trans(glue, PathExpr::trans(mapPath(pushout_.inr, pi.realize(it->element)),
                                                    PathExpr::symm(glue)));
    }
    acc = PathExpr::trans(std::move(piece), std::move(acc));
  }
  return acc;
}

FPWord SvkInstance::encodeLetters(const LetterSeq& letters) const {
  FPWord out;
  for (const auto& l : letters) {
    const auto& [kind, name] = origin_.at(l.edge);
    if (kind == 0) {
      out.push_back({Side::left, piA_->encodeLetters({{name, l.orientation}})});
    } else if (kind == 1) {
      out.push_back({Side::right, piB_->encodeLetters({{name, l.orientation}})});
    } else {
      // glue(c) ~ f(δ)⁻¹ · glue(c0) · g(δ), δ the tree path of C from c0 to c
      PathExpr delta = piC_->treePath(name);
      LetterSeq a = piA_->treeLetters(spec_.f.pointMap.at(name));
      LetterSeq fd = inverse(flattenLetters(mapPath(spec_.f, delta)));
      a.insert(a.end(), fd.begin(), fd.end());
      LetterSeq b = flattenLetters(mapPath(spec_.g, delta));
      LetterSeq tb = inverse(piB_->treeLetters(spec_.g.pointMap.at(name)));
      b.insert(b.end(), tb.begin(), tb.end());
      FPLetter x{Side::left, piA_->encodeLetters(a)};
      FPLetter y{Side::right, piB_->encodeLetters(b)};
      if (l.orientation == Orientation::fwd) {
        out.push_back(std::move(x));
        out.push_back(std::move(y));
      } else {
        out.push_back({Side::right, inverse(y.element)});
        out.push_back({Side::left, inverse(x.element)});
      }
    }
  }
  return fpNormalize(ctx_, out);
}

FPWord SvkInstance::encode(const PathExpr& loop) const {
  auto ends = endpoints(loop, pushout_.space);
  if (ends.first != pushout_.space.basepoint() || ends.second != ends.first)
    throw Error(ErrorCode::IllComposed, "not a loop at the pushout basepoint");
  return encodeLetters(normalLetters(loop, pushout_.space));
}

Truth SvkInstance::sameElement(const PathExpr& p, const PathExpr& q) const {
  Word u = piP_->encodeLoop(p);
  Word v = piP_->encodeLoop(q);
  return solverNormalize(piP_->group(), concat(u, inverse(v)), ctx_.bfs).isIdentity;
}

GroupPresentation svkPresentation(const PushoutSpec& spec) {
  return SvkInstance(spec).pi1().group();
}

// ---- checks -------------------------------------------------------------------

namespace {

std::vector<Word> factorElements(const FPContext& ctx, Side side, int maxLen) {
  const auto& g = ctx.factor(side);
  std::vector<Word> out;
  std::set<std::vector<int>> seen;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= maxLen; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (int gi = 0; gi < g.generators; ++gi) {
        for (bool inv : {false, true}) {
          Letter l{gi, inv};
          if (!w.empty() && w.back() == l.inv()) continue;
          Word x = w;
          x.push_back(l);
          next.push_back(x);
          Word c = canonicalElement(ctx, side, x);
          if (isIdentityElement(ctx, side, c)) continue;
          std::vector<int> key;
          for (const auto& y : c) key.push_back(2 * y.gen + y.inverse);
          if (seen.insert(key).second) out.push_back(c);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

RoundTripReport roundTripCheck(const SvkInstance& inst, int maxLetters, int maxElement,
                               std::size_t limit) {
  RoundTripReport rep;
  const auto& ctx = inst.context();
  std::array<std::vector<Word>, 2> elems = {factorElements(ctx, Side::left, maxElement),
                                            factorElements(ctx, Side::right, maxElement)};
  auto check = [&](const FPWord& w) {
    ++rep.checked;
    PathExpr loop = inst.decode(w);
    FPWord back = inst.encode(loop);
    if (back != w) {
      ++rep.failures;
      if (rep.messages.size() < 10)
        rep.messages.push_back("encode(decode(" + printFPWord(ctx, w) + ")) = " + printFPWord(ctx, back));
    }
  };

  check({});
  std::vector<FPWord> layer{FPWord{}};
  for (int len = 1; len <= maxLetters && rep.checked < limit; ++len) {
    std::vector<FPWord> next;
    for (const auto& w : layer) {
      for (int s = 0; s < 2; ++s) {
        Side side = s == 0 ? Side::left : Side::right;
        if (!w.empty() && w.back().side == side) continue;
        for (const auto& e : elems[static_cast<std::size_t>(s)]) {
          FPWord x = w;
          x.push_back({side, e});
          check(x);
          next.push_back(std::move(x));
          if (rep.checked >= limit) break;
        }
      }
    }
    layer = std::move(next);
  }
  return rep;
}

DecodeAmalgReport checkDecodeAmalg(const SvkInstance& inst, std::size_t samples, std::uint64_t seed) {
  DecodeAmalgReport rep;
  const auto& ctx = inst.context();
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto randomElement = [&](Side side) {
    const auto& g = ctx.factor(side);
    Word w;
    if (g.generators == 0) return w;
    int len = 1 + pick(3);
    for (int i = 0; i < len; ++i) w.push_back({pick(g.generators), pick(2) == 1});
    return canonicalElement(ctx, side, w);
  };
  const int hgens = ctx.amalgam.generators;
  for (std::size_t k = 0; k < samples; ++k) {
    ++rep.samples;
    if (hgens == 0) continue;  // only h = 1, and normal words carry no identity letters
    FPWord w;
    int len = pick(5);
    for (int i = 0; i < len; ++i) {
      Side s = pick(2) == 0 ? Side::left : Side::right;
      w.push_back({s, randomElement(s)});
    }
    Word h;
    int hl = 1 + pick(2);
    for (int i = 0; i < hl; ++i) h.push_back({pick(hgens), pick(2) == 1});
    AmalgDirection dir = pick(2) == 0 ? AmalgDirection::leftToRight : AmalgDirection::rightToLeft;
    Side from = dir == AmalgDirection::leftToRight ? Side::left : Side::right;
    std::size_t at = static_cast<std::size_t>(pick(len + 1));
    w.insert(w.begin() + static_cast<long>(at), FPLetter{from, includeAmalgam(ctx, from, h)});
    FPWord moved = applyAmalgMove(ctx, w, {at, h, dir});
    ++rep.movesApplied;
    Truth same = inst.sameElement(inst.decode(w), inst.decode(moved));
    if (same != Truth::yes) {
      ++rep.failures;
      if (rep.messages.size() < 10)
        rep.messages.push_back(printFPWord(ctx, w) + "  vs  " + printFPWord(ctx, moved) + " : " +
                               std::string(truthName(same)));
    }
  }
  if (hgens == 0) rep.messages.push_back("trivial amalgam: zero applicable moves");
  return rep;
}

// ---- JSON -----------------------------------------------------------------------

namespace {

nlohmann::json mapToJson(const ComplexMap& m) {
  nlohmann::json j;
  j["points"] = nlohmann::json::object();
  for (const auto& [k, v] : m.pointMap) j["points"][k] = v;
  j["edges"] = nlohmann::json::object();
  for (const auto& [k, v] : m.edgeMap) j["edges"][k] = printExpr(v);
  return j;
}

ComplexMap mapFromJson(const nlohmann::json& j, const SpacePresentation& target) {
  ComplexMap m;
  try {
    for (const auto& [k, v] : j.at("points").items()) m.pointMap[k] = v.get<std::string>();
    for (const auto& [k, v] : j.at("edges").items())
      m.edgeMap.emplace(k, parsePathExpr(v.get<std::string>(), target));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IllFormedMap, e.what());
  }
  return m;
}

}  // namespace

nlohmann::json pushoutSpecToJson(const PushoutSpec& spec) {
  return {{"A", spaceToJson(spec.A)}, {"B", spaceToJson(spec.B)}, {"C", spaceToJson(spec.C)},
          {"f", mapToJson(spec.f)},   {"g", mapToJson(spec.g)},   {"c0", spec.c0}};
}

PushoutSpec pushoutSpecFromJson(const nlohmann::json& doc) {
  try {
    SpacePresentation A = spaceFromJson(doc.at("A"));
    SpacePresentation B = spaceFromJson(doc.at("B"));
    SpacePresentation C = spaceFromJson(doc.at("C"));
    ComplexMap f = mapFromJson(doc.at("f"), A);
    ComplexMap g = mapFromJson(doc.at("g"), B);
    return {std::move(A), std::move(B), std::move(C), std::move(f), std::move(g),
            doc.at("c0").get<std::string>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpace, e.what());
  }
}

}  // namespace cpath
