#include "cpath/rewrite.hpp"

#include <array>
#include <map>
#include <unordered_set>

#include "cpath/error.hpp"

namespace cpath {

namespace {

unsigned kindBit(NodeKind k) { return 1u << static_cast<unsigned>(k); }

// Node kinds a pattern can sit on, one level down.
unsigned kindsFor(const Pattern& p, AtomMode mode) {
  switch (p.kind) {
    case Pattern::Kind::var: return 0xF;
    case Pattern::Kind::refl: return kindBit(NodeKind::refl);
    case Pattern::Kind::symm:
      return kindBit(NodeKind::symm) | (mode == AtomMode::letters ? kindBit(NodeKind::edge) : 0u);
    case Pattern::Kind::trans: return kindBit(NodeKind::trans);
  }
  return 0;
}

// Quick filter on the root and its children before calling the matcher.
struct Signature {
  NodeKind root;
  unsigned left;
  unsigned right;
};

struct Normalizer {
  const SpacePresentation& space;
  const NormalizeOptions& opts;
  std::vector<StepInstance>& steps;
  Position pos;
  // nodes already known to be normal; `keep` pins them so addresses stay unique
  std::unordered_set<const void*> normal;
  std::vector<PathExpr> keep;
  std::array<Signature, kRuleCount> sig{};
  bool flagOnly = false;

  void init() {
    flagOnly = opts.rules == RuleSet::all() && opts.mode == AtomMode::letters;
    for (RuleId r : kAllRules) {
      const Pattern& lhs = *rule(r).lhs;
      auto& s = sig[static_cast<std::size_t>(r)];
      if (lhs.kind == Pattern::Kind::symm) {
        s = {NodeKind::symm, kindsFor(*lhs.a, opts.mode), 0xF};
      } else {
        s = {NodeKind::trans, kindsFor(*lhs.a, opts.mode), kindsFor(*lhs.b, opts.mode)};
      }
    }
  }

  std::optional<PathExpr> fireRoot(const PathExpr& t) {
    unsigned l = t.isSymm() ? kindBit(t.child().kind()) : t.isTrans() ? kindBit(t.left().kind()) : 0;
    unsigned rt = t.isTrans() ? kindBit(t.right().kind()) : 0xF;
    for (RuleId r : kAllRules) {
      const auto& s = sig[static_cast<std::size_t>(r)];
      if (s.root != t.kind() || !(s.left & l) || !(s.right & rt)) continue;
      if (!opts.rules.contains(r)) continue;
      if (auto out = rewriteRoot(r, t, space, opts.mode)) {
        steps.push_back({r, pos, Direction::forward, std::nullopt});
        return out;
      }
    }
    return std::nullopt;
  }

  bool done(const PathExpr& t) const {
    return t.isRefl() || t.isEdge() || t.knownNormal() || (!flagOnly && normal.contains(t.id()));
  }

  void remember(const PathExpr& t) {
    if (flagOnly) {
      t.markNormal();
    } else {
      normal.insert(t.id());
      keep.push_back(t);
    }
  }

  PathExpr run(PathExpr t) {
    if (done(t)) return t;
    while (true) {
      if (t.isSymm()) {
        pos.push_back(Move::symm);
        PathExpr c = run(t.child());
        pos.pop_back();
        if (!c.sameNode(t.child())) t = PathExpr::symm(std::move(c));
      } else if (t.isTrans()) {
        PathExpr l = t.left(), r = t.right();
        if (opts.strategy == Strategy::leftmostInnermost) {
          pos.push_back(Move::left);
          l = run(std::move(l));
          pos.back() = Move::right;
          r = run(std::move(r));
        } else {
          pos.push_back(Move::right);
          r = run(std::move(r));
          pos.back() = Move::left;
          l = run(std::move(l));
        }
        pos.pop_back();
        if (!l.sameNode(t.left()) || !r.sameNode(t.right()))
          t = PathExpr::trans(std::move(l), std::move(r));
      }
      auto next = fireRoot(t);
      if (!next) {
        remember(t);
        return t;
      }
      t = std::move(*next);
      if (done(t)) return t;
    }
  }
};

bool anyRedex(const PathExpr& t, const SpacePresentation& space, const NormalizeOptions& opts) {
  for (RuleId r : kAllRules) {
    if (!opts.rules.contains(r)) continue;
    Subst s;
    if (matchPattern(*rule(r).lhs, t, s, opts.mode)) return true;
  }
  if (t.isSymm()) return anyRedex(t.child(), space, opts);
  if (t.isTrans()) return anyRedex(t.left(), space, opts) || anyRedex(t.right(), space, opts);
  return false;
}

std::size_t nonSymmCount(const PathExpr& t) {
  switch (t.kind()) {
    case NodeKind::symm: return nonSymmCount(t.child());
    case NodeKind::trans: return 1 + nonSymmCount(t.left()) + nonSymmCount(t.right());
    default: return 1;
  }
}

void measureInto(const PathExpr& t, Measure& m) {
  ++m.size;
  if (t.isSymm()) {
    m.symmWeight += nonSymmCount(t.child());
    measureInto(t.child(), m);
  } else if (t.isTrans()) {
    m.leftWeight += t.left().size();
    measureInto(t.left(), m);
    measureInto(t.right(), m);
  }
}

}  // namespace

NormalizeResult normalize(const PathExpr& expr, const SpacePresentation& space,
                          const NormalizeOptions& opts) {
  std::vector<StepInstance> steps;
  Normalizer n{space, opts, steps, {}, {}, {}, {}};
  n.init();
  PathExpr nf = n.run(expr);
  return {nf, Derivation{expr, nf, std::move(steps)}};
}

bool isNormal(const PathExpr& expr, const SpacePresentation& space, const NormalizeOptions& opts) {
  return !anyRedex(expr, space, opts);
}

LetterSeq normalLetters(const PathExpr& expr, const SpacePresentation& space) {
  auto nf = normalize(expr, space).normalForm;
  LetterSeq out;
  if (!lettersOfChain(nf, out))
    throw Error(ErrorCode::NoMatch, "normal form is not a letter chain");
  return out;
}

RwEqResult rwEqDecide(const PathExpr& p, const PathExpr& q, const SpacePresentation& space) {
  if (endpoints(p, space) != endpoints(q, space))
    throw Error(ErrorCode::EndpointMismatch, "operands do not share endpoints");
  auto np = normalize(p, space);
  auto nq = normalize(q, space);
  RwEqResult res{np.normalForm == nq.normalForm, np.normalForm, nq.normalForm, std::nullopt};
  if (!res.equal) return res;

  // Intermediates of q's run supply the witnesses for the reversed steps.
  std::vector<PathExpr> seen{q};
  for (const auto& st : nq.derivation.steps) seen.push_back(applyStep(seen.back(), st, space));

  Derivation w{p, q, np.derivation.steps};
  for (std::size_t i = nq.derivation.steps.size(); i-- > 0;) {
    StepInstance back = nq.derivation.steps[i];
    back.direction = Direction::backward;
    back.witness = subtermAt(seen[i], back.position);
    w.steps.push_back(std::move(back));
  }
  res.witness = std::move(w);
  return res;
}

Measure measure(const PathExpr& expr) {
  Measure m;
  measureInto(expr, m);
  return m;
}

// ---- critical pairs -------------------------------------------------------

namespace {

using VarMap = std::map<int, PatternPtr>;

PatternPtr resolve(PatternPtr t, const VarMap& s) {
  while (t->kind == Pattern::Kind::var) {
    auto it = s.find(t->var);
    if (it == s.end()) break;
    t = it->second;
  }
  return t;
}

bool occurs(int v, PatternPtr t, const VarMap& s) {
  t = resolve(t, s);
  switch (t->kind) {
    case Pattern::Kind::var: return t->var == v;
    case Pattern::Kind::refl: return false;
    case Pattern::Kind::symm: return occurs(v, t->a, s);
    case Pattern::Kind::trans: return occurs(v, t->a, s) || occurs(v, t->b, s);
  }
  return false;
}

bool unify(PatternPtr x, PatternPtr y, VarMap& s) {
  x = resolve(x, s);
  y = resolve(y, s);
  if (x->kind == Pattern::Kind::var && y->kind == Pattern::Kind::var && x->var == y->var)
    return true;
  if (x->kind == Pattern::Kind::var) {
    if (occurs(x->var, y, s)) return false;
    s[x->var] = y;
    return true;
  }
  if (y->kind == Pattern::Kind::var) return unify(y, x, s);
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Pattern::Kind::refl: return true;
    case Pattern::Kind::symm: return unify(x->a, y->a, s);
    case Pattern::Kind::trans: return unify(x->a, y->a, s) && unify(x->b, y->b, s);
    default: return false;
  }
}

PatternPtr shift(const PatternPtr& p, int by) {
  auto out = std::make_shared<Pattern>(*p);
  if (p->kind == Pattern::Kind::var) out->var += by;
  if (p->a) out->a = shift(p->a, by);
  if (p->b) out->b = shift(p->b, by);
  return out;
}

void nonVarPositions(const Pattern& p, Position& cur, std::vector<Position>& out) {
  if (p.kind == Pattern::Kind::var) return;
  out.push_back(cur);
  if (p.kind == Pattern::Kind::symm) {
    cur.push_back(Move::symm);
    nonVarPositions(*p.a, cur, out);
    cur.pop_back();
  } else if (p.kind == Pattern::Kind::trans) {
    cur.push_back(Move::left);
    nonVarPositions(*p.a, cur, out);
    cur.back() = Move::right;
    nonVarPositions(*p.b, cur, out);
    cur.pop_back();
  }
}

PatternPtr patternAt(PatternPtr p, const Position& pos) {
  for (Move m : pos) p = m == Move::right ? p->b : p->a;
  return p;
}

const char* const kAtomNames[] = {"p", "q", "r", "s", "t", "u"};

PathExpr toExpr(PatternPtr t, const VarMap& s, std::map<int, std::string>& atoms) {
  t = resolve(t, s);
  switch (t->kind) {
    case Pattern::Kind::var: {
      auto it = atoms.find(t->var);
      if (it == atoms.end()) it = atoms.emplace(t->var, kAtomNames[atoms.size()]).first;
      return PathExpr::edge(it->second);
    }
    case Pattern::Kind::refl: return PathExpr::refl("o");
    case Pattern::Kind::symm: return PathExpr::symm(toExpr(t->a, s, atoms));
    case Pattern::Kind::trans: {
      PathExpr l = toExpr(t->a, s, atoms);
      return PathExpr::trans(std::move(l), toExpr(t->b, s, atoms));
    }
  }
  return PathExpr::refl("o");
}

}  // namespace

const SpacePresentation& peakSpace() {
  static const SpacePresentation space = [] {
    std::vector<Edge> edges;
    for (const char* n : kAtomNames) edges.push_back({n, "o", "o"});
    return SpacePresentation({"o"}, std::move(edges), {}, "o");
  }();
  return space;
}

std::vector<CriticalPair> criticalPairs(RuleSet rules) {
  std::vector<CriticalPair> out;
  const auto& space = peakSpace();
  for (RuleId outer : kAllRules) {
    if (!rules.contains(outer)) continue;
    const PatternPtr& olhs = rule(outer).lhs;
    std::vector<Position> positions;
    Position cur;
    nonVarPositions(*olhs, cur, positions);
    for (RuleId inner : kAllRules) {
      if (!rules.contains(inner)) continue;
      PatternPtr ilhs = shift(rule(inner).lhs, 3);
      for (const auto& pos : positions) {
        if (pos.empty() && inner == outer) continue;
        VarMap s;
        if (!unify(patternAt(olhs, pos), ilhs, s)) continue;
        std::map<int, std::string> atoms;
        PathExpr peak = toExpr(olhs, s, atoms);
        CriticalPair cp{outer, inner, pos, peak,
                        applyStep(peak, {inner, pos, Direction::forward, std::nullopt}, space,
                                  AtomMode::opaque),
                        applyStep(peak, {outer, {}, Direction::forward, std::nullopt}, space,
                                  AtomMode::opaque)};
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

ConfluenceReport checkLocalConfluence(RuleSet rules) {
  ConfluenceReport rep;
  NormalizeOptions opts{rules, AtomMode::opaque, Strategy::leftmostInnermost};
  for (auto& cp : criticalPairs(rules)) {
    ++rep.total;
    auto l = normalize(cp.leftReduct, peakSpace(), opts).normalForm;
    auto r = normalize(cp.rightReduct, peakSpace(), opts).normalForm;
    if (l == r)
      ++rep.joinable;
    else
      rep.counterexamples.push_back({std::move(cp), l, r});
  }
  return rep;
}

}  // namespace cpath
