#include "cpath/step.hpp"

#include "cpath/error.hpp"

namespace cpath {

namespace {

constexpr std::array<std::string_view, kRuleCount> kNames = {
    "symm_refl",          "symm_symm",   "trans_refl_left",  "trans_refl_right", "trans_symm",
    "symm_trans",         "symm_trans_distrib", "trans_assoc", "cancel_mid_right", "cancel_mid_left",
};

PatternPtr var(int v) {
  auto p = std::make_shared<Pattern>();
  p->kind = Pattern::Kind::var;
  p->var = v;
  return p;
}
PatternPtr rho() {
  auto p = std::make_shared<Pattern>();
  p->kind = Pattern::Kind::refl;
  return p;
}
PatternPtr sy(PatternPtr a) {
  auto p = std::make_shared<Pattern>();
  p->kind = Pattern::Kind::symm;
  p->a = std::move(a);
  return p;
}
PatternPtr tr(PatternPtr a, PatternPtr b) {
  auto p = std::make_shared<Pattern>();
  p->kind = Pattern::Kind::trans;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

std::array<Rule, kRuleCount> buildRules() {
  auto p = [] { return var(0); };
  auto q = [] { return var(1); };
  auto r = [] { return var(2); };
  return {{
      {RuleId::symm_refl, sy(rho()), rho()},
      {RuleId::symm_symm, sy(sy(p())), p()},
      {RuleId::trans_refl_left, tr(rho(), p()), p()},
      {RuleId::trans_refl_right, tr(p(), rho()), p()},
      {RuleId::trans_symm, tr(p(), sy(p())), rho()},
      {RuleId::symm_trans, tr(sy(p()), p()), rho()},
      {RuleId::symm_trans_distrib, sy(tr(p(), q())), tr(sy(q()), sy(p()))},
      {RuleId::trans_assoc, tr(tr(p(), q()), r()), tr(p(), tr(q(), r()))},
      {RuleId::cancel_mid_right, tr(p(), tr(sy(p()), q())), q()},
      {RuleId::cancel_mid_left, tr(sy(p()), tr(p(), q())), q()},
  }};
}

// Node kinds only, no variable bindings. Cheap rejection before matching.
bool shapeOk(const Pattern& pat, const PathExpr& term, AtomMode mode, bool unfold) {
  switch (pat.kind) {
    case Pattern::Kind::var: return true;
    case Pattern::Kind::refl: return term.isRefl();
    case Pattern::Kind::symm:
      if (term.isSymm()) return shapeOk(*pat.a, term.child(), mode, true);
      return mode == AtomMode::letters && unfold && term.isEdge() && shapeOk(*pat.a, term, mode, false);
    case Pattern::Kind::trans:
      return term.isTrans() && shapeOk(*pat.a, term.left(), mode, true) &&
             shapeOk(*pat.b, term.right(), mode, true);
  }
  return false;
}

bool matchImpl(const Pattern& pat, const PathExpr& term, Subst& s, AtomMode mode, bool unfold) {
  switch (pat.kind) {
    case Pattern::Kind::var: {
      auto& slot = s[static_cast<std::size_t>(pat.var)];
      if (slot) return *slot == term;
      slot = term;
      return true;
    }
    case Pattern::Kind::refl:
      return term.isRefl();
    case Pattern::Kind::symm:
      if (term.isSymm()) return matchImpl(*pat.a, term.child(), s, mode, true);
      if (mode == AtomMode::letters && unfold && term.isEdge()) {
        if (pat.a->kind == Pattern::Kind::var) {
          auto& slot = s[static_cast<std::size_t>(pat.a->var)];
          if (slot)
            return slot->isEdge() && slot->name() == term.name() &&
                   slot->orientation() == flip(term.orientation());
        }
        return matchImpl(*pat.a, PathExpr::edge(term.name(), flip(term.orientation())), s, mode,
                         false);
      }
      return false;
    case Pattern::Kind::trans:
      return term.isTrans() && matchImpl(*pat.a, term.left(), s, mode, true) &&
             matchImpl(*pat.b, term.right(), s, mode, true);
  }
  return false;
}

bool hasRefl(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::refl: return true;
    case Pattern::Kind::var: return false;
    case Pattern::Kind::symm: return hasRefl(*p.a);
    case Pattern::Kind::trans: return hasRefl(*p.a) || hasRefl(*p.b);
  }
  return false;
}

bool allBound(const Pattern& p, const Subst& s) {
  switch (p.kind) {
    case Pattern::Kind::refl: return true;
    case Pattern::Kind::var: return s[static_cast<std::size_t>(p.var)].has_value();
    case Pattern::Kind::symm: return allBound(*p.a, s);
    case Pattern::Kind::trans: return allBound(*p.a, s) && allBound(*p.b, s);
  }
  return false;
}

}  // namespace

std::string_view ruleName(RuleId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<RuleId> parseRuleId(std::string_view name) {
  for (std::size_t i = 0; i < kRuleCount; ++i)
    if (kNames[i] == name) return static_cast<RuleId>(i);
  return std::nullopt;
}

const Rule& rule(RuleId id) {
  static const std::array<Rule, kRuleCount> rules = buildRules();
  return rules[static_cast<std::size_t>(id)];
}

bool matchPattern(const Pattern& pat, const PathExpr& term, Subst& subst, AtomMode mode) {
  return matchImpl(pat, term, subst, mode, true);
}

PathExpr instantiate(const Pattern& pat, const Subst& subst, const std::string& reflPoint,
                     const SpacePresentation& space) {
  switch (pat.kind) {
    case Pattern::Kind::var: {
      const auto& slot = subst[static_cast<std::size_t>(pat.var)];
      if (!slot) throw Error(ErrorCode::NoMatch, "unbound pattern variable");
      return *slot;
    }
    case Pattern::Kind::refl:
      return PathExpr::refl(reflPoint);
    case Pattern::Kind::symm:
      return PathExpr::symm(instantiate(*pat.a, subst, reflPoint, space));
    case Pattern::Kind::trans: {
      if (pat.a->kind == Pattern::Kind::refl) {
        PathExpr r = instantiate(*pat.b, subst, reflPoint, space);
        return PathExpr::trans(PathExpr::refl(pathSource(r, space)), r);
      }
      PathExpr l = instantiate(*pat.a, subst, reflPoint, space);
      if (pat.b->kind == Pattern::Kind::refl)
        return PathExpr::trans(l, PathExpr::refl(pathTarget(l, space)));
      return PathExpr::trans(l, instantiate(*pat.b, subst, reflPoint, space));
    }
  }
  throw Error(ErrorCode::NoMatch, "bad pattern");
}

std::optional<PathExpr> rewriteRoot(RuleId id, const PathExpr& term,
                                    const SpacePresentation& space, AtomMode mode) {
  const Rule& r = rule(id);
  if (!shapeOk(*r.lhs, term, mode, true)) return std::nullopt;
  Subst s;
  if (!matchPattern(*r.lhs, term, s, mode)) return std::nullopt;
  // every contractum ρ sits at the source of its redex
  if (r.rhs->kind == Pattern::Kind::refl) {
    if (id == RuleId::symm_refl) return term.child();
    return PathExpr::refl(pathSource(term, space));
  }
  return instantiate(*r.rhs, s, std::string(), space);
}

PathExpr applyStep(const PathExpr& expr, const StepInstance& step, const SpacePresentation& space,
                   AtomMode mode) {
  const PathExpr& sub = subtermAt(expr, step.position);
  const auto where = std::string(ruleName(step.rule)) + " @ " + positionToString(step.position);
  std::optional<PathExpr> out;
  if (step.direction == Direction::forward) {
    out = rewriteRoot(step.rule, sub, space, mode);
    if (!out) throw Error(ErrorCode::NoMatch, where);
  } else if (step.witness) {
    auto fwd = rewriteRoot(step.rule, *step.witness, space, mode);
    if (!fwd || !(*fwd == sub)) throw Error(ErrorCode::NoMatch, where + " (witness)");
    out = *step.witness;
  } else {
    const Rule& r = rule(step.rule);
    Subst s;
    if (!matchPattern(*r.rhs, sub, s, mode) || !allBound(*r.lhs, s))
      throw Error(ErrorCode::NoMatch, where + " (backward)");
    std::string point = hasRefl(*r.lhs) ? endpoints(sub, space).first : std::string();
    out = instantiate(*r.lhs, s, point, space);
  }
  if (endpoints(sub, space) != endpoints(*out, space))
    throw Error(ErrorCode::EndpointMismatch, where);
  return replaceAt(expr, step.position, std::move(*out));
}

PathExpr replayDerivation(const Derivation& d, const SpacePresentation& space, AtomMode mode) {
  PathExpr cur = d.source;
  std::pair<std::string, std::string> ends;
  try {
    ends = endpoints(cur, space);
  } catch (const Error& e) {
    throw Error(ErrorCode::ReplayMismatch, std::string("source: ") + e.what());
  }
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    try {
      cur = applyStep(cur, d.steps[i], space, mode);
      if (endpoints(cur, space) != ends)
        throw Error(ErrorCode::EndpointMismatch, "whole expression");
    } catch (const Error& e) {
      throw Error(ErrorCode::ReplayMismatch, "step " + std::to_string(i) + ": " + e.what());
    }
  }
  if (!(cur == d.target)) throw Error(ErrorCode::ReplayMismatch, "final expression differs from target");
  return cur;
}

}  // namespace cpath
