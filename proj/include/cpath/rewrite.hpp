#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpath/path_expr.hpp"
#include "cpath/space.hpp"
#include "cpath/step.hpp"

namespace cpath {

enum class Strategy : std::uint8_t {
  leftmostInnermost,
  rightmostInnermost,  // test-only, to compare normal forms across strategies
};

struct NormalizeOptions {
  RuleSet rules = RuleSet::all();
  AtomMode mode = AtomMode::letters;
  Strategy strategy = Strategy::leftmostInnermost;
};

struct NormalizeResult {
  PathExpr normalForm;
  Derivation derivation;
};

NormalizeResult normalize(const PathExpr& expr, const SpacePresentation& space,
                          const NormalizeOptions& opts = {});

/// No enabled rule matches at any position.
bool isNormal(const PathExpr& expr, const SpacePresentation& space,
              const NormalizeOptions& opts = {});

/// Letters of the normal form (empty for ρ).
LetterSeq normalLetters(const PathExpr& expr, const SpacePresentation& space);

struct RwEqResult {
  bool equal = false;
  PathExpr lhsNormal;
  PathExpr rhsNormal;
  std::optional<Derivation> witness;  // lhs -> rhs, only when equal
};

/// Throws EndpointMismatch when p and q do not share both endpoints.
RwEqResult rwEqDecide(const PathExpr& p, const PathExpr& q, const SpacePresentation& space);

/// Lexicographic termination measure:
///   (Σ over σ-nodes of the non-σ node count of the argument,
///    Σ over ·-nodes of the size of the left child,
///    node count)
struct Measure {
  std::size_t symmWeight = 0;
  std::size_t leftWeight = 0;
  std::size_t size = 0;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};

Measure measure(const PathExpr& expr);

struct CriticalPair {
  RuleId outer;
  RuleId inner;
  Position position;  // where the inner redex sits inside the outer one
  PathExpr peak;
  PathExpr leftReduct;   // inner rule applied at position
  PathExpr rightReduct;  // outer rule applied at root
};

/// One point "o" with loop atoms p, q, r, ... used to instantiate peaks.
const SpacePresentation& peakSpace();

std::vector<CriticalPair> criticalPairs(RuleSet rules = RuleSet::all());

struct ConfluenceFailure {
  CriticalPair pair;
  PathExpr leftNormal;
  PathExpr rightNormal;
};

struct ConfluenceReport {
  std::size_t total = 0;
  std::size_t joinable = 0;
  std::vector<ConfluenceFailure> counterexamples;
  bool confluent() const { return counterexamples.empty(); }
};

ConfluenceReport checkLocalConfluence(RuleSet rules = RuleSet::all());

}  // namespace cpath
