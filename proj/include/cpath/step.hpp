#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpath/path_expr.hpp"
#include "cpath/space.hpp"

namespace cpath {

// Inventory order doubles as rule priority.
enum class RuleId : std::uint8_t {
  symm_refl,
  symm_symm,
  trans_refl_left,
  trans_refl_right,
  trans_symm,
  symm_trans,
  symm_trans_distrib,
  trans_assoc,
  cancel_mid_right,
  cancel_mid_left,
};

inline constexpr std::size_t kRuleCount = 10;

inline constexpr std::array<RuleId, kRuleCount> kAllRules = {
    RuleId::symm_refl,          RuleId::symm_symm,   RuleId::trans_refl_left,
    RuleId::trans_refl_right,   RuleId::trans_symm,  RuleId::symm_trans,
    RuleId::symm_trans_distrib, RuleId::trans_assoc, RuleId::cancel_mid_right,
    RuleId::cancel_mid_left,
};

std::string_view ruleName(RuleId id);
std::optional<RuleId> parseRuleId(std::string_view name);

class RuleSet {
 public:
  static RuleSet all() { return RuleSet((1u << kRuleCount) - 1); }
  static RuleSet none() { return RuleSet(0); }

  bool contains(RuleId r) const { return mask_ & bit(r); }
  RuleSet without(RuleId r) const { return RuleSet(mask_ & ~bit(r)); }
  RuleSet with(RuleId r) const { return RuleSet(mask_ | bit(r)); }
  bool empty() const { return mask_ == 0; }

  friend bool operator==(RuleSet, RuleSet) = default;

 private:
  explicit RuleSet(std::uint32_t m) : mask_(m) {}
  static std::uint32_t bit(RuleId r) { return 1u << static_cast<unsigned>(r); }
  std::uint32_t mask_;
};

/// Pattern over variables p, q, r (0, 1, 2). Refl patterns carry no point;
/// it is recovered from the surrounding term.
struct Pattern {
  enum class Kind : std::uint8_t { var, refl, symm, trans };
  Kind kind = Kind::var;
  int var = -1;
  std::shared_ptr<const Pattern> a, b;
};
using PatternPtr = std::shared_ptr<const Pattern>;

struct Rule {
  RuleId id;
  PatternPtr lhs;
  PatternPtr rhs;
};

const Rule& rule(RuleId id);

// letters: an edge letter also matches σ(x) with x the flipped letter, one
// level deep. opaque: edge nodes are plain atoms.
enum class AtomMode : std::uint8_t { letters, opaque };

using Subst = std::array<std::optional<PathExpr>, 3>;

bool matchPattern(const Pattern& pat, const PathExpr& term, Subst& subst, AtomMode mode);

/// `reflPoint` types a ρ that has no composed neighbour to read it from.
PathExpr instantiate(const Pattern& pat, const Subst& subst, const std::string& reflPoint,
                     const SpacePresentation& space);

/// One forward application at the root of `term`, or nullopt.
std::optional<PathExpr> rewriteRoot(RuleId id, const PathExpr& term,
                                    const SpacePresentation& space, AtomMode mode);

enum class Direction : std::uint8_t { forward, backward };

struct StepInstance {
  RuleId rule;
  Position position;
  Direction direction = Direction::forward;
  // Backward only: the redex to restore. Needed whenever the rule erases a
  // variable, since the contractum alone does not determine it.
  std::optional<PathExpr> witness;
};

struct Derivation {
  PathExpr source;
  PathExpr target;
  std::vector<StepInstance> steps;
};

/// Throws NoMatch, BadPosition, EndpointMismatch.
PathExpr applyStep(const PathExpr& expr, const StepInstance& step, const SpacePresentation& space,
                   AtomMode mode = AtomMode::letters);

/// Throws ReplayMismatch.
PathExpr replayDerivation(const Derivation& d, const SpacePresentation& space,
                          AtomMode mode = AtomMode::letters);

}  // namespace cpath
