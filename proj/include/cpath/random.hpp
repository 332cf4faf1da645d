#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cpath/group.hpp"
#include "cpath/path_expr.hpp"
#include "cpath/pi1.hpp"
#include "cpath/space.hpp"

namespace cpath {

/// Seeded random well-formed expressions over a space.
class ExprGen {
 public:
  ExprGen(const SpacePresentation& space, std::uint64_t seed);

  /// Any expression starting at `point`, depth at most `depth`.
  PathExpr from(const std::string& point, int depth);
  /// Any expression ending at `point`.
  PathExpr to(const std::string& point, int depth);
  /// Loop at the basepoint; when the random part ends elsewhere it is closed
  /// with the inverse tree path.
  PathExpr loop(int depth);

  std::mt19937_64& rng() { return rng_; }

 private:
  PathExpr leafFrom(const std::string& point);
  PathExpr leafTo(const std::string& point);
  int pick(int n);

  const SpacePresentation& space_;
  SpanningTree tree_;
  std::mt19937_64 rng_;
};

/// Random (not necessarily reduced) word with letters over `generators`.
Word randomWord(std::mt19937_64& rng, int generators, int length);
/// Freely reduced random word of exactly `length` letters.
Word randomReducedWord(std::mt19937_64& rng, int generators, int length);

}  // namespace cpath
