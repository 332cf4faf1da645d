#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpath/group.hpp"

namespace cpath {

enum class Side : std::uint8_t { left, right };

struct FPLetter {
  Side side = Side::left;
  Word element;  // factor canonical form
  friend bool operator==(const FPLetter&, const FPLetter&) = default;
};

using FPWord = std::vector<FPLetter>;

/// G1 *_H G2 data. i1/i2 give the images of H's generators.
struct FPContext {
  GroupPresentation g1;
  GroupPresentation g2;
  GroupPresentation amalgam;
  std::vector<Word> i1;
  std::vector<Word> i2;
  BfsOptions bfs;

  const GroupPresentation& factor(Side s) const { return s == Side::left ? g1 : g2; }
  const std::vector<Word>& inclusion(Side s) const { return s == Side::left ? i1 : i2; }
};

/// Checks that i1, i2 send every amalgam relator to the identity.
/// Throws IllFormedMap.
FPContext makeFPContext(GroupPresentation g1, GroupPresentation g2,
                        GroupPresentation amalgam = trivialGroup(), std::vector<Word> i1 = {},
                        std::vector<Word> i2 = {});

inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }

/// Solver canonical form of an element of one factor. Opaque factors keep
/// the raw word.
Word canonicalElement(const FPContext& ctx, Side side, const Word& w);
bool isIdentityElement(const FPContext& ctx, Side side, const Word& w);

/// Image of an amalgam word under i1 (left) or i2 (right), canonicalized.
Word includeAmalgam(const FPContext& ctx, Side side, const Word& h);

FPWord fpConcat(const FPWord& u, const FPWord& v);
FPWord fpInvert(const FPContext& ctx, const FPWord& u);
FPWord fpNormalize(const FPContext& ctx, const FPWord& w);
/// Alternating sides, no identity letters.
bool isFPNormal(const FPContext& ctx, const FPWord& w);

enum class AmalgDirection : std::uint8_t { leftToRight, rightToLeft };

struct AmalgMove {
  std::size_t position = 0;
  Word h;  // word over the amalgam generators
  AmalgDirection direction = AmalgDirection::leftToRight;
};

/// Replaces the letter i1(h) at `position` by i2(h) (or the reverse).
/// Throws NoMatch.
FPWord applyAmalgMove(const FPContext& ctx, const FPWord& w, const AmalgMove& mv);

/// fpNormalize plus literal cancellation of adjacent x, x^-1 within a side.
FPWord fullReduce(const FPContext& ctx, const FPWord& w);

struct AmalgSearchOptions {
  int depth = 6;
  std::size_t maxStates = 20000;
};

/// yes when v's normal form is reached from u's by amalgamation moves,
/// unknown otherwise (never no).
Truth amalgEquivBounded(const FPContext& ctx, const FPWord& u, const FPWord& v,
                        const AmalgSearchOptions& opts = {});

std::string printFPWord(const FPContext& ctx, const FPWord& w);

}  // namespace cpath
