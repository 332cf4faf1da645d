#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpath {

struct Letter {
  int gen = 0;
  bool inverse = false;
  Letter inv() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word freeReduce(const Word& w);
/// Free reduction plus cancellation of first against last letter.
Word cyclicReduce(const Word& w);
Word power(const Word& w, long n);
long exponentSum(const Word& w, int gen);
/// All rotations of w and of w^-1 (w assumed cyclically reduced).
std::vector<Word> symmetrize(const Word& w);

enum class Family : std::uint8_t {
  Trivial,
  FreeGroup,
  Integers,
  Cyclic,
  DirectProduct,
  Klein,
  OrientableSurface,
  NonOrientableSurface,
  Opaque,
};

std::string_view familyName(Family f);
std::optional<Family> parseFamily(std::string_view name);

struct GroupPresentation {
  int generators = 0;
  std::vector<std::string> names;  // one per generator
  std::vector<Word> relators;
  Family family = Family::Opaque;
  int param = 0;  // rank, p, g or n depending on family
  // DirectProduct: factors own consecutive generator blocks, in order.
  std::vector<GroupPresentation> factors;
};

GroupPresentation trivialGroup();
GroupPresentation freeGroup(int rank);
GroupPresentation integers();
GroupPresentation cyclicGroup(int p);
GroupPresentation kleinGroup();
GroupPresentation orientableSurfaceGroup(int g);
GroupPresentation nonOrientableSurfaceGroup(int n);
GroupPresentation directProduct(const GroupPresentation& a, const GroupPresentation& b);
GroupPresentation opaqueGroup(int generators, std::vector<Word> relators,
                              std::vector<std::string> names = {});

/// Default generator names: a, b, c, ... then g<i>.
std::vector<std::string> defaultNames(int generators);

/// Relators only use valid generators and the tag matches the relator shape.
/// Throws InvalidWord or BadParams.
void validatePresentation(const GroupPresentation& pres);

/// Sets family/param from the relator shape, up to rotating and inverting
/// relators. Generator order is not permuted.
GroupPresentation recognizeFamily(GroupPresentation pres);

/// Space separated letters, "x^-1" for inverses, "1" for the empty word.
std::string printWord(const Word& w, const std::vector<std::string>& names);
/// Throws InvalidWord.
Word parseWord(std::string_view text, const std::vector<std::string>& names);

// ---- Klein bottle group as pairs with the twisted law -----------------------

struct KleinNF {
  long m = 0;
  long n = 0;
  friend bool operator==(const KleinNF&, const KleinNF&) = default;
};

KleinNF kleinMul(const KleinNF& x, const KleinNF& y);
KleinNF kleinInv(const KleinNF& x);
/// a = (1,0), b = (0,1).
KleinNF kleinFold(const Word& w);

// ---- solvers ----------------------------------------------------------------

enum class Truth : std::uint8_t { no, yes, unknown };
std::string_view truthName(Truth t);

enum class Method : std::uint8_t { normalForm, dehn, boundedSearch };
std::string_view methodName(Method m);

struct SolverVerdict {
  Word canonical;  // representative word; unique per element except for dehn
  Truth isIdentity = Truth::unknown;
  Method method = Method::normalForm;
  int depth = 0;  // boundedSearch only
};

struct BfsOptions {
  int depth = 8;
  std::size_t maxStates = 20000;
};

/// Throws InvalidWord.
SolverVerdict solverNormalize(const GroupPresentation& pres, const Word& w,
                              const BfsOptions& bfs = {});

Word dehnReduce(const Word& w, const std::vector<Word>& relators);

/// Exponent sums reduced modulo the lattice spanned by the relators'
/// exponent vectors (Hermite normal form), so equal vectors mean equal images
/// in the abelianization.
std::vector<long> abelianize(const GroupPresentation& pres, const Word& w);

struct BfsResult {
  Truth verdict = Truth::unknown;  // yes or unknown, never no
  bool capped = false;             // stopped by maxStates rather than depth
  std::size_t states = 0;
  int depthReached = 0;
};

BfsResult boundedIdentityBFS(const GroupPresentation& pres, const Word& w,
                             const BfsOptions& opts = {});

/// Word over <a, b | a a b b> rewritten over the Klein generators
/// <x, y | x y x^-1 y> by a -> x, b -> x^-1 y. The relator maps to x y x^-1 y.
Word nonOrientable2ToKlein(const Word& w);

}  // namespace cpath
