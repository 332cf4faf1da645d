#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpath/group.hpp"
#include "cpath/path_expr.hpp"
#include "cpath/pi1.hpp"
#include "cpath/pushout.hpp"
#include "cpath/space.hpp"

namespace cpath {

using CatalogParams = std::map<std::string, int>;

/// "p=5,q=2" style. Throws BadParams.
CatalogParams parseParams(const std::string& text);

/// Sanity witnesses, as words over the expected group's generators.
struct Witnesses {
  std::vector<Word> nontrivial;
  std::vector<std::pair<Word, Word>> nonCommuting;
  std::optional<std::pair<Word, long>> torsion;  // element and its exact order
};

struct SpaceCatalogEntry {
  std::string tag;
  CatalogParams params;
  // For wedge/suspension/sphere this is the built pushout space; otherwise the
  // one-vertex CW construction (or the product complex for the torus).
  SpacePresentation space;
  std::optional<PushoutSpec> pushout;  // the SVK route, when there is one
  GroupPresentation expected;
  bool svkRoute = false;
  std::optional<int> lensQ;  // metadata only
};

const std::vector<std::string>& catalogTags();

/// Throws BadParams (unknown tag, missing or out-of-range parameter,
/// gcd(p,q) != 1).
SpaceCatalogEntry makeSpace(const std::string& tag, const CatalogParams& params = {});

Witnesses expectedWitnesses(const SpaceCatalogEntry& entry);

// ---- building blocks --------------------------------------------------------

SpacePresentation pointSpace(const std::string& name = "base");
/// One point "base", one loop per generator (named after it), one 2-cell
/// per relator.
SpacePresentation oneVertexSpace(const GroupPresentation& pres);
/// Cellular product of two complexes. Points "x:y", edges "e:y" and "x:e",
/// one square per pair of edges, plus cells of each factor times points of
/// the other.
SpacePresentation productSpace(const SpacePresentation& a, const SpacePresentation& b);

/// A -f- C -g- B with C = point.
PushoutSpec wedgeSpec(const SpacePresentation& a, const SpacePresentation& b);
/// Both cones collapse to points.
PushoutSpec suspensionSpec(const SpacePresentation& c);
/// Disk attached to a one-vertex bouquet along `boundary`.
PushoutSpec cellAttachmentSpec(const SpacePresentation& bouquet, const LetterSeq& boundary);

// ---- circle -----------------------------------------------------------------

const SpacePresentation& circleSpace();  // point base, edge loop
/// loop^n as a right-associated chain, refl(base) for 0.
PathExpr circleDecode(long n);
/// Winding number of the normal form. Throws IllComposed unless a loop at base.
long circleEncode(const PathExpr& loop);

// ---- product formula --------------------------------------------------------

struct ProductLoop {
  PathExpr first;
  PathExpr second;
};

class ProductPi1 {
 public:
  ProductPi1(const SpacePresentation& a, const SpacePresentation& b);
  const GroupPresentation& group() const { return group_; }
  const Pi1& left() const { return a_; }
  const Pi1& right() const { return b_; }
  /// Componentwise encoding, right factor generators shifted after the left.
  std::pair<Word, Word> encodePair(const ProductLoop& loop) const;
  Word encode(const ProductLoop& loop) const;

 private:
  Pi1 a_, b_;
  GroupPresentation group_;
};

}  // namespace cpath
