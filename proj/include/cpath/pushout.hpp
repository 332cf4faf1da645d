#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpath/complex_map.hpp"
#include "cpath/free_product.hpp"
#include "cpath/group.hpp"
#include "cpath/pi1.hpp"
#include "cpath/space.hpp"

namespace cpath {

/// A <-f- C -g-> B.
struct PushoutSpec {
  SpacePresentation A;
  SpacePresentation B;
  SpacePresentation C;
  ComplexMap f;
  ComplexMap g;
  std::string c0;
};

struct PushoutSpace {
  SpacePresentation space;
  ComplexMap inl;  // A -> space
  ComplexMap inr;  // B -> space
  std::map<std::string, std::string> glue;  // point of C -> glue edge name
};

/// Throws IllFormedMap.
PushoutSpace buildPushout(const PushoutSpec& spec);

/// Everything the SVK checks need, computed once.
class SvkInstance {
 public:
  /// Throws IllFormedMap, NotConnected.
  explicit SvkInstance(PushoutSpec spec);

  const PushoutSpec& spec() const { return spec_; }
  const PushoutSpace& pushout() const { return pushout_; }
  const Pi1& pi1A() const { return *piA_; }  // A based at f(c0)
  const Pi1& pi1B() const { return *piB_; }  // B based at g(c0)
  const Pi1& pi1C() const { return *piC_; }  // C based at c0
  const Pi1& pi1() const { return *piP_; }   // tree contains glue(c0)
  const FPContext& context() const { return ctx_; }
  const std::string& glue0() const { return pushout_.glue.at(spec_.c0); }

  /// nil -> ρ; L(α)·rest -> inl(α)·rest; R(β)·rest -> (glue·(inr(β)·glue⁻¹))·rest.
  /// Throws IllFormedLetter.
  PathExpr decode(const FPWord& w) const;
  /// Letter grouping on the normal form of a loop at the basepoint.
  FPWord encode(const PathExpr& loop) const;

  /// Solver equality in the pushout group; unknown if the solver cannot tell.
  Truth sameElement(const PathExpr& p, const PathExpr& q) const;

 private:
  FPWord encodeLetters(const LetterSeq& letters) const;

  PushoutSpec spec_;
  PushoutSpace pushout_;
  std::unique_ptr<Pi1> piA_, piB_, piC_, piP_;
  FPContext ctx_;
  // pushout edge -> (0 = A, 1 = B, 2 = glue; original edge or C point)
  std::map<std::string, std::pair<int, std::string>> origin_;
};

/// π₁ of the pushout with the spanning tree forced through glue(c0).
GroupPresentation svkPresentation(const PushoutSpec& spec);

struct RoundTripReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;
  bool ok() const { return failures == 0; }
};

/// encode∘decode = id on normalized FPWords with at most `maxLetters`
/// letters whose elements have length at most `maxElement` (enumerated
/// exhaustively from factor generator words, capped at `limit` words).
RoundTripReport roundTripCheck(const SvkInstance& inst, int maxLetters, int maxElement,
                               std::size_t limit = 200000);

struct DecodeAmalgReport {
  std::size_t samples = 0;
  std::size_t movesApplied = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;
};

/// Random FPWords with an applicable amalgamation move; decodes of both
/// sides must be solver-equal in the pushout group.
DecodeAmalgReport checkDecodeAmalg(const SvkInstance& inst, std::size_t samples, std::uint64_t seed);

nlohmann::json pushoutSpecToJson(const PushoutSpec& spec);
/// {"A":space,"B":space,"C":space,"f":{"points":{},"edges":{}},"g":...,"c0":point}
/// Throws InvalidSpace, IllFormedMap, SyntaxError.
PushoutSpec pushoutSpecFromJson(const nlohmann::json& doc);

}  // namespace cpath
