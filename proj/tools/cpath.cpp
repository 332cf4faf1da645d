// cpath: command line front end for the path engine.
// Exit codes: 0 success or equal, 1 negative verdict, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpath/error.hpp"
#include "cpath/pushout.hpp"
#include "cpath/rewrite.hpp"
#include "cpath/spaces.hpp"
#include "cpath/text.hpp"

using namespace cpath;

namespace {

void printTrace(const Derivation& d, const SpacePresentation& space) {
  for (const auto& line : traceLines(d, space)) std::cout << line << "\n";
}

void printGroup(const GroupPresentation& g) {
  std::cout << "generators: " << g.generators << "\n";
  std::cout << "names:";
  for (const auto& n : g.names) std::cout << " " << n;
  std::cout << "\n";
  std::cout << "relators: " << g.relators.size() << "\n";
  for (const auto& r : g.relators) std::cout << "  " << printWord(r, g.names) << "\n";
  std::cout << "family: " << familyName(g.family);
  if (g.family != Family::Trivial && g.family != Family::Klein && g.family != Family::Opaque &&
      g.family != Family::DirectProduct)
    std::cout << " " << g.param;
  std::cout << "\n";
}

GroupPresentation groupFor(const std::string& tag, const CatalogParams& params) {
  auto get = [&](const std::string& k) {
    auto it = params.find(k);
    if (it == params.end()) throw Error(ErrorCode::BadParams, "family " + tag + " needs " + k);
    return it->second;
  };
  auto f = parseFamily(tag);
  if (!f) throw Error(ErrorCode::UnknownTag, "'" + tag + "'");
  switch (*f) {
    case Family::Trivial: return trivialGroup();
    case Family::FreeGroup: return freeGroup(get("n"));
    case Family::Integers: return integers();
    case Family::Cyclic: return cyclicGroup(get("p"));
    case Family::Klein: return kleinGroup();
    case Family::OrientableSurface: return orientableSurfaceGroup(get("g"));
    case Family::NonOrientableSurface: return nonOrientableSurfaceGroup(get("n"));
    case Family::DirectProduct:
    case Family::Opaque: break;
  }
  throw Error(ErrorCode::BadParams, "family " + tag + " cannot be built from parameters");
}

// Canonical forms are unique for these, so encode(decode(w)) = w is checkable.
bool uniqueNormalForms(const GroupPresentation& g) {
  switch (g.family) {
    case Family::Trivial:
    case Family::FreeGroup:
    case Family::Integers:
    case Family::Cyclic:
    case Family::Klein:
      return true;
    case Family::OrientableSurface:
    case Family::NonOrientableSurface:
      return g.param <= 2;
    default:
      return false;
  }
}

nlohmann::json readJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidSpace, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpace, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational paths engine"};
  app.require_subcommand(1);

  std::string spaceFile, exprText, lhsText, rhsText, specFile, family, params, wordText, tag, without;
  bool trace = false, assertIdentity = false, asPushout = false;

  auto* normalizeCmd = app.add_subcommand("normalize", "normal form of a path expression");
  normalizeCmd->add_option("--space", spaceFile)->required();
  normalizeCmd->add_option("--expr", exprText)->required();
  normalizeCmd->add_flag("--trace", trace);

  auto* eqCmd = app.add_subcommand("eq", "decide rewrite equality");
  eqCmd->add_option("--space", spaceFile)->required();
  eqCmd->add_option("--lhs", lhsText)->required();
  eqCmd->add_option("--rhs", rhsText)->required();
  eqCmd->add_flag("--trace", trace);

  auto* pi1Cmd = app.add_subcommand("pi1", "fundamental group presentation");
  pi1Cmd->add_option("--space", spaceFile)->required();

  auto* svkCmd = app.add_subcommand("svk", "pushout and amalgamated presentation");
  svkCmd->add_option("--spec", specFile)->required();

  auto* wordCmd = app.add_subcommand("word", "solve a word in a group family");
  wordCmd->add_option("--family", family)->required();
  wordCmd->add_option("--params", params);
  wordCmd->add_option("--word", wordText)->required();
  wordCmd->add_flag("--assert-identity", assertIdentity);

  auto* confCmd = app.add_subcommand("check-confluence", "critical pair audit");
  confCmd->add_option("--without", without, "drop one rule");

  auto* catCmd = app.add_subcommand("catalog", "emit a catalog space as JSON");
  catCmd->add_option("--tag", tag)->required();
  catCmd->add_option("--params", params);
  catCmd->add_flag("--pushout", asPushout, "emit the pushout spec instead of the space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*normalizeCmd) {
      SpacePresentation space = loadSpaceFile(spaceFile);
      auto res = normalize(parsePathExpr(exprText, space), space);
      if (trace) printTrace(res.derivation, space);
      std::cout << printExpr(res.normalForm) << "\n";
      return 0;
    }
    if (*eqCmd) {
      SpacePresentation space = loadSpaceFile(spaceFile);
      auto res = rwEqDecide(parsePathExpr(lhsText, space), parsePathExpr(rhsText, space), space);
      if (!res.equal) {
        std::cout << "not equal\n";
        std::cout << "lhs normal form: " << printExpr(res.lhsNormal) << "\n";
        std::cout << "rhs normal form: " << printExpr(res.rhsNormal) << "\n";
        return 1;
      }
      std::cout << "equal\n";
      if (trace) printTrace(*res.witness, space);
      return 0;
    }
    if (*pi1Cmd) {
      Pi1 pi(loadSpaceFile(spaceFile));
      printGroup(pi.group());
      return 0;
    }
    if (*svkCmd) {
      SvkInstance inst(pushoutSpecFromJson(readJson(specFile)));
      const auto& ctx = inst.context();
      std::cout << "pushout: " << inst.pushout().space.points().size() << " points, "
                << inst.pushout().space.edges().size() << " edges, "
                << inst.pushout().space.relators().size() << " cells\n";
      std::cout << "left factor: " << familyName(ctx.g1.family) << ", right factor: "
                << familyName(ctx.g2.family) << ", amalgam generators: " << ctx.amalgam.generators << "\n";
      printGroup(inst.pi1().group());
      if (uniqueNormalForms(ctx.g1) && uniqueNormalForms(ctx.g2)) {
        auto rep = roundTripCheck(inst, 4, 2, 5000);
        std::cout << "round trip: " << rep.checked << " words, " << rep.failures << " failures\n";
        for (const auto& m : rep.messages) std::cout << "  " << m << "\n";
        auto amalg = checkDecodeAmalg(inst, 100, 1);
        std::cout << "decode respects amalgamation: " << amalg.movesApplied << " moves, " << amalg.failures
                  << " failures\n";
        for (const auto& m : amalg.messages) std::cout << "  " << m << "\n";
        if (!rep.ok() || amalg.failures > 0) return 1;
      } else {
        std::cout << "round trip: skipped (factor normal forms are not unique)\n";
      }
      return 0;
    }
    if (*wordCmd) {
      GroupPresentation g = groupFor(family, parseParams(params));
      Word w = parseWord(wordText, g.names);
      auto v = solverNormalize(g, w);
      std::cout << "canonical: " << printWord(v.canonical, g.names) << "\n";
      std::cout << "identity: " << truthName(v.isIdentity) << " (" << methodName(v.method) << ")\n";
      if (assertIdentity && v.isIdentity != Truth::yes) return 1;
      return 0;
    }
    if (*confCmd) {
      RuleSet rules = RuleSet::all();
      if (!without.empty()) {
        auto id = parseRuleId(without);
        if (!id) throw Error(ErrorCode::UnknownTag, "no rule named '" + without + "'");
        rules = rules.without(*id);
      }
      auto rep = checkLocalConfluence(rules);
      std::cout << "critical pairs: " << rep.total << "\n";
      std::cout << "joinable: " << rep.joinable << "\n";
      for (const auto& f : rep.counterexamples) {
        std::cout << "not joinable: " << ruleName(f.pair.outer) << " / " << ruleName(f.pair.inner) << " @ "
                  << positionToString(f.pair.position) << " : " << printExpr(f.pair.peak) << "\n";
        std::cout << "  " << printExpr(f.leftNormal) << "  vs  " << printExpr(f.rightNormal) << "\n";
      }
      return rep.confluent() ? 0 : 1;
    }
    if (*catCmd) {
      auto entry = makeSpace(tag, parseParams(params));
      if (asPushout) {
        if (!entry.pushout) throw Error(ErrorCode::BadParams, tag + " has no pushout route");
        std::cout << pushoutSpecToJson(*entry.pushout).dump(2) << "\n";
      } else {
        std::cout << spaceToJson(entry.space).dump(2) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
