#include <doctest.h>

#include <random>

#include "cpath/complex_map.hpp"
#include "cpath/error.hpp"
#include "cpath/random.hpp"
#include "cpath/rewrite.hpp"
#include "cpath/spaces.hpp"
#include "cpath/text.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace cpath;

namespace {

PathExpr E(const std::string& n) { return PathExpr::edge(n); }
PathExpr S(PathExpr x) { return PathExpr::symm(std::move(x)); }
PathExpr T(PathExpr x, PathExpr y) { return PathExpr::trans(std::move(x), std::move(y)); }

SpacePresentation interval() { return SpacePresentation({"a", "b"}, {{"e", "a", "b"}}, {}, "a"); }

SpacePresentation figureEight() { return makeSpace("bouquet", {{"n", 2}}).space; }

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidSpace;
}

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("validation") {
    CHECK(codeOf([] { SpacePresentation({"a"}, {{"e", "a", "z"}}, {}, "a"); }) == ErrorCode::InvalidSpace);
    CHECK(codeOf([] { SpacePresentation({"a"}, {}, {}, "z"); }) == ErrorCode::InvalidSpace);
    CHECK(codeOf([] { SpacePresentation({"a"}, {{"e", "a", "a"}, {"e", "a", "a"}}, {}, "a"); }) ==
          ErrorCode::InvalidSpace);
    // relator must close up
    CHECK(codeOf([] { SpacePresentation({"a", "b"}, {{"e", "a", "b"}}, {{{"e", Orientation::fwd}}}, "a"); }) ==
          ErrorCode::InvalidSpace);
    SpacePresentation ok({"a", "b"}, {{"e", "a", "b"}}, {{{"e", Orientation::fwd}, {"e", Orientation::rev}}}, "a");
    CHECK(ok.relators().size() == 1);
  }

  TEST_CASE("lookup and basepoint change") {
    auto s = interval();
    CHECK(s.letterSrc({"e", Orientation::rev}) == "b");
    CHECK(s.letterDst({"e", Orientation::rev}) == "a");
    CHECK(codeOf([&] { s.edge("nope"); }) == ErrorCode::UnknownEdge);
    CHECK(s.withBasepoint("b").basepoint() == "b");
    CHECK(codeOf([&] { s.withBasepoint("c"); }) == ErrorCode::UnknownPoint);
    CHECK(isConnected(s));
    CHECK_FALSE(isConnected(SpacePresentation({"a", "b"}, {}, {}, "a")));
  }
}

TEST_SUITE("path expressions") {
  TEST_CASE("endpoints") {
    auto s = interval();
    CHECK(endpoints(PathExpr::refl("a"), s) == std::pair<std::string, std::string>{"a", "a"});
    CHECK(endpoints(S(E("e")), s) == std::pair<std::string, std::string>{"b", "a"});
    CHECK(endpoints(T(E("e"), S(E("e"))), s) == std::pair<std::string, std::string>{"a", "a"});
    CHECK(endpoints(T(E("loop"), E("loop")), circleSpace()) == std::pair<std::string, std::string>{"base", "base"});
    CHECK(codeOf([&] { endpoints(T(E("e"), E("e")), s); }) == ErrorCode::IllComposed);
    CHECK(codeOf([&] { endpoints(E("x"), s); }) == ErrorCode::UnknownEdge);
    CHECK_FALSE(wellFormed(T(E("e"), E("e")), s));
  }

  TEST_CASE("constructors do not normalize") {
    const auto& c = circleSpace();
    PathExpr l = E("loop");
    CHECK(compose(l, invert(l), c) == T(l, S(l)));
    CHECK(invert(invert(l)) == S(S(l)));
    CHECK(compose(reflAt("base"), l, c) == T(PathExpr::refl("base"), l));
    CHECK(codeOf([] { compose(E("e"), E("e"), interval()); }) == ErrorCode::IllComposed);
  }

  TEST_CASE("positions") {
    PathExpr x = T(S(E("a")), T(E("b"), E("a")));
    CHECK(subtermAt(x, parsePosition("left.symm")) == E("a"));
    CHECK(subtermAt(x, parsePosition("right.left")) == E("b"));
    CHECK(positionToString(parsePosition("right.left")) == "right.left");
    CHECK(positionToString({}) == "root");
    CHECK(codeOf([&] { subtermAt(x, parsePosition("left.left")); }) == ErrorCode::BadPosition);
    CHECK(codeOf([] { parsePosition("up"); }) == ErrorCode::SyntaxError);
    PathExpr y = replaceAt(x, parsePosition("right.left"), E("a"));
    CHECK(y == T(S(E("a")), T(E("a"), E("a"))));
    // untouched siblings are shared, not copied
    CHECK(y.left().sameNode(x.left()));
  }

  TEST_CASE("letters") {
    LetterSeq w{{"a", Orientation::fwd}, {"b", Orientation::rev}};
    PathExpr chain = fromLetters(w, "base");
    LetterSeq back;
    REQUIRE(lettersOfChain(chain, back));
    CHECK(back == w);
    CHECK(fromLetters({}, "base") == PathExpr::refl("base"));
    LetterSeq none;
    CHECK_FALSE(lettersOfChain(T(T(E("a"), E("b")), E("a")), none));
    CHECK(inverse(w) == LetterSeq{{"b", Orientation::fwd}, {"a", Orientation::rev}});
  }

  TEST_CASE("flatten and reduce agree with the oracle") {
    auto fig = figureEight();
    ExprGen gen(fig, 7);
    for (int i = 0; i < 500; ++i) {
      PathExpr x = gen.loop(6);
      CHECK(oracle::symsOf(flattenLetters(x)) == [&] {
        std::vector<oracle::Sym> raw;
        oracle::flattenInto(x, false, raw);
        return raw;
      }());
      CHECK(oracle::symsOf(reduceLetters(flattenLetters(x))) == oracle::reducedWord(x));
    }
  }

  TEST_CASE("structural hash and equality") {
    PathExpr x = T(E("a"), S(E("b")));
    PathExpr y = T(E("a"), S(E("b")));
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
    CHECK_FALSE(x == T(E("a"), S(E("a"))));
    CHECK(x.size() == 4);
    CHECK(x.depth() == 3);
  }
}

TEST_SUITE("steps") {
  TEST_CASE("forward and backward") {
    const auto& c = circleSpace();
    PathExpr l = E("loop");
    CHECK(applyStep(S(S(l)), {RuleId::symm_symm, {}, Direction::forward, {}}, c) == l);
    CHECK(applyStep(T(PathExpr::refl("base"), l), {RuleId::trans_refl_left, {}, Direction::forward, {}}, c) == l);
    CHECK(applyStep(l, {RuleId::symm_symm, {}, Direction::backward, {}}, c) == S(S(l)));
    CHECK(codeOf([&] { applyStep(l, {RuleId::trans_assoc, {}, Direction::forward, {}}, c); }) ==
          ErrorCode::NoMatch);
    CHECK(codeOf([&] { applyStep(l, {RuleId::symm_symm, {Move::left}, Direction::forward, {}}, c); }) ==
          ErrorCode::BadPosition);
  }

  TEST_CASE("letter mode sees inverse edges as symmetries") {
    const auto& c = circleSpace();
    PathExpr l = E("loop");
    PathExpr lr = PathExpr::edge("loop", Orientation::rev);
    CHECK(rewriteRoot(RuleId::trans_symm, T(l, lr), c, AtomMode::letters) == PathExpr::refl("base"));
    CHECK_FALSE(rewriteRoot(RuleId::trans_symm, T(l, lr), c, AtomMode::opaque));
  }

  TEST_CASE("two step derivation of p.(q.q^-1) to p") {
    // p, q loops at one point
    SpacePresentation sp({"a"}, {{"p", "a", "a"}, {"q", "a", "a"}}, {}, "a");
    PathExpr src = T(E("p"), T(E("q"), S(E("q"))));
    Derivation d{src, E("p"),
                 {{RuleId::trans_symm, {Move::right}, Direction::forward, {}},
                  {RuleId::trans_refl_right, {}, Direction::forward, {}}}};
    CHECK(replayDerivation(d, sp) == E("p"));
    CHECK(applyStep(src, d.steps[0], sp) == T(E("p"), PathExpr::refl("a")));
    Derivation wrong = d;
    wrong.target = E("q");
    CHECK(codeOf([&] { replayDerivation(wrong, sp); }) == ErrorCode::ReplayMismatch);
    CHECK(replayDerivation({E("p"), E("p"), {}}, sp) == E("p"));
  }

  TEST_CASE("random forward steps keep endpoints and are local") {
    SpacePresentation sp({"x", "y"}, {{"a", "x", "y"}, {"b", "y", "x"}, {"c", "x", "x"}}, {}, "x");
    ExprGen gen(sp, 11);
    int applied = 0;
    for (int i = 0; i < 1000; ++i) {
      PathExpr x = gen.from("x", 8);
      auto ends = endpoints(x, sp);
      for (const auto& pos : testing_support::allPositions(x)) {
        for (RuleId r : kAllRules) {
          PathExpr y = x;
          try {
            y = applyStep(x, {r, pos, Direction::forward, {}}, sp);
          } catch (const Error&) {
            continue;
          }
          ++applied;
          CHECK(endpoints(y, sp) == ends);
          // everything outside the addressed subterm is unchanged
          CHECK(replaceAt(y, pos, subtermAt(x, pos)) == x);
          break;
        }
      }
    }
    CHECK(applied > 1000);
  }

  TEST_CASE("recorded random derivations replay") {
    auto fig = figureEight();
    ExprGen gen(fig, 3);
    for (int i = 0; i < 200; ++i) {
      PathExpr x = gen.loop(6);
      Derivation d{x, x, {}};
      PathExpr cur = x;
      for (int k = 0; k < 5; ++k) {
        auto positions = testing_support::allPositions(cur);
        bool moved = false;
        for (const auto& pos : positions) {
          for (RuleId r : kAllRules) {
            try {
              StepInstance st{r, pos, Direction::forward, {}};
              cur = applyStep(cur, st, fig);
              d.steps.push_back(st);
              moved = true;
            } catch (const Error&) {
            }
            if (moved) break;
          }
          if (moved) break;
        }
        if (!moved) break;
      }
      d.target = cur;
      CHECK(replayDerivation(d, fig) == cur);
    }
  }
}

TEST_SUITE("text") {
  TEST_CASE("parse") {
    const auto& c = circleSpace();
    CHECK(parsePathExpr("(loop . inv(loop))", c) == T(E("loop"), S(E("loop"))));
    CHECK(parsePathExpr("refl(base)", c) == PathExpr::refl("base"));
    CHECK(parsePathExpr("  ( loop .loop^-1 ) ", c) == T(E("loop"), PathExpr::edge("loop", Orientation::rev)));
    auto fig = figureEight();
    CHECK(parsePathExpr("(a . (b . inv(a)))", fig) == T(E("a"), T(E("b"), S(E("a")))));
  }

  TEST_CASE("errors") {
    const auto& c = circleSpace();
    try {
      parsePathExpr("(loop . ", c);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 8);
    }
    try {
      parsePathExpr("(loop loop)", c);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 6);
    }
    CHECK(codeOf([&] { parsePathExpr("nope", c); }) == ErrorCode::UnknownEdge);
    CHECK(codeOf([&] { parsePathExpr("refl(x)", c); }) == ErrorCode::UnknownPoint);
    CHECK(codeOf([] { parsePathExpr("(e . e)", interval()); }) == ErrorCode::IllComposed);
    CHECK(codeOf([] { parsePathExprRaw("loop)"); }) == ErrorCode::SyntaxError);
  }

  TEST_CASE("print and parse round trip") {
    auto fig = figureEight();
    ExprGen gen(fig, 5);
    for (int i = 0; i < 500; ++i) {
      PathExpr x = gen.loop(7);
      CHECK(parsePathExpr(printExpr(x), fig) == x);
      PathExpr nf = normalize(x, fig).normalForm;
      CHECK(parsePathExpr(printExpr(nf), fig) == nf);
    }
    for (const char* s : {"(a . (b . inv(a)))", "refl(base)", "inv((a^-1 . b))"})
      CHECK(printExpr(parsePathExpr(s, fig)) == s);
  }

  TEST_CASE("letters") {
    CHECK(parseLetter("e^-1") == EdgeLetter{"e", Orientation::rev});
    CHECK(printLetter({"e", Orientation::rev}) == "e^-1");
    CHECK(codeOf([] { parseLetter(""); }) == ErrorCode::SyntaxError);
  }

  TEST_CASE("trace lines replay") {
    auto fig = figureEight();
    ExprGen gen(fig, 9);
    for (int i = 0; i < 200; ++i) {
      auto res = normalize(gen.loop(6), fig);
      if (res.derivation.steps.empty()) continue;
      Derivation d = parseTrace(traceLines(res.derivation, fig), fig);
      CHECK(d.source == res.derivation.source);
      CHECK(replayDerivation(d, fig) == res.normalForm);
    }
  }

  TEST_CASE("space json") {
    auto k = makeSpace("klein").space;
    CHECK(spaceFromJson(spaceToJson(k)) == k);
    auto j = spaceToJson(k);
    CHECK(j["relators"][0][0].is_string());
    CHECK(codeOf([] { spaceFromJson(nlohmann::json::parse(R"({"points":["a"]})")); }) == ErrorCode::InvalidSpace);
    CHECK(codeOf([] {
      spaceFromJson(nlohmann::json::parse(
          R"({"points":["a"],"edges":[{"name":"e","src":"a","dst":"b"}],"relators":[],"basepoint":"a"})"));
    }) == ErrorCode::InvalidSpace);
    CHECK(codeOf([] { loadSpaceFile("/nonexistent/space.json"); }) == ErrorCode::InvalidSpace);
  }
}

TEST_SUITE("complex maps") {
  TEST_CASE("constant map") {
    ComplexMap m{{{"base", "pt"}}, {{"loop", PathExpr::refl("pt")}}};
    auto pt = pointSpace("pt");
    validateMap(m, circleSpace(), pt);
    CHECK(mapPath(m, E("loop")) == PathExpr::refl("pt"));
    CHECK(mapPath(m, PathExpr::edge("loop", Orientation::rev)) == S(PathExpr::refl("pt")));
    ComplexMap twist{{{"base", "base"}}, {{"loop", PathExpr::edge("loop", Orientation::rev)}}};
    CHECK(mapPath(twist, PathExpr::edge("loop", Orientation::rev)) == E("loop"));
  }

  TEST_CASE("validation") {
    auto pt = pointSpace("pt");
    CHECK(codeOf([&] { validateMap({{{"base", "pt"}}, {}}, circleSpace(), pt); }) == ErrorCode::IllFormedMap);
    CHECK(codeOf([&] { validateMap({{{"base", "zz"}}, {{"loop", PathExpr::refl("pt")}}}, circleSpace(), pt); }) ==
          ErrorCode::IllFormedMap);
    // image with the wrong endpoints
    SpacePresentation two({"u", "v"}, {{"e", "u", "v"}}, {}, "u");
    CHECK(codeOf([&] { validateMap({{{"base", "u"}}, {{"loop", E("e")}}}, circleSpace(), two); }) ==
          ErrorCode::IllFormedMap);
  }

  TEST_CASE("identity and homomorphism") {
    auto fig = figureEight();
    ComplexMap id = identityMap(fig);
    // a to a.b, b to a^-1
    ComplexMap m{{{"base", "base"}}, {{"a", T(E("a"), E("b"))}, {"b", S(E("a"))}}};
    validateMap(m, fig, fig);
    ExprGen gen(fig, 21);
    for (int i = 0; i < 500; ++i) {
      PathExpr p = gen.loop(6), q = gen.loop(6);
      CHECK(mapPath(id, p) == p);
      CHECK(mapPath(m, T(p, q)) == T(mapPath(m, p), mapPath(m, q)));
      CHECK(mapPath(m, S(p)) == S(mapPath(m, p)));
    }
    CHECK(codeOf([&] { mapPath(m, E("zz")); }) == ErrorCode::UnknownEdge);
  }

  TEST_CASE("change of basepoint") {
    SpacePresentation sp({"x", "y"}, {{"g", "x", "y"}, {"b", "x", "x"}}, {}, "x");
    PathExpr alpha = E("b");
    CHECK(normalize(changeBasepoint(PathExpr::refl("x"), alpha, sp), sp).normalForm == alpha);
    CHECK(normalize(changeBasepoint(E("g"), PathExpr::refl("x"), sp), sp).normalForm == PathExpr::refl("y"));
    PathExpr c = changeBasepoint(E("g"), alpha, sp);
    CHECK(endpoints(c, sp) == std::pair<std::string, std::string>{"y", "y"});
    CHECK(normalize(c, sp).normalForm ==
          T(PathExpr::edge("g", Orientation::rev), T(E("b"), E("g"))));
    CHECK(codeOf([&] { changeBasepoint(E("g"), E("g"), sp); }) == ErrorCode::IllComposed);
  }
}
