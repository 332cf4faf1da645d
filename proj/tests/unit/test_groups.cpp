#include <doctest.h>

#include <random>

#include "cpath/error.hpp"
#include "cpath/pi1.hpp"
#include "cpath/random.hpp"
#include "cpath/spaces.hpp"
#include "support/oracle.hpp"

using namespace cpath;

namespace {

Word W(const GroupPresentation& g, const char* text) { return parseWord(text, g.names); }

oracle::Affine kleinModel(const Word& w) { return oracle::kleinEval(w); }

// Words that are the identity by construction: products of conjugated relators.
Word conjugatedRelators(std::mt19937_64& rng, const GroupPresentation& g, int count) {
  Word out;
  for (int i = 0; i < count; ++i) {
    Word c = randomReducedWord(rng, g.generators, static_cast<int>(rng() % 4));
    Word r = g.relators[rng() % g.relators.size()];
    if (rng() & 1) r = inverse(r);
    out = concat(out, concat(c, concat(r, inverse(c))));
  }
  return out;
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("basic operations") {
    auto f = freeGroup(2);
    Word w = W(f, "a b b^-1 a");
    CHECK(freeReduce(w) == W(f, "a a"));
    CHECK(cyclicReduce(W(f, "b a b^-1")) == W(f, "a"));
    CHECK(inverse(W(f, "a b^-1")) == W(f, "b a^-1"));
    CHECK(power(W(f, "a b"), -2) == W(f, "b^-1 a^-1 b^-1 a^-1"));
    CHECK(power(W(f, "a"), 0).empty());
    CHECK(exponentSum(W(f, "a b a^-1 a a"), 0) == 2);
    CHECK(symmetrize(W(f, "a b")).size() == 4);
  }

  TEST_CASE("parse and print") {
    auto s = orientableSurfaceGroup(2);
    CHECK(printWord(W(s, "a1 b1 a1^-1 b1^-1"), s.names) == "a1 b1 a1^-1 b1^-1");
    CHECK(printWord({}, s.names) == "1");
    CHECK(W(s, "1").empty());
    try {
      W(s, "a3");
      FAIL("expected InvalidWord");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidWord);
    }
    CHECK(defaultNames(3) == std::vector<std::string>{"a", "b", "c"});
  }

  TEST_CASE("families validate and are recognized") {
    for (const auto& g : {trivialGroup(), freeGroup(3), integers(), cyclicGroup(4), kleinGroup(),
                          orientableSurfaceGroup(2), nonOrientableSurfaceGroup(3)}) {
      validatePresentation(g);
      auto r = recognizeFamily(opaqueGroup(g.generators, g.relators));
      CHECK(familyName(r.family) == familyName(g.family));
      CHECK(parseFamily(familyName(g.family)) == g.family);
    }
    // rotated and inverted relator still reads as Klein
    auto k = kleinGroup();
    auto rot = recognizeFamily(opaqueGroup(2, {inverse(W(k, "b a^-1 b a"))}));
    CHECK(rot.family == Family::Klein);
    // N1 is cyclic of order 2
    auto n1 = recognizeFamily(nonOrientableSurfaceGroup(1));
    CHECK(((n1.family == Family::Cyclic && n1.param == 2) || n1.family == Family::NonOrientableSurface));
    GroupPresentation bad = kleinGroup();
    bad.relators = {};
    CHECK_THROWS_AS(validatePresentation(bad), Error);
    CHECK_THROWS_AS(validatePresentation(opaqueGroup(1, {{{3, false}}})), Error);
  }
}

TEST_SUITE("klein") {
  TEST_CASE("multiplication law") {
    CHECK(kleinMul({1, 0}, {0, 1}) == KleinNF{1, 1});
    CHECK(kleinMul({0, 1}, {1, 0}) == KleinNF{1, -1});
    CHECK(kleinInv({1, 1}) == KleinNF{-1, 1});
    CHECK(kleinInv({2, 3}) == KleinNF{-2, -3});
  }

  TEST_CASE("the relator folds to the identity step by step") {
    auto k = kleinGroup();
    Word rel = W(k, "a b a^-1 b");
    std::vector<KleinNF> partial;
    for (std::size_t i = 1; i <= rel.size(); ++i) partial.push_back(kleinFold(Word(rel.begin(), rel.begin() + i)));
    CHECK(partial == std::vector<KleinNF>{{1, 0}, {1, 1}, {0, -1}, {0, 0}});
    auto v = solverNormalize(k, rel);
    CHECK(v.isIdentity == Truth::yes);
    CHECK(v.method == Method::normalForm);
  }

  TEST_CASE("group axioms on random elements") {
    std::mt19937_64 rng(5);
    auto rnd = [&] { return KleinNF{static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5}; };
    for (int i = 0; i < 1000; ++i) {
      KleinNF x = rnd(), y = rnd(), z = rnd();
      CHECK(kleinMul(kleinMul(x, y), z) == kleinMul(x, kleinMul(y, z)));
      if (i < 100) {
        CHECK(kleinMul(x, {0, 0}) == x);
        CHECK(kleinMul({0, 0}, x) == x);
        CHECK(kleinMul(x, kleinInv(x)) == KleinNF{0, 0});
        CHECK(kleinMul(kleinInv(x), x) == KleinNF{0, 0});
      }
    }
  }

  TEST_CASE("fold agrees with the affine model") {
    // the affine model and the pair law are isomorphic; identity must coincide
    auto k = kleinGroup();
    std::mt19937_64 rng(8);
    for (int i = 0; i < 2000; ++i) {
      Word w = randomWord(rng, 2, static_cast<int>(rng() % 10));
      CHECK((kleinFold(w) == KleinNF{0, 0}) == (kleinModel(w) == oracle::Affine{}));
    }
  }
}

TEST_SUITE("solvers") {
  TEST_CASE("cyclic") {
    auto c = cyclicGroup(2);
    CHECK(solverNormalize(c, W(c, "a a")).isIdentity == Truth::yes);
    CHECK(solverNormalize(c, W(c, "a")).isIdentity == Truth::no);
    auto c5 = cyclicGroup(5);
    CHECK(solverNormalize(c5, W(c5, "a a a a a a")).canonical == W(c5, "a"));
    CHECK(solverNormalize(c5, W(c5, "a^-1")).canonical == W(c5, "a a a a"));
  }

  TEST_CASE("free") {
    auto f = freeGroup(2);
    auto v = solverNormalize(f, W(f, "a b b^-1 a^-1"));
    CHECK(v.isIdentity == Truth::yes);
    CHECK(solverNormalize(f, W(f, "a b a^-1 b^-1")).isIdentity == Truth::no);
    CHECK(solverNormalize(integers(), {{0, false}, {0, true}}).isIdentity == Truth::yes);
    CHECK_THROWS_AS(solverNormalize(f, {{2, false}}), Error);
  }

  TEST_CASE("direct product is componentwise") {
    auto p = directProduct(integers(), cyclicGroup(3));
    CHECK(p.family == Family::DirectProduct);
    CHECK(p.generators == 2);
    // generators of different factors commute
    Word ab{{0, false}, {1, false}}, ba{{1, false}, {0, false}};
    CHECK(solverNormalize(p, concat(ab, inverse(ba))).isIdentity == Truth::yes);
    CHECK(solverNormalize(p, {{1, false}, {1, false}, {1, false}}).isIdentity == Truth::yes);
    CHECK(solverNormalize(p, {{0, false}}).isIdentity == Truth::no);
  }

  TEST_CASE("surface of genus two") {
    auto s = orientableSurfaceGroup(2);
    Word full = s.relators[0];
    CHECK(full.size() == 8);
    CHECK(dehnReduce(full, s.relators).empty());
    CHECK(solverNormalize(s, full).isIdentity == Truth::yes);
    Word comm = W(s, "a1 b1 a1^-1 b1^-1");
    CHECK(dehnReduce(comm, s.relators) == comm);
    CHECK(solverNormalize(s, comm).isIdentity == Truth::no);
    CHECK(dehnReduce(W(s, "a1"), s.relators) == W(s, "a1"));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
      Word w = conjugatedRelators(rng, s, 1 + static_cast<int>(rng() % 3));
      CHECK(dehnReduce(w, s.relators).empty());
    }
  }

  TEST_CASE("dehn never lengthens") {
    auto s = orientableSurfaceGroup(2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
      Word w = randomWord(rng, 4, static_cast<int>(rng() % 14));
      CHECK(dehnReduce(w, s.relators).size() <= w.size());
    }
  }

  TEST_CASE("dehn agrees with search on short words") {
    auto s = orientableSurfaceGroup(2);
    int decisive = 0;
    oracle::reducedWords(4, 4, [&](const Word& w) {
      auto bfs = boundedIdentityBFS(s, w, {8, 2000});
      auto v = solverNormalize(s, w);
      if (bfs.verdict == Truth::yes) {
        ++decisive;
        CHECK(v.isIdentity == Truth::yes);
      }
      if (v.isIdentity == Truth::yes) CHECK(bfs.verdict == Truth::yes);
    });
    CHECK(decisive > 0);
  }

  TEST_CASE("non-orientable two goes through the klein substitution") {
    auto n2 = nonOrientableSurfaceGroup(2);
    auto k = kleinGroup();
    Word rel = n2.relators[0];
    CHECK(freeReduce(nonOrientable2ToKlein(rel)) == W(k, "a b a^-1 b"));
    CHECK(solverNormalize(n2, rel).isIdentity == Truth::yes);
    CHECK(solverNormalize(n2, W(n2, "a1 a1")).isIdentity == Truth::no);
  }

  TEST_CASE("non-orientable one is cyclic of order two") {
    auto n1 = nonOrientableSurfaceGroup(1);
    auto c2 = cyclicGroup(2);
    oracle::allWords(1, 6, [&](const Word& w) {
      CHECK(solverNormalize(n1, w).isIdentity == solverNormalize(c2, w).isIdentity);
    });
  }

  TEST_CASE("opaque uses bounded search") {
    auto g = opaqueGroup(2, {{{0, false}, {0, false}, {0, false}}, {{1, false}, {1, false}}});
    auto v = solverNormalize(g, {{0, false}, {0, false}, {0, false}});
    CHECK(v.method == Method::boundedSearch);
    CHECK(v.isIdentity == Truth::yes);
    CHECK(solverNormalize(g, {{0, false}}).isIdentity != Truth::yes);
  }

  TEST_CASE("verdicts depend only on canonical forms") {
    std::mt19937_64 rng(19);
    std::vector<GroupPresentation> families{freeGroup(2), cyclicGroup(3), kleinGroup(), orientableSurfaceGroup(2),
                                            directProduct(integers(), cyclicGroup(2))};
    for (int i = 0; i < 500; ++i) {
      const auto& g = families[static_cast<std::size_t>(i) % families.size()];
      Word u = randomWord(rng, g.generators, static_cast<int>(rng() % 6));
      Word v = randomWord(rng, g.generators, static_cast<int>(rng() % 6));
      Word cu = solverNormalize(g, u).canonical, cv = solverNormalize(g, v).canonical;
      CHECK(solverNormalize(g, concat(u, v)).isIdentity == solverNormalize(g, concat(cu, cv)).isIdentity);
    }
  }
}

TEST_SUITE("abelianization and search") {
  TEST_CASE("values") {
    auto f = freeGroup(2);
    CHECK(abelianize(f, W(f, "a b a^-1 b^-1")) == std::vector<long>{0, 0});
    auto c = cyclicGroup(2);
    CHECK(abelianize(c, W(c, "a a a")) == std::vector<long>{1});
    CHECK(abelianize(kleinGroup(), {}) == std::vector<long>{0, 0});
  }

  TEST_CASE("identity implies zero image") {
    std::mt19937_64 rng(29);
    for (const auto& g : {kleinGroup(), orientableSurfaceGroup(2), nonOrientableSurfaceGroup(3), cyclicGroup(4),
                          nonOrientableSurfaceGroup(2)}) {
      for (int i = 0; i < 300; ++i) {
        Word w = (i % 2) ? conjugatedRelators(rng, g, 2) : randomWord(rng, g.generators, 6);
        if (solverNormalize(g, w).isIdentity == Truth::yes)
          CHECK(abelianize(g, w) == std::vector<long>(static_cast<std::size_t>(g.generators), 0));
      }
    }
  }

  TEST_CASE("bounded search") {
    auto k = kleinGroup();
    CHECK(boundedIdentityBFS(k, k.relators[0], {2, 1000}).verdict == Truth::yes);
    auto f = freeGroup(2);
    auto r = boundedIdentityBFS(f, W(f, "a b"), {8, 1000});
    CHECK(r.verdict == Truth::unknown);
    CHECK(boundedIdentityBFS(f, {}, {0, 10}).verdict == Truth::yes);
  }
}

TEST_SUITE("fundamental group") {
  TEST_CASE("circle") {
    Pi1 pi(circleSpace());
    CHECK(pi.group().generators == 1);
    CHECK(pi.group().relators.empty());
    for (long n : {-3L, 0L, 1L, 5L}) {
      Word w = pi.encodeLoop(circleDecode(n));
      CHECK(abelianize(pi.group(), w) == std::vector<long>{n});
    }
  }

  TEST_CASE("figure eight is free of rank two") {
    Pi1 pi(makeSpace("bouquet", {{"n", 2}}).space);
    CHECK(pi.group().generators == 2);
    CHECK(pi.group().relators.empty());
    CHECK(pi.group().family == Family::FreeGroup);
    // decode then encode is letter exact on reduced words
    oracle::reducedWords(2, 5, [&](const Word& w) { CHECK(pi.encodeLoop(pi.realize(w)) == w); });
  }

  TEST_CASE("parallel edges") {
    SpacePresentation sp({"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}}, {}, "u");
    Pi1 pi(sp);
    CHECK(pi.group().generators == 1);
    CHECK(pi.generatorOf("e1") == -1);
    CHECK(pi.generatorOf("e2") == 0);
    CHECK(pi.generatorEdge(0) == "e2");
    // generator loop is e2 then back along e1
    CHECK(pi.generatorLetters(0) == LetterSeq{{"e2", Orientation::fwd}, {"e1", Orientation::rev}});
  }

  TEST_CASE("tree order and seeds") {
    SpacePresentation sp({"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}}, {}, "u");
    auto t = spanningTree(sp);
    CHECK(t.inTree == std::vector<bool>{true, false});
    auto seeded = spanningTree(sp, {"e2"});
    CHECK(seeded.inTree == std::vector<bool>{false, true});
    CHECK_THROWS_AS(Pi1(SpacePresentation({"u", "v"}, {}, {}, "u")), Error);
  }

  TEST_CASE("cells become relators") {
    Pi1 pi(makeSpace("klein").space);
    CHECK(pi.group().family == Family::Klein);
    Pi1 rp2(makeSpace("rp2").space);
    CHECK(rp2.group().generators == 1);
    CHECK(solverNormalize(rp2.group(), {{0, false}, {0, false}}).isIdentity == Truth::yes);
  }

  TEST_CASE("encode rejects non-loops") {
    SpacePresentation sp({"u", "v"}, {{"e", "u", "v"}}, {}, "u");
    Pi1 pi(sp);
    try {
      pi.encodeLoop(PathExpr::edge("e"));
      FAIL("expected IllComposed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IllComposed);
    }
  }
}
