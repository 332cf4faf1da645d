#include "cpath/free_product.hpp"

#include <deque>
#include <unordered_set>

#include "cpath/error.hpp"

namespace cpath {

FPContext makeFPContext(GroupPresentation g1, GroupPresentation g2, GroupPresentation amalgam,
                        std::vector<Word> i1, std::vector<Word> i2) {
  FPContext ctx{std::move(g1), std::move(g2), std::move(amalgam), std::move(i1), std::move(i2), {}};
  const auto k = static_cast<std::size_t>(ctx.amalgam.generators);
  if (ctx.i1.size() != k || ctx.i2.size() != k)
    throw Error(ErrorCode::IllFormedMap, "inclusions must give one image per amalgam generator");
  for (Side s : {Side::left, Side::right}) {
    for (const auto& img : ctx.inclusion(s))
      for (const auto& l : img)
        if (l.gen < 0 || l.gen >= ctx.factor(s).generators)
          throw Error(ErrorCode::IllFormedMap, "inclusion image uses an unknown generator");
    for (const auto& r : ctx.amalgam.relators) {
      Word img;
      for (const auto& l : r) {
        Word x = ctx.inclusion(s)[static_cast<std::size_t>(l.gen)];
        if (l.inverse) x = inverse(x);
        img.insert(img.end(), x.begin(), x.end());
      }
      if (solverNormalize(ctx.factor(s), img, ctx.bfs).isIdentity != Truth::yes)
        throw Error(ErrorCode::IllFormedMap, "an amalgam relator does not map to the identity");
    }
  }
  return ctx;
}

Word canonicalElement(const FPContext& ctx, Side side, const Word& w) {
  const auto& g = ctx.factor(side);
  if (g.family == Family::Opaque) return w;
  return solverNormalize(g, w, ctx.bfs).canonical;
}

bool isIdentityElement(const FPContext& ctx, Side side, const Word& w) {
  const auto& g = ctx.factor(side);
  if (g.family == Family::Opaque) return w.empty();
  return solverNormalize(g, w, ctx.bfs).isIdentity == Truth::yes;
}

Word includeAmalgam(const FPContext& ctx, Side side, const Word& h) {
  Word img;
  for (const auto& l : h) {
    if (l.gen < 0 || l.gen >= ctx.amalgam.generators)
      throw Error(ErrorCode::InvalidWord, "amalgam generator out of range");
    Word x = ctx.inclusion(side)[static_cast<std::size_t>(l.gen)];
    if (l.inverse) x = inverse(x);
    img.insert(img.end(), x.begin(), x.end());
  }
  return canonicalElement(ctx, side, img);
}

FPWord fpConcat(const FPWord& u, const FPWord& v) {
  FPWord out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

FPWord fpInvert(const FPContext& ctx, const FPWord& u) {
  FPWord out;
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    out.push_back({it->side, canonicalElement(ctx, it->side, inverse(it->element))});
  return out;
}

FPWord fpNormalize(const FPContext& ctx, const FPWord& w) {
  FPWord out;
  for (const auto& x : w) {
    if (!out.empty() && out.back().side == x.side) {
      Word merged = canonicalElement(ctx, x.side, concat(out.back().element, x.element));
      if (isIdentityElement(ctx, x.side, merged))
        out.pop_back();
      else
        out.back().element = std::move(merged);
      continue;
    }
    Word c = canonicalElement(ctx, x.side, x.element);
    if (!isIdentityElement(ctx, x.side, c)) out.push_back({x.side, std::move(c)});
  }
  return out;
}

bool isFPNormal(const FPContext& ctx, const FPWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (isIdentityElement(ctx, w[i].side, w[i].element)) return false;
    if (i > 0 && w[i - 1].side == w[i].side) return false;
  }
  return true;
}

FPWord applyAmalgMove(const FPContext& ctx, const FPWord& w, const AmalgMove& mv) {
  if (mv.position >= w.size()) throw Error(ErrorCode::NoMatch, "move position out of range");
  const Side from = mv.direction == AmalgDirection::leftToRight ? Side::left : Side::right;
  const FPLetter& x = w[mv.position];
  if (x.side != from) throw Error(ErrorCode::NoMatch, "letter is on the other side");
  Word expect = includeAmalgam(ctx, from, mv.h);
  Word diff = concat(x.element, inverse(expect));
  bool same = ctx.factor(from).family == Family::Opaque ? x.element == expect
                                                         : isIdentityElement(ctx, from, diff);
  if (!same) throw Error(ErrorCode::NoMatch, "letter is not the image of h");
  FPWord out = w;
  out[mv.position] = {other(from), includeAmalgam(ctx, other(from), mv.h)};
  return out;
}

FPWord fullReduce(const FPContext& ctx, const FPWord& w) {
  FPWord cur = w;
  while (true) {
    FPWord next;
    for (const auto& x : cur) {
      if (!next.empty() && next.back().side == x.side && x.element == inverse(next.back().element))
        next.pop_back();
      else
        next.push_back(x);
    }
    next = fpNormalize(ctx, next);
    FPWord cleaned;
    for (auto& x : next) {
      if (ctx.factor(x.side).family == Family::Opaque) x.element = freeReduce(x.element);
      if (!x.element.empty() || ctx.factor(x.side).family != Family::Opaque) cleaned.push_back(x);
    }
    cleaned = fpNormalize(ctx, cleaned);
    if (cleaned == cur) return cleaned;
    cur = std::move(cleaned);
  }
}

namespace {

std::string keyOf(const FPWord& w) {
  std::string k;
  for (const auto& x : w) {
    k.push_back(x.side == Side::left ? 'L' : 'R');
    for (const auto& l : x.element) k.push_back(static_cast<char>(2 * l.gen + (l.inverse ? 1 : 0) + 2));
    k.push_back('|');
  }
  return k;
}

Truth search(const FPContext& ctx, const FPWord& u, const FPWord& v, const AmalgSearchOptions& opts) {
  FPWord start = fpNormalize(ctx, u);
  const std::string goal = keyOf(fpNormalize(ctx, v));
  if (keyOf(start) == goal) return Truth::yes;

  std::vector<Word> hs{Word{}};
  for (int g = 0; g < ctx.amalgam.generators; ++g) {
    hs.push_back({{g, false}});
    hs.push_back({{g, true}});
  }
  std::unordered_set<std::string> seen{keyOf(start)};
  std::vector<FPWord> frontier{start};
  for (int d = 1; d <= opts.depth && !frontier.empty(); ++d) {
    std::vector<FPWord> next;
    for (const auto& w : frontier) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        const Side s = w[j].side;
        for (const auto& h : hs) {
          const Word here = includeAmalgam(ctx, s, h);
          const Word there = includeAmalgam(ctx, other(s), h);
          // x = (x i(h)^-1) i(h) ~ (x i(h)^-1) i'(h), and symmetrically on the left
          for (int side = 0; side < 2; ++side) {
            FPWord cand(w.begin(), w.begin() + static_cast<long>(j));
            if (side == 0) {
              cand.push_back({s, concat(w[j].element, inverse(here))});
              cand.push_back({other(s), there});
            } else {
              cand.push_back({other(s), there});
              cand.push_back({s, concat(inverse(here), w[j].element)});
            }
            cand.insert(cand.end(), w.begin() + static_cast<long>(j) + 1, w.end());
            FPWord nf = fpNormalize(ctx, cand);
            std::string key = keyOf(nf);
            if (key == goal) return Truth::yes;
            if (seen.insert(key).second) {
              if (seen.size() >= opts.maxStates) return Truth::unknown;
              next.push_back(std::move(nf));
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return Truth::unknown;
}

}  // namespace

Truth amalgEquivBounded(const FPContext& ctx, const FPWord& u, const FPWord& v,
                        const AmalgSearchOptions& opts) {
  if (search(ctx, u, v, opts) == Truth::yes) return Truth::yes;
  return search(ctx, v, u, opts);
}

std::string printFPWord(const FPContext& ctx, const FPWord& w) {
  if (w.empty()) return "nil";
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ' ';
    out += x.side == Side::left ? "L(" : "R(";
    out += printWord(x.element, ctx.factor(x.side).names);
    out += ')';
  }
  return out;
}

}  // namespace cpath
