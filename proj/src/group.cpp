#include "cpath/group.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "cpath/error.hpp"

namespace cpath {

// ---- words ------------------------------------------------------------------

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inv());
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word freeReduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inv())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclicReduce(const Word& w) {
  Word r = freeReduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inv()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < std::labs(n); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

long exponentSum(const Word& w, int gen) {
  long s = 0;
  for (const auto& l : w)
    if (l.gen == gen) s += l.inverse ? -1 : 1;
  return s;
}

std::vector<Word> symmetrize(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) return out;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word rot(base.begin() + static_cast<long>(k), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(k));
      if (std::find(out.begin(), out.end(), rot) == out.end()) out.push_back(std::move(rot));
    }
  }
  return out;
}

// ---- presentations ------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 9> kFamilyNames = {
    "trivial", "free", "integers", "cyclic", "product", "klein", "surface", "nonorientable", "opaque",
};

Letter gen(int g) { return {g, false}; }
Letter ginv(int g) { return {g, true}; }

Word commutator(int x, int y) { return {gen(x), gen(y), ginv(x), ginv(y)}; }

Word orientableRelator(int g) {
  Word r;
  for (int i = 0; i < g; ++i) {
    Word c = commutator(2 * i, 2 * i + 1);
    r.insert(r.end(), c.begin(), c.end());
  }
  return r;
}

Word nonOrientableRelator(int n) {
  Word r;
  for (int i = 0; i < n; ++i) {
    r.push_back(gen(i));
    r.push_back(gen(i));
  }
  return r;
}

Word kleinRelator() { return {gen(0), gen(1), ginv(0), gen(1)}; }

Word shifted(const Word& w, int by) {
  Word out = w;
  for (auto& l : out) l.gen += by;
  return out;
}

// relator sets equal up to rotating and inverting each relator
bool sameRelatorsUpToCycle(const std::vector<Word>& have, const std::vector<Word>& want) {
  if (have.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& h : have) {
    auto rots = symmetrize(cyclicReduce(h));
    bool hit = false;
    for (std::size_t j = 0; j < want.size() && !hit; ++j) {
      if (used[j]) continue;
      if (std::find(rots.begin(), rots.end(), want[j]) != rots.end()) {
        used[j] = true;
        hit = true;
      }
    }
    if (!hit) return false;
  }
  return true;
}

void checkWord(const Word& w, int generators) {
  for (const auto& l : w)
    if (l.gen < 0 || l.gen >= generators)
      throw Error(ErrorCode::InvalidWord, "generator " + std::to_string(l.gen) + " out of range");
}

}  // namespace

std::string_view familyName(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parseFamily(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  return std::nullopt;
}

std::vector<std::string> defaultNames(int generators) {
  std::vector<std::string> out;
  for (int i = 0; i < generators; ++i) {
    if (i < 26)
      out.emplace_back(1, static_cast<char>('a' + i));
    else
      out.push_back("g" + std::to_string(i));
  }
  return out;
}

GroupPresentation trivialGroup() { return {0, {}, {}, Family::Trivial, 0, {}}; }

GroupPresentation freeGroup(int rank) {
  if (rank < 0) throw Error(ErrorCode::BadParams, "negative rank");
  return {rank, defaultNames(rank), {}, Family::FreeGroup, rank, {}};
}

GroupPresentation integers() { return {1, {"a"}, {}, Family::Integers, 1, {}}; }

GroupPresentation cyclicGroup(int p) {
  if (p < 1) throw Error(ErrorCode::BadParams, "cyclic order must be >= 1");
  return {1, {"a"}, {power({gen(0)}, p)}, Family::Cyclic, p, {}};
}

GroupPresentation kleinGroup() { return {2, {"a", "b"}, {kleinRelator()}, Family::Klein, 0, {}}; }

GroupPresentation orientableSurfaceGroup(int g) {
  if (g < 1) throw Error(ErrorCode::BadParams, "genus must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return {2 * g, names, {orientableRelator(g)}, Family::OrientableSurface, g, {}};
}

GroupPresentation nonOrientableSurfaceGroup(int n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "non-orientable genus must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return {n, names, {nonOrientableRelator(n)}, Family::NonOrientableSurface, n, {}};
}

GroupPresentation directProduct(const GroupPresentation& a, const GroupPresentation& b) {
  GroupPresentation out;
  out.generators = a.generators + b.generators;
  out.family = Family::DirectProduct;
  out.factors = {a, b};
  out.names = a.names;
  out.names.insert(out.names.end(), b.names.begin(), b.names.end());
  std::vector<std::string> sorted = out.names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    out.names = defaultNames(out.generators);
  out.relators = a.relators;
  for (const auto& r : b.relators) out.relators.push_back(shifted(r, a.generators));
  for (int x = 0; x < a.generators; ++x)
    for (int y = 0; y < b.generators; ++y) out.relators.push_back(commutator(x, a.generators + y));
  return out;
}

GroupPresentation opaqueGroup(int generators, std::vector<Word> relators,
                              std::vector<std::string> names) {
  if (names.empty()) names = defaultNames(generators);
  GroupPresentation out{generators, std::move(names), std::move(relators), Family::Opaque, 0, {}};
  for (const auto& r : out.relators) checkWord(r, generators);
  return out;
}

void validatePresentation(const GroupPresentation& pres) {
  if (pres.generators < 0) throw Error(ErrorCode::BadParams, "negative generator count");
  if (static_cast<int>(pres.names.size()) != pres.generators)
    throw Error(ErrorCode::BadParams, "generator names do not match generator count");
  for (const auto& r : pres.relators) checkWord(r, pres.generators);
  auto bad = [&](const char* why) {
    throw Error(ErrorCode::BadParams,
                std::string(familyName(pres.family)) + " tag does not fit: " + why);
  };
  const int k = pres.generators;
  switch (pres.family) {
    case Family::Trivial:
      if (k != 0) bad("generators present");
      break;
    case Family::FreeGroup:
      if (!pres.relators.empty()) bad("relators present");
      break;
    case Family::Integers:
      if (k != 1 || !pres.relators.empty()) bad("expected one free generator");
      break;
    case Family::Cyclic:
      if (k != 1 || !sameRelatorsUpToCycle(pres.relators, {power({gen(0)}, pres.param)}))
        bad("expected <a | a^p>");
      break;
    case Family::Klein:
      if (k != 2 || !sameRelatorsUpToCycle(pres.relators, {kleinRelator()})) bad("expected a b a^-1 b");
      break;
    case Family::OrientableSurface:
      if (pres.param < 1 || k != 2 * pres.param ||
          !sameRelatorsUpToCycle(pres.relators, {orientableRelator(pres.param)}))
        bad("expected a product of commutators");
      break;
    case Family::NonOrientableSurface:
      if (pres.param < 1 || k != pres.param ||
          !sameRelatorsUpToCycle(pres.relators, {nonOrientableRelator(pres.param)}))
        bad("expected a product of squares");
      break;
    case Family::DirectProduct: {
      int total = 0;
      for (const auto& f : pres.factors) {
        validatePresentation(f);
        total += f.generators;
      }
      if (total != k || pres.factors.size() != 2) bad("factor generator blocks");
      break;
    }
    case Family::Opaque:
      break;
  }
}

GroupPresentation recognizeFamily(GroupPresentation pres) {
  const int k = pres.generators;
  const auto& rels = pres.relators;
  auto set = [&](Family f, int param) {
    pres.family = f;
    pres.param = param;
    pres.factors.clear();
    return pres;
  };
  if (k == 0) return set(Family::Trivial, 0);
  if (rels.empty()) return k == 1 ? set(Family::Integers, 1) : set(Family::FreeGroup, k);
  if (rels.size() != 1) return set(Family::Opaque, 0);
  const Word r = cyclicReduce(rels[0]);
  if (k == 1 && !r.empty() && std::all_of(r.begin(), r.end(), [&](const Letter& l) { return l == r[0]; }))
    return set(Family::Cyclic, static_cast<int>(r.size()));
  if (k == 2 && sameRelatorsUpToCycle(rels, {kleinRelator()})) return set(Family::Klein, 0);
  if (k % 2 == 0 && sameRelatorsUpToCycle(rels, {orientableRelator(k / 2)}))
    return set(Family::OrientableSurface, k / 2);
  if (sameRelatorsUpToCycle(rels, {nonOrientableRelator(k)}))
    return set(Family::NonOrientableSurface, k);
  return set(Family::Opaque, 0);
}

std::string printWord(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    if (l.gen >= 0 && l.gen < static_cast<int>(names.size()))
      out += names[static_cast<std::size_t>(l.gen)];
    else
      out += "g" + std::to_string(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

Word parseWord(std::string_view text, const std::vector<std::string>& names) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    long exp = 1;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      char* end = nullptr;
      exp = std::strtol(e.c_str(), &end, 10);
      if (e.empty() || *end != '\0') throw Error(ErrorCode::InvalidWord, "bad exponent in '" + tok + "'");
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::InvalidWord, "unknown generator '" + name + "'");
    Word p = power({gen(static_cast<int>(it - names.begin()))}, exp);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

// ---- Klein --------------------------------------------------------------------

KleinNF kleinMul(const KleinNF& x, const KleinNF& y) {
  const long sign = (y.m % 2 == 0) ? 1 : -1;
  return {x.m + y.m, sign * x.n + y.n};
}

KleinNF kleinInv(const KleinNF& x) {
  const long sign = (x.m % 2 == 0) ? 1 : -1;
  return {-x.m, -sign * x.n};
}

KleinNF kleinFold(const Word& w) {
  KleinNF acc;
  for (const auto& l : w) {
    KleinNF e = l.gen == 0 ? KleinNF{1, 0} : KleinNF{0, 1};
    acc = kleinMul(acc, l.inverse ? kleinInv(e) : e);
  }
  return acc;
}

Word nonOrientable2ToKlein(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (l.gen == 0)
      out.push_back(l);
    else if (!l.inverse)
      out.insert(out.end(), {ginv(0), gen(1)});
    else
      out.insert(out.end(), {ginv(1), gen(0)});
  }
  return out;
}

// ---- Dehn ---------------------------------------------------------------------

Word dehnReduce(const Word& w, const std::vector<Word>& relators) {
  std::vector<Word> rots;
  for (const auto& r : relators) {
    for (auto& x : symmetrize(cyclicReduce(r))) rots.push_back(std::move(x));
  }
  Word cur = freeReduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (const auto& rot : rots) {
        std::size_t k = 0;
        while (k < rot.size() && i + k < cur.size() && cur[i + k] == rot[k]) ++k;
        if (2 * k <= rot.size()) continue;
        // rot[0,k) = (rot[k,end))^-1 in the group, and the latter is shorter
        Word rest(rot.begin() + static_cast<long>(k), rot.end());
        Word next(cur.begin(), cur.begin() + static_cast<long>(i));
        Word inv = inverse(rest);
        next.insert(next.end(), inv.begin(), inv.end());
        next.insert(next.end(), cur.begin() + static_cast<long>(i + k), cur.end());
        cur = freeReduce(next);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

// ---- abelianization -------------------------------------------------------------

std::vector<long> abelianize(const GroupPresentation& pres, const Word& w) {
  const auto k = static_cast<std::size_t>(pres.generators);
  std::vector<long> v(k, 0);
  for (const auto& l : w) v[static_cast<std::size_t>(l.gen)] += l.inverse ? -1 : 1;

  std::vector<std::vector<long>> rows;
  for (const auto& r : pres.relators) {
    std::vector<long> row(k, 0);
    for (const auto& l : r) row[static_cast<std::size_t>(l.gen)] += l.inverse ? -1 : 1;
    if (std::any_of(row.begin(), row.end(), [](long x) { return x != 0; })) rows.push_back(row);
  }

  // echelon form by integer row operations
  std::size_t top = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  for (std::size_t c = 0; c < k && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::labs(rows[i][c]) < std::labs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        long q = rows[i][c] / rows[top][c];
        for (std::size_t j = c; j < k; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        if (rows[top][c] < 0)
          for (auto& x : rows[top]) x = -x;
        pivots.emplace_back(top, c);
        ++top;
        break;
      }
    }
  }

  for (auto [ri, c] : pivots) {
    const auto& row = rows[ri];
    long q = v[c] / row[c];
    if (v[c] - q * row[c] < 0) --q;
    for (std::size_t j = c; j < k; ++j) v[j] -= q * row[j];
  }
  return v;
}

// ---- bounded search -------------------------------------------------------------

namespace {

using Key = std::string;

Key toKey(const Word& w) {
  Key k;
  k.reserve(w.size());
  for (const auto& l : w) k.push_back(static_cast<char>(2 * l.gen + (l.inverse ? 1 : 0)));
  return k;
}

void pushReduced(Key& out, char c) {
  if (!out.empty() && out.back() == (c ^ 1))
    out.pop_back();
  else
    out.push_back(c);
}

}  // namespace

BfsResult boundedIdentityBFS(const GroupPresentation& pres, const Word& w, const BfsOptions& opts) {
  checkWord(w, pres.generators);
  BfsResult res;
  Key start = toKey(freeReduce(w));
  res.states = 1;
  if (start.empty()) {
    res.verdict = Truth::yes;
    return res;
  }
  std::vector<Key> rots;
  for (const auto& r : pres.relators)
    for (const auto& x : symmetrize(cyclicReduce(r))) rots.push_back(toKey(x));

  // Inserting a relator rotation followed by free reduction also covers
  // deleting one: insert its inverse right after it.
  std::unordered_set<Key> seen{start};
  std::vector<Key> frontier{start};
  Key t;
  for (int d = 1; d <= opts.depth && !frontier.empty(); ++d) {
    std::vector<Key> next;
    for (const auto& s : frontier) {
      for (std::size_t i = 0; i <= s.size(); ++i) {
        for (const auto& rot : rots) {
          t.assign(s, 0, i);
          for (char c : rot) pushReduced(t, c);
          for (std::size_t j = i; j < s.size(); ++j) pushReduced(t, s[j]);
          if (t.empty()) {
            res.verdict = Truth::yes;
            res.depthReached = d;
            res.states = seen.size();
            return res;
          }
          if (seen.insert(t).second) {
            if (seen.size() >= opts.maxStates) {
              res.capped = true;
              res.depthReached = d;
              res.states = seen.size();
              return res;
            }
            next.push_back(t);
          }
        }
      }
    }
    frontier = std::move(next);
    res.depthReached = d;
  }
  res.states = seen.size();
  return res;
}

// ---- dispatch -------------------------------------------------------------------

std::string_view truthName(Truth t) {
  switch (t) {
    case Truth::no: return "no";
    case Truth::yes: return "yes";
    case Truth::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view methodName(Method m) {
  switch (m) {
    case Method::normalForm: return "normalForm";
    case Method::dehn: return "dehn";
    case Method::boundedSearch: return "boundedSearch";
  }
  return "";
}

namespace {

Truth fromBool(bool b) { return b ? Truth::yes : Truth::no; }

Word powerOf(int g, long n) { return power({gen(g)}, n); }

}  // namespace

SolverVerdict solverNormalize(const GroupPresentation& pres, const Word& w, const BfsOptions& bfs) {
  checkWord(w, pres.generators);
  SolverVerdict v;
  switch (pres.family) {
    case Family::Trivial:
      v.isIdentity = Truth::yes;
      break;
    case Family::FreeGroup:
    case Family::Integers:
      v.canonical = freeReduce(w);
      v.isIdentity = fromBool(v.canonical.empty());
      break;
    case Family::Cyclic: {
      const long p = pres.param;
      long e = exponentSum(w, 0) % p;
      if (e < 0) e += p;
      v.canonical = powerOf(0, e);
      v.isIdentity = fromBool(e == 0);
      break;
    }
    case Family::Klein: {
      KleinNF k = kleinFold(w);
      v.canonical = concat(powerOf(0, k.m), powerOf(1, k.n));
      v.isIdentity = fromBool(k == KleinNF{});
      break;
    }
    case Family::OrientableSurface:
      if (pres.param == 1) {
        long x = exponentSum(w, 0), y = exponentSum(w, 1);
        v.canonical = concat(powerOf(0, x), powerOf(1, y));
        v.isIdentity = fromBool(x == 0 && y == 0);
      } else {
        v.method = Method::dehn;
        v.canonical = dehnReduce(w, pres.relators);
        v.isIdentity = fromBool(v.canonical.empty());
      }
      break;
    case Family::NonOrientableSurface:
      if (pres.param == 1) {
        long e = exponentSum(w, 0) % 2;
        if (e < 0) e += 2;
        v.canonical = powerOf(0, e);
        v.isIdentity = fromBool(e == 0);
      } else if (pres.param == 2) {
        // Klein coordinates; x = a and y = a b give back a word over a, b
        KleinNF k = kleinFold(nonOrientable2ToKlein(w));
        Word y = {gen(0), gen(1)};
        v.canonical = freeReduce(concat(powerOf(0, k.m), power(y, k.n)));
        v.isIdentity = fromBool(k == KleinNF{});
      } else {
        v.method = Method::dehn;
        v.canonical = dehnReduce(w, pres.relators);
        v.isIdentity = fromBool(v.canonical.empty());
      }
      break;
    case Family::DirectProduct: {
      int offset = 0;
      bool anyNo = false, anyUnknown = false;
      for (const auto& f : pres.factors) {
        Word part;
        for (const auto& l : w)
          if (l.gen >= offset && l.gen < offset + f.generators) part.push_back({l.gen - offset, l.inverse});
        SolverVerdict fv = solverNormalize(f, part, bfs);
        Word c = shifted(fv.canonical, offset);
        v.canonical.insert(v.canonical.end(), c.begin(), c.end());
        anyNo = anyNo || fv.isIdentity == Truth::no;
        anyUnknown = anyUnknown || fv.isIdentity == Truth::unknown;
        if (fv.method != Method::normalForm) v.method = fv.method;
        offset += f.generators;
      }
      v.isIdentity = anyNo ? Truth::no : anyUnknown ? Truth::unknown : Truth::yes;
      break;
    }
    case Family::Opaque: {
      v.method = Method::boundedSearch;
      v.canonical = freeReduce(w);
      auto ab = abelianize(pres, w);
      if (std::any_of(ab.begin(), ab.end(), [](long x) { return x != 0; })) {
        v.isIdentity = Truth::no;
        break;
      }
      auto r = boundedIdentityBFS(pres, w, bfs);
      v.isIdentity = r.verdict;
      v.depth = r.depthReached;
      if (r.verdict == Truth::yes) v.canonical.clear();
      break;
    }
  }
  return v;
}

}  // namespace cpath
