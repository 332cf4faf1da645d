#pragma once

// Independent reference models used by the tests. Nothing here calls the
// library's own flattening, reduction or solvers.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cpath/group.hpp"
#include "cpath/path_expr.hpp"

namespace oracle {

using Sym = std::pair<std::string, int>;  // edge name, +1 or -1

inline void flattenInto(const cpath::PathExpr& e, bool flipped, std::vector<Sym>& out) {
  using cpath::NodeKind;
  switch (e.kind()) {
    case NodeKind::refl:
      return;
    case NodeKind::edge: {
      int s = e.orientation() == cpath::Orientation::fwd ? 1 : -1;
      out.emplace_back(e.name(), flipped ? -s : s);
      return;
    }
    case NodeKind::symm:
      flattenInto(e.child(), !flipped, out);
      return;
    case NodeKind::trans:
      if (flipped) {
        flattenInto(e.right(), true, out);
        flattenInto(e.left(), true, out);
      } else {
        flattenInto(e.left(), false, out);
        flattenInto(e.right(), false, out);
      }
      return;
  }
}

inline std::vector<Sym> cancel(const std::vector<Sym>& in) {
  std::vector<Sym> st;
  for (const auto& x : in) {
    if (!st.empty() && st.back().first == x.first && st.back().second == -x.second)
      st.pop_back();
    else
      st.push_back(x);
  }
  return st;
}

// flatten-and-cancel
inline std::vector<Sym> reducedWord(const cpath::PathExpr& e) {
  std::vector<Sym> raw;
  flattenInto(e, false, raw);
  return cancel(raw);
}

inline std::vector<Sym> symsOf(const cpath::LetterSeq& letters) {
  std::vector<Sym> out;
  for (const auto& l : letters) out.emplace_back(l.edge, l.orientation == cpath::Orientation::fwd ? 1 : -1);
  return out;
}

inline long winding(const cpath::PathExpr& e, const std::string& edge) {
  std::vector<Sym> raw;
  flattenInto(e, false, raw);
  long n = 0;
  for (const auto& [name, s] : raw)
    if (name == edge) n += s;
  return n;
}

inline long exponentSum(const cpath::Word& w, int gen) {
  long n = 0;
  for (const auto& l : w)
    if (l.gen == gen) n += l.inverse ? -1 : 1;
  return n;
}

// Klein bottle group acting on the plane: a(x,y) = (x+1,-y), b(x,y) = (x,y+1).
// An element is (x,y) -> (x + tx, s*y + ty).
struct Affine {
  long tx = 0;
  long s = 1;
  long ty = 0;
  friend bool operator==(const Affine&, const Affine&) = default;
};

// f after g
inline Affine compose(const Affine& f, const Affine& g) { return {g.tx + f.tx, f.s * g.s, f.s * g.ty + f.ty}; }

inline Affine kleinGen(const cpath::Letter& l) {
  Affine a = l.gen == 0 ? Affine{1, -1, 0} : Affine{0, 1, 1};
  if (!l.inverse) return a;
  // inverse of x -> x + tx, y -> s y + ty
  return {-a.tx, a.s, -a.s * a.ty};
}

// Word read left to right as a product, acting on the left: w = l1 l2 ... means l1 ∘ l2 ∘ ...
inline Affine kleinEval(const cpath::Word& w) {
  Affine acc;
  for (const auto& l : w) acc = compose(acc, kleinGen(l));
  return acc;
}

// Infinite dihedral group Z/2 * Z/2 acting on Z: a(x) = -x, b(x) = 1 - x.
// An element is x -> s*x + t.
struct Dihedral {
  long s = 1;
  long t = 0;
  friend bool operator==(const Dihedral&, const Dihedral&) = default;
};

inline Dihedral dihedralCompose(const Dihedral& f, const Dihedral& g) { return {f.s * g.s, f.s * g.t + f.t}; }

// Every word of length <= maxLen over `gens` generators, both signs.
inline void allWords(int gens, int maxLen, const std::function<void(const cpath::Word&)>& f) {
  cpath::Word w;
  std::function<void()> rec = [&] {
    f(w);
    if (static_cast<int>(w.size()) == maxLen) return;
    for (int g = 0; g < gens; ++g)
      for (bool inv : {false, true}) {
        w.push_back({g, inv});
        rec();
        w.pop_back();
      }
  };
  rec();
}

// Only freely reduced words.
inline void reducedWords(int gens, int maxLen, const std::function<void(const cpath::Word&)>& f) {
  cpath::Word w;
  std::function<void()> rec = [&] {
    f(w);
    if (static_cast<int>(w.size()) == maxLen) return;
    for (int g = 0; g < gens; ++g)
      for (bool inv : {false, true}) {
        if (!w.empty() && w.back().gen == g && w.back().inverse != inv) continue;
        w.push_back({g, inv});
        rec();
        w.pop_back();
      }
  };
  rec();
}

}  // namespace oracle
