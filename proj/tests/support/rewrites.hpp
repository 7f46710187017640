#pragma once

// Reidemeister rewrites on PD codes, used to check invariance of the
// polynomial invariants. Both produce honest diagrams of the same knot.

#include <algorithm>
#include <vector>

#include "untwist/knots.hpp"

namespace rewrites {

using untwist::PDCode;
using untwist::PdCrossing;

inline int max_label(const PDCode& pd) {
  int m = 0;
  for (const PdCrossing& x : pd.crossings())
    for (int a : x.arc) m = std::max(m, a);
  return m;
}

// Relabel the single incoming occurrence of `arc` to `fresh`; the strand
// that used to terminate as `arc` now terminates as `fresh`.
inline void redirect_incoming(std::vector<PdCrossing>& xs, int arc, int fresh) {
  for (PdCrossing& x : xs)
    for (int role : {0, 2}) {
      int slot = untwist::detail::slot_of_role(x, role);
      if (x.arc[static_cast<std::size_t>(slot)] == arc) {
        x.arc[static_cast<std::size_t>(slot)] = fresh;
        return;
      }
    }
  throw std::logic_error("redirect_incoming: arc not found");
}

// R1: insert a kink of the given sign on an arc. The strand runs
// arc -> (kink) -> loop -> (kink) -> continuation.
inline PDCode insert_kink(const PDCode& pd, int arc, int sign) {
  int y = max_label(pd) + 1, z = max_label(pd) + 2;
  if (pd.size() == 0) {
    // kink on the bare unknot: the loop closes onto itself
    PdCrossing x = sign > 0 ? PdCrossing{{1, 1, 2, 2}, 1} : PdCrossing{{1, 2, 2, 1}, -1};
    return PDCode({x});
  }
  std::vector<PdCrossing> xs = pd.crossings();
  redirect_incoming(xs, arc, z);
  if (sign > 0)
    xs.push_back(PdCrossing{{arc, z, y, y}, 1});
  else
    xs.push_back(PdCrossing{{arc, y, y, z}, -1});
  return PDCode(std::move(xs));
}

// R2: poke arc `x` over arc `w` (distinct arcs). Strand 1 becomes
// x -> c1 -> y -> c2 -> z, strand 2 becomes w -> c1 -> u -> c2 -> v; the
// two new crossings carry opposite signs.
inline PDCode poke(const PDCode& pd, int x, int w) {
  if (x == w) throw std::logic_error("poke: arcs must be distinct");
  int y = max_label(pd) + 1, u = max_label(pd) + 2, z = max_label(pd) + 3,
      v = max_label(pd) + 4;
  std::vector<PdCrossing> xs = pd.crossings();
  redirect_incoming(xs, x, z);
  redirect_incoming(xs, w, v);
  xs.push_back(PdCrossing{{w, x, u, y}, -1});
  xs.push_back(PdCrossing{{u, z, v, y}, 1});
  return PDCode(std::move(xs));
}

// k kinks stacked on the unknot with the given signs
inline PDCode kinked_unknot(const std::vector<int>& signs) {
  PDCode pd;
  for (int s : signs) pd = insert_kink(pd, 1, s);
  return pd;
}

}  // namespace rewrites
