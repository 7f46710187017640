#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "untwist/errors.hpp"
#include "untwist/intmat.hpp"

namespace untwist {

// Sparse one-variable integer Laurent polynomial; no zero coefficients are
// ever stored, so equality is exact map equality.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::string var = "t") : var_(std::move(var)) {}

  static LaurentPoly constant(std::string var, Int c) {
    LaurentPoly p(std::move(var));
    p.add_term(0, std::move(c));
    return p;
  }
  static LaurentPoly one(std::string var) { return constant(std::move(var), 1); }
  static LaurentPoly monomial(std::string var, long exp, Int c) {
    LaurentPoly p(std::move(var));
    p.add_term(exp, std::move(c));
    return p;
  }

  const std::string& var() const { return var_; }
  const std::map<long, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(long exp, Int c) {
    if (c == 0) return;
    Int& slot = terms_[exp];
    slot += c;
    if (slot == 0) terms_.erase(exp);
  }

  long min_exp() const { return terms_.begin()->first; }
  long max_exp() const { return terms_.rbegin()->first; }

  Int at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  LaurentPoly operator-() const {
    LaurentPoly p(var_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
  }

  // multiply by var^de
  LaurentPoly shifted(long de) const {
    LaurentPoly p(var_);
    for (const auto& [e, c] : terms_) p.terms_[e + de] = c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_var(b);
    LaurentPoly p(a.var_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }

  bool operator==(const LaurentPoly&) const = default;

  // substitute var -> var^-1
  LaurentPoly mirrored() const {
    LaurentPoly p(var_);
    for (const auto& [e, c] : terms_) p.terms_[-e] = c;
    return p;
  }

  // Canonical text form: terms in increasing exponent, explicit '*' and
  // '^', e.g. "1 - 3*t + t^2" or "-t^-4 + t^-3 + t^-1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = c < 0;
      Int mag = neg ? Int(-c) : c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (e == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << '*';
        os << var_;
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }

 private:
  void check_var(const LaurentPoly& o) const {
    if (var_ != o.var_)
      throw std::invalid_argument("LaurentPoly: mixed variables " + var_ +
                                  " and " + o.var_);
  }

  std::string var_;
  std::map<long, Int> terms_;
};

// One planar-diagram crossing: the four incident arc labels counter-
// clockwise from the incoming under-strand, plus the crossing sign.
// Under-strand runs arc[0] -> arc[2]; the over-strand runs arc[3] ->
// arc[1] at a positive crossing and arc[1] -> arc[3] at a negative one.
struct PdCrossing {
  std::array<int, 4> arc;
  int sign;
  bool operator==(const PdCrossing&) const = default;
};

namespace detail {

// role: 0 under-in, 1 under-out, 2 over-in, 3 over-out
inline int slot_of_role(const PdCrossing& x, int role) {
  switch (role) {
    case 0: return 0;
    case 1: return 2;
    case 2: return x.sign > 0 ? 3 : 1;
    default: return x.sign > 0 ? 1 : 3;
  }
}

struct ArcEnd {
  std::size_t crossing = 0;
  int role = 0;  // 0 under-in, 2 over-in (for in-map); 1/3 for out-map
};

}  // namespace detail

// Planar diagram of a knot or link. The empty code is the 0-crossing
// unknot. Construction checks the invariants: every arc label occurs
// exactly twice, the diagram is connected, and the label occurrences are
// orientation-consistent (once incoming, once outgoing).
class PDCode {
 public:
  PDCode() = default;

  explicit PDCode(std::vector<PdCrossing> xs) : xs_(std::move(xs)) {
    validate();
  }

  const std::vector<PdCrossing>& crossings() const { return xs_; }
  std::size_t size() const { return xs_.size(); }
  bool operator==(const PDCode&) const = default;

  long writhe() const {
    long w = 0;
    for (const PdCrossing& x : xs_) w += x.sign;
    return w;
  }

  // arc -> (crossing, role) maps for the oriented traversal
  std::map<int, detail::ArcEnd> incoming_ends() const {
    std::map<int, detail::ArcEnd> m;
    for (std::size_t n = 0; n < xs_.size(); ++n)
      for (int role : {0, 2})
        m[xs_[n].arc[static_cast<std::size_t>(detail::slot_of_role(xs_[n], role))]] = {n, role};
    return m;
  }

 private:
  void validate() const {
    std::map<int, int> count;
    for (const PdCrossing& x : xs_) {
      if (x.sign != 1 && x.sign != -1)
        throw std::invalid_argument("PDCode: crossing sign must be +1 or -1");
      for (int a : x.arc) {
        if (a < 1) throw std::invalid_argument("PDCode: arc labels are positive");
        ++count[a];
      }
    }
    for (const auto& [a, k] : count)
      if (k != 2)
        throw std::invalid_argument("PDCode: arc " + std::to_string(a) +
                                    " appears " + std::to_string(k) +
                                    " times, expected 2");
    // orientation consistency
    std::map<int, int> ins, outs;
    for (const PdCrossing& x : xs_)
      for (int role = 0; role < 4; ++role) {
        int a = x.arc[static_cast<std::size_t>(detail::slot_of_role(x, role))];
        ++(role == 0 || role == 2 ? ins : outs)[a];
      }
    for (const auto& [a, k] : count) {
      if (ins[a] != 1 || outs[a] != 1)
        throw std::invalid_argument(
            "PDCode: arc " + std::to_string(a) +
            " is not traversed once in and once out (check signs)");
    }
    // connectivity over crossings sharing arcs
    if (xs_.size() > 1) {
      std::vector<std::size_t> parent(xs_.size());
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      std::map<int, std::size_t> seen;
      for (std::size_t n = 0; n < xs_.size(); ++n)
        for (int a : xs_[n].arc) {
          auto [it, fresh] = seen.emplace(a, n);
          if (!fresh) parent[find(it->second)] = find(n);
        }
      for (std::size_t n = 0; n < xs_.size(); ++n)
        if (find(n) != find(0))
          throw std::invalid_argument("PDCode: diagram is not connected");
    }
  }

  std::vector<PdCrossing> xs_;
};

// Number of link components (1 for the empty unknot code).
inline std::size_t component_count(const PDCode& pd) {
  if (pd.size() == 0) return 1;
  auto in = pd.incoming_ends();
  std::set<int> visited;
  std::size_t comps = 0;
  for (const auto& [start, end0] : in) {
    if (visited.count(start)) continue;
    ++comps;
    int arc = start;
    do {
      visited.insert(arc);
      const detail::ArcEnd& e = in.at(arc);
      const PdCrossing& x = pd.crossings()[e.crossing];
      int out_role = e.role == 0 ? 1 : 3;
      arc = x.arc[static_cast<std::size_t>(detail::slot_of_role(x, out_role))];
    } while (arc != start);
  }
  return comps;
}

// --- pretzel diagrams -------------------------------------------------------

// Standard three-band pretzel diagram with p, q, r half-twists; all
// parameters must be odd so the result is a knot. Crossing count is
// |p| + |q| + |r| and each band's crossing signs follow the parameter's
// sign.
inline PDCode pretzel_pd(long p, long q, long r) {
  const std::array<long, 3> params{p, q, r};
  for (long v : params)
    if (v % 2 == 0)
      throw NotAKnot("pretzel parameter " + std::to_string(v) +
                     " is even; that describes a link");

  enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };
  struct Slot {
    std::size_t band, row;
    int corner;
    bool operator<(const Slot& o) const {
      return std::tie(band, row, corner) < std::tie(o.band, o.row, o.corner);
    }
    bool operator==(const Slot&) const = default;
  };

  std::array<std::size_t, 3> m{static_cast<std::size_t>(p < 0 ? -p : p),
                               static_cast<std::size_t>(q < 0 ? -q : q),
                               static_cast<std::size_t>(r < 0 ? -r : r)};

  // wire pairing between crossing slots
  std::map<Slot, Slot> wire;
  auto connect = [&](Slot s1, Slot s2) {
    wire[s1] = s2;
    wire[s2] = s1;
  };
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t x = 0; x + 1 < m[k]; ++x) {
      connect({k, x, SW}, {k, x + 1, NW});
      connect({k, x, SE}, {k, x + 1, NE});
    }
  auto top_left = [&](std::size_t k) { return Slot{k, 0, NW}; };
  auto top_right = [&](std::size_t k) { return Slot{k, 0, NE}; };
  auto bot_left = [&](std::size_t k) { return Slot{k, m[k] - 1, SW}; };
  auto bot_right = [&](std::size_t k) { return Slot{k, m[k] - 1, SE}; };
  connect(top_right(0), top_left(1));
  connect(top_right(1), top_left(2));
  connect(top_left(0), top_right(2));  // outer top arc
  connect(bot_right(0), bot_left(1));
  connect(bot_right(1), bot_left(2));
  connect(bot_left(0), bot_right(2));  // outer bottom arc

  // walk the knot, labelling arcs 1..2n in traversal order
  const std::size_t n = m[0] + m[1] + m[2];
  std::map<Slot, int> label;
  std::map<Slot, bool> entered;  // slot was used as an entry
  auto opposite = [](int c) {
    switch (c) {
      case NW: return static_cast<int>(SE);
      case SE: return static_cast<int>(NW);
      case NE: return static_cast<int>(SW);
      default: return static_cast<int>(NE);
    }
  };

  Slot entry = top_left(0);
  for (std::size_t step = 1; step <= 2 * n; ++step) {
    label[entry] = step == 1 ? static_cast<int>(2 * n) : static_cast<int>(step - 1);
    entered[entry] = true;
    Slot exit{entry.band, entry.row, opposite(entry.corner)};
    label[exit] = static_cast<int>(step);
    entry = wire.at(exit);
    if (entry == top_left(0) && step != 2 * n)
      throw InternalInvariantViolation("pretzel walk closed early");
  }
  if (entry != top_left(0))
    throw InternalInvariantViolation("pretzel walk did not close");

  // emit crossings; a positive parameter puts the NE-SW diagonal on top
  static const std::array<int, 4> ccw{NW, SW, SE, NE};
  auto direction = [](int corner) -> std::array<int, 2> {
    switch (corner) {
      case NW: return {1, -1};
      case NE: return {-1, -1};
      case SW: return {1, 1};
      default: return {-1, 1};
    }
  };

  std::vector<PdCrossing> xs;
  for (std::size_t k = 0; k < 3; ++k) {
    bool ne_sw_over = params[k] > 0;
    for (std::size_t x = 0; x < m[k]; ++x) {
      int under_entry = -1, over_entry = -1;
      for (int c : {NW, SE}) {
        if (entered[{k, x, c}]) (ne_sw_over ? under_entry : over_entry) = c;
      }
      for (int c : {NE, SW}) {
        if (entered[{k, x, c}]) (ne_sw_over ? over_entry : under_entry) = c;
      }
      PdCrossing pc{};
      std::size_t pos = 0;
      while (ccw[pos] != under_entry) ++pos;
      for (std::size_t t = 0; t < 4; ++t)
        pc.arc[t] = label.at({k, x, ccw[(pos + t) % 4]});
      auto od = direction(over_entry), ud = direction(under_entry);
      pc.sign = od[0] * ud[1] - od[1] * ud[0] > 0 ? 1 : -1;
      xs.push_back(pc);
    }
  }
  return PDCode(std::move(xs));
}

// --- Kauffman bracket and Jones ---------------------------------------------

// 2^n states is cheap up to here and hopeless far beyond it.
inline constexpr std::size_t kMaxStateSumCrossings = 20;

// Bracket state sum in the variable A: over all smoothings,
// A^(a-smoothings minus b-smoothings) * delta^(loops-1) with
// delta = -A^2 - A^-2. The A-smoothing joins arcs (0,1) and (2,3) of a
// crossing, the B-smoothing joins (0,3) and (1,2).
inline LaurentPoly kauffman_bracket(const PDCode& pd) {
  const std::size_t n = pd.size();
  if (n > kMaxStateSumCrossings)
    throw TooLarge("kauffman_bracket: " + std::to_string(n) +
                   " crossings exceeds the state-sum budget of " +
                   std::to_string(kMaxStateSumCrossings));
  if (n == 0) return LaurentPoly::one("A");

  std::map<int, std::size_t> arc_index;
  for (const PdCrossing& x : pd.crossings())
    for (int a : x.arc) arc_index.emplace(a, arc_index.size());
  const std::size_t arcs = arc_index.size();

  LaurentPoly delta("A");
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::one("A")};
  for (std::size_t k = 0; k < n; ++k) delta_pow.push_back(delta_pow.back() * delta);

  std::vector<std::size_t> parent(arcs);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  LaurentPoly out("A");
  for (std::size_t state = 0; state < (std::size_t{1} << n); ++state) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    long sigma = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& arc = pd.crossings()[k].arc;
      bool a_smooth = (state >> k & 1) == 0;
      sigma += a_smooth ? 1 : -1;
      std::size_t p0 = arc_index[arc[0]], p1 = arc_index[arc[1]],
                  p2 = arc_index[arc[2]], p3 = arc_index[arc[3]];
      if (a_smooth) {
        parent[find(p0)] = find(p1);
        parent[find(p2)] = find(p3);
      } else {
        parent[find(p0)] = find(p3);
        parent[find(p1)] = find(p2);
      }
    }
    std::size_t loops = 0;
    for (std::size_t v = 0; v < arcs; ++v)
      if (find(v) == v) ++loops;
    for (const auto& [e, c] : delta_pow[loops - 1].terms())
      out.add_term(e + sigma, c);
  }
  return out;
}

// Writhe-normalized bracket with A = t^(-1/4); integral in t for knots.
inline LaurentPoly jones(const PDCode& pd) {
  if (component_count(pd) != 1)
    throw NotAKnot("jones: diagram has more than one component");
  LaurentPoly bracket = kauffman_bracket(pd);
  const long w = pd.writhe();
  LaurentPoly out("t");
  for (const auto& [e, c] : bracket.terms()) {
    long e4 = e - 3 * w;  // exponent after multiplying by (-A)^(-3w)
    if (e4 % 4 != 0)
      throw InternalInvariantViolation(
          "jones: non-integral exponent after substitution");
    out.add_term(-e4 / 4, w % 2 ? Int(-c) : c);
  }
  return out;
}

// --- Alexander-Conway via the skein relation --------------------------------

// Lowest exponent 0 and positive leading coefficient.
inline LaurentPoly alexander_canonical_form(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out = p.shifted(-p.min_exp());
  if (out.terms().rbegin()->second < 0) return -out;
  return out;
}

namespace detail {

struct SkeinDiagram {
  std::vector<PdCrossing> xs;
  std::size_t free_circles = 0;  // crossing-free unknot components
};

// Deterministic relabelling (traversal order, components by smallest
// original label) followed by sorting; used as the memo key.
inline std::string skein_key(const SkeinDiagram& d) {
  std::map<int, ArcEnd> in;
  for (std::size_t n = 0; n < d.xs.size(); ++n)
    for (int role : {0, 2})
      in[d.xs[n].arc[static_cast<std::size_t>(slot_of_role(d.xs[n], role))]] = {n, role};
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& [start, e0] : in) {
    if (relabel.count(start)) continue;
    int arc = start;
    do {
      relabel[arc] = next++;
      const ArcEnd& e = in.at(arc);
      const PdCrossing& x = d.xs[e.crossing];
      arc = x.arc[static_cast<std::size_t>(slot_of_role(x, e.role == 0 ? 1 : 3))];
    } while (arc != start);
  }
  std::vector<std::array<int, 5>> rows;
  for (const PdCrossing& x : d.xs)
    rows.push_back({relabel[x.arc[0]], relabel[x.arc[1]], relabel[x.arc[2]],
                    relabel[x.arc[3]], x.sign});
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << d.free_circles << ';';
  for (const auto& r : rows)
    os << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ',' << r[4] << ';';
  return os.str();
}

// Walk all components (ordered by smallest arc label); returns the first
// crossing reached on its under-strand before being seen from above, or
// npos when the diagram is descending. Also counts components.
struct WalkReport {
  std::size_t first_ascending = static_cast<std::size_t>(-1);
  std::size_t components = 0;
  bool descending() const { return first_ascending == static_cast<std::size_t>(-1); }
};

inline WalkReport walk(const SkeinDiagram& d) {
  std::map<int, ArcEnd> in;
  for (std::size_t n = 0; n < d.xs.size(); ++n)
    for (int role : {0, 2})
      in[d.xs[n].arc[static_cast<std::size_t>(slot_of_role(d.xs[n], role))]] = {n, role};
  WalkReport rep;
  std::set<int> visited;
  std::vector<bool> seen(d.xs.size(), false);
  for (const auto& [start, e0] : in) {
    if (visited.count(start)) continue;
    ++rep.components;
    int arc = start;
    do {
      visited.insert(arc);
      const ArcEnd& e = in.at(arc);
      if (!seen[e.crossing]) {
        seen[e.crossing] = true;
        if (e.role == 0 && rep.first_ascending == static_cast<std::size_t>(-1))
          rep.first_ascending = e.crossing;
      }
      const PdCrossing& x = d.xs[e.crossing];
      arc = x.arc[static_cast<std::size_t>(slot_of_role(x, e.role == 0 ? 1 : 3))];
    } while (arc != start);
  }
  rep.components += d.free_circles;
  return rep;
}

// Exchange over- and under-strand at crossing k; orientations persist,
// so the arcs rotate one slot and the sign flips.
inline SkeinDiagram switched(const SkeinDiagram& d, std::size_t k) {
  SkeinDiagram out = d;
  PdCrossing& x = out.xs[k];
  if (x.sign > 0)
    x = PdCrossing{{x.arc[3], x.arc[0], x.arc[1], x.arc[2]}, -1};
  else
    x = PdCrossing{{x.arc[1], x.arc[2], x.arc[3], x.arc[0]}, 1};
  return out;
}

// Oriented smoothing of crossing k: the incoming under-strand continues
// into the over-strand's outgoing arc and vice versa. May create
// crossing-free circles.
inline SkeinDiagram smoothed(const SkeinDiagram& d, std::size_t k) {
  const PdCrossing x = d.xs[k];
  SkeinDiagram out;
  out.free_circles = d.free_circles;
  out.xs = d.xs;
  out.xs.erase(out.xs.begin() + static_cast<std::ptrdiff_t>(k));

  // join (under-in, over-out) and (over-in, under-out)
  std::array<std::pair<int, int>, 2> joins;
  if (x.sign > 0)
    joins = {{{x.arc[0], x.arc[1]}, {x.arc[3], x.arc[2]}}};
  else
    joins = {{{x.arc[0], x.arc[3]}, {x.arc[1], x.arc[2]}}};

  std::map<int, int> root;
  auto find = [&](int a) {
    while (root.count(a) && root[a] != a) a = root[a];
    return a;
  };
  for (auto [s, t] : joins) {
    root.emplace(s, s);
    root.emplace(t, t);
    root[find(s)] = find(t);
  }
  // relabel merged arcs by their class representative
  for (PdCrossing& c : out.xs)
    for (int& a : c.arc)
      if (root.count(a)) a = find(a);
  std::set<int> reps;
  for (int a : {x.arc[0], x.arc[1], x.arc[2], x.arc[3]}) reps.insert(find(a));
  for (int rep : reps) {
    bool present = false;
    for (const PdCrossing& c : out.xs)
      for (int a : c.arc)
        if (a == rep) present = true;
    if (!present) ++out.free_circles;
  }
  return out;
}

inline LaurentPoly conway(const SkeinDiagram& d,
                          std::map<std::string, LaurentPoly>& memo) {
  if (d.free_circles > 0)
    return d.xs.empty() && d.free_circles == 1 ? LaurentPoly::one("z")
                                               : LaurentPoly("z");
  if (d.xs.empty()) return LaurentPoly("z");  // unreachable for real input

  std::string key = skein_key(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  WalkReport rep = walk(d);
  LaurentPoly result("z");
  if (rep.descending()) {
    // a descending diagram is an unlink: 1 for a knot, 0 when split
    if (rep.components == 1) result = LaurentPoly::one("z");
  } else {
    std::size_t k = rep.first_ascending;
    LaurentPoly sw = conway(switched(d, k), memo);
    LaurentPoly sm = conway(smoothed(d, k), memo);
    LaurentPoly z = LaurentPoly::monomial("z", 1, 1);
    // nabla(L+) - nabla(L-) = z * nabla(L0)
    result = d.xs[k].sign > 0 ? sw + z * sm : sw - z * sm;
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

// Conway polynomial of a knot diagram, in z.
inline LaurentPoly conway_polynomial(const PDCode& pd) {
  if (pd.size() > kMaxStateSumCrossings)
    throw TooLarge("alexander: " + std::to_string(pd.size()) +
                   " crossings exceeds the skein budget");
  if (component_count(pd) != 1)
    throw NotAKnot("alexander: diagram has more than one component");
  detail::SkeinDiagram d{pd.crossings(), pd.size() == 0 ? 1u : 0u};
  std::map<std::string, LaurentPoly> memo;
  return detail::conway(d, memo);
}

// Alexander polynomial: Conway with z = t^(1/2) - t^(-1/2), canonicalized
// to lowest exponent 0 and positive leading coefficient.
inline LaurentPoly alexander(const PDCode& pd) {
  LaurentPoly nabla = conway_polynomial(pd);
  // substitute z in the half-power variable u = t^(1/2)
  LaurentPoly u_poly("u");
  LaurentPoly z_sub("u");
  z_sub.add_term(1, 1);
  z_sub.add_term(-1, -1);
  LaurentPoly z_pow = LaurentPoly::one("u");
  long done = 0;
  for (const auto& [e, c] : nabla.terms()) {
    while (done < e) {
      z_pow = z_pow * z_sub;
      ++done;
    }
    for (const auto& [eu, cu] : z_pow.terms()) u_poly.add_term(eu, c * cu);
  }
  LaurentPoly t_poly("t");
  for (const auto& [e, c] : u_poly.terms()) {
    if (e % 2 != 0)
      throw InternalInvariantViolation("alexander: half-integral exponent for a knot");
    t_poly.add_term(e / 2, c);
  }
  return alexander_canonical_form(t_poly);
}

// --- PD text format ----------------------------------------------------------
// One crossing per line: "X a b c d +" or "X a b c d -".
// Blank lines and '#' comments ignored; the empty file is the unknot.

inline std::string render_pd(const PDCode& pd) {
  std::ostringstream os;
  for (const PdCrossing& x : pd.crossings())
    os << "X " << x.arc[0] << ' ' << x.arc[1] << ' ' << x.arc[2] << ' '
       << x.arc[3] << ' ' << (x.sign > 0 ? '+' : '-') << '\n';
  return os.str();
}

inline PDCode parse_pd(std::string_view text) {
  std::vector<PdCrossing> xs;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    if (std::size_t h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head != "X") throw ParseError(lineno, "expected 'X', got '" + head + "'");
    PdCrossing x{};
    for (int t = 0; t < 4; ++t) {
      long a;
      if (!(ls >> a) || a < 1)
        throw ParseError(lineno, "expected four positive arc labels");
      x.arc[static_cast<std::size_t>(t)] = static_cast<int>(a);
    }
    std::string sgn;
    if (!(ls >> sgn) || (sgn != "+" && sgn != "-"))
      throw ParseError(lineno, "expected crossing sign + or -");
    x.sign = sgn == "+" ? 1 : -1;
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens after crossing");
    xs.push_back(x);
  }
  try {
    return PDCode(std::move(xs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace untwist
