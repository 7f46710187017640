#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "untwist/diagram.hpp"

namespace untwist {

enum class MoveKind { OrientReverse, Slide, Reframe, TwistPair, TwistMeridian };

// One move of the diagram calculus. Indices are 1-based; c is the slide
// coefficient s or the twist/reframe exponent k (always nonzero where
// present, unused for OrientReverse). A |c| > 1 move is the |c|-fold
// composite of the unit move.
struct Move {
  MoveKind kind = MoveKind::OrientReverse;
  std::size_t i = 0, j = 0;  // j only for Slide and TwistPair
  Int c;

  static Move orient_reverse(std::size_t i) {
    check_index(i);
    return Move{MoveKind::OrientReverse, i, 0, 0};
  }
  static Move slide(std::size_t i, std::size_t j, Int s) {
    check_pair(i, j, s);
    return Move{MoveKind::Slide, i, j, std::move(s)};
  }
  static Move reframe(std::size_t i, Int k) {
    check_index(i);
    check_coeff(k);
    return Move{MoveKind::Reframe, i, 0, std::move(k)};
  }
  static Move twist_pair(std::size_t i, std::size_t j, Int k) {
    check_pair(i, j, k);
    return Move{MoveKind::TwistPair, i, j, std::move(k)};
  }
  static Move twist_meridian(std::size_t i, Int k) {
    check_index(i);
    check_coeff(k);
    return Move{MoveKind::TwistMeridian, i, 0, std::move(k)};
  }

  // Every move kind inverts within the calculus.
  Move inverse() const {
    Move m = *this;
    if (kind != MoveKind::OrientReverse) m.c = -m.c;
    return m;
  }

  std::size_t max_index() const { return j > i ? j : i; }
  bool is_twist() const {
    return kind == MoveKind::TwistPair || kind == MoveKind::TwistMeridian;
  }

  bool operator==(const Move&) const = default;

 private:
  static void check_index(std::size_t i) {
    if (i < 1) throw IndexError("move: indices are 1-based");
  }
  static void check_pair(std::size_t i, std::size_t j, const Int& c) {
    check_index(i);
    check_index(j);
    if (i == j) throw IndexError("move: the two indices must be distinct");
    check_coeff(c);
  }
  static void check_coeff(const Int& c) {
    if (c == 0) throw std::invalid_argument("move: zero coefficient");
  }
};

// Apply one move, returning a fresh datum. Update rules, with
// E(i,j,s) = I + s*e_ij:
//   OrientReverse(i):  negate row i of A and of B
//   Slide(i,j,s):      A -> A*E(i,j,-s),  B -> B*E(i,j,s)^T,
//                      F -> E(i,j,s)*F*E(i,j,s)^T      (so Lk -> Lk*E^T)
//   Reframe(i,k):      F_ii += k,  B -= k*col_i(A)*e_i^T (Lk unchanged)
//   TwistPair(i,j,k):  B += k*(col_i(A)+col_j(A))*(e_i+e_j)^T
//   TwistMeridian(i,k):B += k*col_i(A)*e_i^T
// The twists never touch A or F.
inline HeegaardDatum apply(const HeegaardDatum& d, const Move& m) {
  require_valid(d);
  const std::size_t g = d.genus();
  if (m.i < 1 || m.i > g || ((m.kind == MoveKind::Slide ||
                              m.kind == MoveKind::TwistPair) &&
                             (m.j < 1 || m.j > g)))
    throw IndexError("apply: move index out of range for genus " +
                     std::to_string(g));
  HeegaardDatum out = d;
  const std::size_t i = m.i - 1, j = m.j == 0 ? 0 : m.j - 1;
  switch (m.kind) {
    case MoveKind::OrientReverse:
      out.a.negate_row(i);
      out.b.negate_row(i);
      break;
    case MoveKind::Slide:
      out.a.add_col_multiple(j, i, -m.c);      // A * E(i,j,-s)
      out.b.add_col_multiple(i, j, m.c);       // B * E(i,j,s)^T
      out.f.add_row_multiple(i, j, m.c);       // E(i,j,s) * F * E(i,j,s)^T
      out.f.add_col_multiple(i, j, m.c);
      break;
    case MoveKind::Reframe:
      out.f(i, i) += m.c;
      for (std::size_t r = 0; r < g; ++r) out.b(r, i) -= m.c * d.a(r, i);
      break;
    case MoveKind::TwistPair:
      for (std::size_t r = 0; r < g; ++r) {
        Int u = d.a(r, i) + d.a(r, j);
        if (u == 0) continue;
        out.b(r, i) += m.c * u;
        out.b(r, j) += m.c * u;
      }
      break;
    case MoveKind::TwistMeridian:
      for (std::size_t r = 0; r < g; ++r) out.b(r, i) += m.c * d.a(r, i);
      break;
  }
  return out;
}

// An ordered move sequence pinned to a genus; construction rejects any
// move whose indices exceed it.
struct MoveScript {
  std::size_t genus = 0;
  std::vector<Move> moves;

  MoveScript() = default;
  MoveScript(std::size_t genus_, std::vector<Move> moves_)
      : genus(genus_), moves(std::move(moves_)) {
    for (std::size_t n = 0; n < moves.size(); ++n)
      if (moves[n].max_index() > genus)
        throw IndexError("script move " + std::to_string(n + 1) +
                         ": index out of range for genus " +
                         std::to_string(genus));
  }

  bool operator==(const MoveScript&) const = default;
};

// Left-to-right fold of apply; failures carry the 1-based move position.
inline HeegaardDatum apply_script(const HeegaardDatum& d, const MoveScript& s) {
  if (s.genus != d.genus())
    throw GenusMismatch("apply_script: script genus " + std::to_string(s.genus) +
                        " vs datum genus " + std::to_string(d.genus()));
  HeegaardDatum cur = d;
  for (std::size_t n = 0; n < s.moves.size(); ++n) {
    try {
      cur = apply(cur, s.moves[n]);
    } catch (const IndexError& e) {
      throw IndexError("move " + std::to_string(n + 1) + ": " + e.what());
    } catch (const InvalidDatum& e) {
      throw InvalidDatum("move " + std::to_string(n + 1) + ": " + e.what());
    }
  }
  return cur;
}

// Reversed sequence of inverted moves; undoes the script exactly.
inline MoveScript inverse(const MoveScript& s) {
  MoveScript inv;
  inv.genus = s.genus;
  inv.moves.reserve(s.moves.size());
  for (auto it = s.moves.rbegin(); it != s.moves.rend(); ++it)
    inv.moves.push_back(it->inverse());
  return inv;
}

// --- script text format ---------------------------------------------------
// One move per line:
//   flip i | slide i j s | reframe i k | twistpair i j k | twistm i k
// Decimal integers, 1-based indices; blank lines and '#' comments ignored.

inline std::string render_move(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::OrientReverse: os << "flip " << m.i; break;
    case MoveKind::Slide: os << "slide " << m.i << ' ' << m.j << ' ' << m.c; break;
    case MoveKind::Reframe: os << "reframe " << m.i << ' ' << m.c; break;
    case MoveKind::TwistPair:
      os << "twistpair " << m.i << ' ' << m.j << ' ' << m.c;
      break;
    case MoveKind::TwistMeridian: os << "twistm " << m.i << ' ' << m.c; break;
  }
  return os.str();
}

inline std::string render_script(const MoveScript& s) {
  std::string out;
  for (const Move& m : s.moves) {
    out += render_move(m);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

inline Int parse_int(const std::string& tok, int line) {
  try {
    return Int(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
}

inline std::size_t parse_index(const std::string& tok, int line) {
  Int v = parse_int(tok, line);
  if (v < 1 || v > 1'000'000) throw ParseError(line, "index out of range: " + tok);
  return static_cast<std::size_t>(v);
}

// strip comment, then trim
inline std::string strip_line(std::string line) {
  if (std::size_t h = line.find('#'); h != std::string::npos) line.erase(h);
  std::size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

inline Move parse_move_line(const std::string& line, int lineno) {
  std::vector<std::string> t = split_tokens(line);
  try {
    if (t[0] == "flip" && t.size() == 2)
      return Move::orient_reverse(parse_index(t[1], lineno));
    if (t[0] == "slide" && t.size() == 4)
      return Move::slide(parse_index(t[1], lineno), parse_index(t[2], lineno),
                         parse_int(t[3], lineno));
    if (t[0] == "reframe" && t.size() == 3)
      return Move::reframe(parse_index(t[1], lineno), parse_int(t[2], lineno));
    if (t[0] == "twistpair" && t.size() == 4)
      return Move::twist_pair(parse_index(t[1], lineno),
                              parse_index(t[2], lineno),
                              parse_int(t[3], lineno));
    if (t[0] == "twistm" && t.size() == 3)
      return Move::twist_meridian(parse_index(t[1], lineno),
                                  parse_int(t[2], lineno));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(lineno, e.what());
  }
  throw ParseError(lineno, "unrecognized move: '" + line + "'");
}

}  // namespace detail

inline MoveScript parse_script(std::string_view text, std::size_t genus) {
  std::vector<Move> moves;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = detail::strip_line(raw);
    if (line.empty()) continue;
    Move m = detail::parse_move_line(line, lineno);
    if (m.max_index() > genus)
      throw ParseError(lineno, "move index out of range for genus " +
                                   std::to_string(genus));
    moves.push_back(std::move(m));
  }
  return MoveScript(genus, std::move(moves));
}

}  // namespace untwist
