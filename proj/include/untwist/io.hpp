#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "untwist/pipeline.hpp"

namespace untwist {

// A parsed diagram file: the datum plus its optional name header.
struct DiagramFile {
  HeegaardDatum datum;
  std::string name;
  bool operator==(const DiagramFile&) const = default;
};

namespace detail {

// Line cursor over text with comment stripping; keeps 1-based numbers for
// error reporting.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : is_(std::string(text)) {}

  // next non-empty line after stripping comments; false at end
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(is_, raw)) {
      ++lineno_;
      std::string line = strip_line(raw);
      if (!line.empty()) {
        out = std::move(line);
        return true;
      }
    }
    return false;
  }

  void expect(const std::string& keyword) {
    std::string line;
    if (!next(line)) throw ParseError(lineno_, "expected '" + keyword + "', got end of input");
    if (line != keyword)
      throw ParseError(lineno_, "expected '" + keyword + "', got '" + line + "'");
  }

  int line() const { return lineno_; }

 private:
  std::istringstream is_;
  int lineno_ = 0;
};

inline IntMatrix parse_matrix_block(LineReader& r, const std::string& header,
                                    std::size_t g) {
  r.expect(header);
  IntMatrix m(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    std::string line;
    if (!r.next(line))
      throw ParseError(r.line(), "block " + header + ": expected " +
                                     std::to_string(g) + " rows");
    std::vector<std::string> toks = split_tokens(line);
    if (toks.size() != g)
      throw ParseError(r.line(), "block " + header + ": expected " +
                                     std::to_string(g) + " entries per row");
    for (std::size_t j = 0; j < g; ++j) m(i, j) = parse_int(toks[j], r.line());
  }
  return m;
}

inline HeegaardDatum parse_datum_body(LineReader& r, std::string* name_out) {
  std::string line;
  if (!r.next(line)) throw ParseError(r.line(), "expected 'genus g', got end of input");
  std::vector<std::string> toks = split_tokens(line);
  if (name_out && toks.size() == 2 && toks[0] == "name") {
    *name_out = toks[1];
    if (!r.next(line)) throw ParseError(r.line(), "expected 'genus g' after name");
    toks = split_tokens(line);
  }
  if (toks.size() != 2 || toks[0] != "genus")
    throw ParseError(r.line(), "expected 'genus g', got '" + line + "'");
  Int gval = parse_int(toks[1], r.line());
  if (gval < 0 || gval > 10000) throw ParseError(r.line(), "unreasonable genus " + toks[1]);
  std::size_t g = static_cast<std::size_t>(gval);
  IntMatrix a = parse_matrix_block(r, "A", g);
  IntMatrix b = parse_matrix_block(r, "B", g);
  IntMatrix f = parse_matrix_block(r, "F", g);
  return HeegaardDatum(std::move(a), std::move(b), std::move(f));
}

inline void render_datum_body(std::ostringstream& os, const HeegaardDatum& d) {
  os << "genus " << d.genus() << '\n';
  os << "A\n" << d.a;
  os << "B\n" << d.b;
  os << "F\n" << d.f;
}

}  // namespace detail

// --- diagram files -----------------------------------------------------------
// Optional "name <word>" header, then "genus g" and the three blocks A, B,
// F of g rows with g decimal integers each. '#' comments, LF newlines.

inline std::string render_diagram(const HeegaardDatum& d, const std::string& name = "") {
  std::ostringstream os;
  if (!name.empty()) os << "name " << name << '\n';
  detail::render_datum_body(os, d);
  return os.str();
}

inline DiagramFile parse_diagram(std::string_view text) {
  detail::LineReader r(text);
  DiagramFile out;
  out.datum = detail::parse_datum_body(r, &out.name);
  std::string extra;
  if (r.next(extra))
    throw ParseError(r.line(), "unexpected content after diagram: '" + extra + "'");
  return out;
}

// --- certificate files ---------------------------------------------------------
// Sections: "initial" + diagram body, "script" + move lines, "final" +
// diagram body, then "untwisted true|false".

inline std::string render_certificate(const Certificate& c) {
  std::ostringstream os;
  os << "initial\n";
  detail::render_datum_body(os, c.initial);
  os << "script\n";
  os << render_script(c.script);
  os << "final\n";
  detail::render_datum_body(os, c.final);
  os << "untwisted " << (c.untwisted ? "true" : "false") << '\n';
  return os.str();
}

inline Certificate parse_certificate(std::string_view text) {
  detail::LineReader r(text);
  r.expect("initial");
  HeegaardDatum initial = detail::parse_datum_body(r, nullptr);
  r.expect("script");
  std::vector<Move> moves;
  std::string line;
  for (;;) {
    if (!r.next(line)) throw ParseError(r.line(), "expected 'final' section");
    if (line == "final") break;
    Move m = detail::parse_move_line(line, r.line());
    if (m.max_index() > initial.genus())
      throw ParseError(r.line(), "move index out of range for genus " +
                                     std::to_string(initial.genus()));
    moves.push_back(std::move(m));
  }
  HeegaardDatum final_datum = detail::parse_datum_body(r, nullptr);
  if (!r.next(line)) throw ParseError(r.line(), "expected 'untwisted true|false'");
  std::vector<std::string> toks = detail::split_tokens(line);
  if (toks.size() != 2 || toks[0] != "untwisted" ||
      (toks[1] != "true" && toks[1] != "false"))
    throw ParseError(r.line(), "expected 'untwisted true|false', got '" + line + "'");
  if (final_datum.genus() != initial.genus())
    throw ParseError(r.line(), "initial and final genus differ");
  Certificate c{std::move(initial), MoveScript(0, {}), std::move(final_datum),
                toks[1] == "true"};
  c.script = MoveScript(c.initial.genus(), std::move(moves));
  if (r.next(line))
    throw ParseError(r.line(), "unexpected content after certificate: '" + line + "'");
  return c;
}

// --- pillar-system files --------------------------------------------------------
// "effects R C" then R rows of C integers, then one "constants c1 .. cR" line.

inline std::string render_pillar_system(const PillarSystem& p) {
  std::ostringstream os;
  os << "effects " << p.effects.rows() << ' ' << p.effects.cols() << '\n';
  os << p.effects;
  os << "constants";
  for (const Int& c : p.constants) os << ' ' << c;
  os << '\n';
  return os.str();
}

inline PillarSystem parse_pillar_system(std::string_view text) {
  detail::LineReader r(text);
  std::string line;
  if (!r.next(line)) throw ParseError(r.line(), "expected 'effects R C'");
  std::vector<std::string> toks = detail::split_tokens(line);
  if (toks.size() != 3 || toks[0] != "effects")
    throw ParseError(r.line(), "expected 'effects R C', got '" + line + "'");
  Int rv = detail::parse_int(toks[1], r.line()), cv = detail::parse_int(toks[2], r.line());
  if (rv < 0 || cv < 0 || rv > 10000 || cv > 10000)
    throw ParseError(r.line(), "unreasonable system dimensions");
  std::size_t rows = static_cast<std::size_t>(rv), cols = static_cast<std::size_t>(cv);
  IntMatrix effects(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!r.next(line))
      throw ParseError(r.line(), "effects: expected " + std::to_string(rows) + " rows");
    std::vector<std::string> row = detail::split_tokens(line);
    if (row.size() != cols)
      throw ParseError(r.line(), "effects: expected " + std::to_string(cols) +
                                     " entries per row");
    for (std::size_t j = 0; j < cols; ++j)
      effects(i, j) = detail::parse_int(row[j], r.line());
  }
  if (!r.next(line)) throw ParseError(r.line(), "expected 'constants ...' line");
  toks = detail::split_tokens(line);
  if (toks.empty() || toks[0] != "constants" || toks.size() != rows + 1)
    throw ParseError(r.line(), "expected 'constants' with " + std::to_string(rows) +
                                   " integers");
  std::vector<Int> constants;
  for (std::size_t i = 0; i < rows; ++i)
    constants.push_back(detail::parse_int(toks[i + 1], r.line()));
  if (r.next(line))
    throw ParseError(r.line(), "unexpected content after pillar system: '" + line + "'");
  return PillarSystem(std::move(effects), std::move(constants));
}

}  // namespace untwist
