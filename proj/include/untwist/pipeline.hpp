#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "untwist/moves.hpp"

namespace untwist {

// Raised when the untwisting pipeline is handed a diagram whose manifold
// is not a homology sphere; carries the homology computation as evidence.
struct NotHomologySphere : std::domain_error {
  HomologyReport report;
  explicit NotHomologySphere(HomologyReport r)
      : std::domain_error("not a homology sphere: H1 = " +
                          r.group_description()),
        report(std::move(r)) {}
};

// Replayable untwisting record: applying script to initial must reproduce
// final exactly, and untwisted must equal is_untwisted(final).
struct Certificate {
  HeegaardDatum initial;
  MoveScript script;
  HeegaardDatum final;
  bool untwisted = false;

  bool operator==(const Certificate&) const = default;
};

// Untwist a valid homology-sphere datum. Stage order is normative so
// certificates are reproducible:
//   1. flip one curve if det A = -1
//   2. slides realizing a column reduction of A to the identity
//      (afterwards the linking matrix equals F + B and is symmetric)
//   3. reframes zeroing the diagonal of F (linking matrix untouched)
//   4. pair twists killing off-diagonal linking, pairs in lexicographic
//      order; each also perturbs the two diagonal entries
//   5. meridian twists killing the remaining diagonal
// Result: A = I, linking matrix = 0, all self-linkings = 0.
inline Certificate untwist(const HeegaardDatum& d) {
  require_valid(d);
  const std::size_t g = d.genus();
  Int det = determinant(d.a);
  if (det != 1 && det != -1) throw NotHomologySphere(homology(d));

  HeegaardDatum cur = d;
  std::vector<Move> moves;
  auto push = [&](Move m) {
    cur = apply(cur, m);
    moves.push_back(std::move(m));
  };

  if (det == -1) push(Move::orient_reverse(1));

  for (const Transvection& op : column_reduce_to_identity(cur.a))
    push(Move::slide(op.i, op.j, -op.s));  // slide(i,j,-s) right-multiplies A by E(i,j,s)
  if (cur.a != IntMatrix::identity(g))
    throw InternalInvariantViolation("untwist: A not reduced to identity");
  if (!linking_matrix(cur).is_symmetric())
    throw InternalInvariantViolation(
        "untwist: linking matrix not symmetric after slide reduction");

  for (std::size_t i = 1; i <= g; ++i)
    if (cur.f(i - 1, i - 1) != 0)
      push(Move::reframe(i, -cur.f(i - 1, i - 1)));

  for (std::size_t i = 1; i <= g; ++i)
    for (std::size_t j = i + 1; j <= g; ++j) {
      Int lij = linking_matrix(cur)(i - 1, j - 1);
      if (lij != 0) push(Move::twist_pair(i, j, -lij));
    }

  for (std::size_t i = 1; i <= g; ++i) {
    Int lii = linking_matrix(cur)(i - 1, i - 1);
    if (lii != 0) push(Move::twist_meridian(i, -lii));
  }

  Certificate cert{d, MoveScript(g, std::move(moves)), cur, is_untwisted(cur)};
  if (!cert.untwisted || !linking_matrix(cur).is_zero())
    throw InternalInvariantViolation("untwist: pipeline did not untwist");
  return cert;
}

// Independent replay of a certificate through the move calculus alone.
inline bool verify(const Certificate& c) {
  if (c.script.genus != c.initial.genus() ||
      c.initial.genus() != c.final.genus())
    throw GenusMismatch("verify: genus mismatch between certificate parts");
  HeegaardDatum replayed = apply_script(c.initial, c.script);
  return replayed == c.final && is_untwisted(c.final) == c.untwisted;
}

// Linear constraints "effects * t + constants = 0" over the integers;
// rows are constraints, columns twist generators.
struct PillarSystem {
  IntMatrix effects;
  std::vector<Int> constants;

  PillarSystem() = default;
  PillarSystem(IntMatrix e, std::vector<Int> c)
      : effects(std::move(e)), constants(std::move(c)) {
    if (constants.size() != effects.rows())
      throw DimensionError("PillarSystem: one constant per constraint row");
  }
  bool operator==(const PillarSystem&) const = default;
};

enum class PillarStatus { Unique, NoSolution, NonUnique };

struct PillarSolution {
  PillarStatus status = PillarStatus::NoSolution;
  std::vector<Int> values;  // set only when status == Unique
  bool operator==(const PillarSolution&) const = default;
};

// Exact integer solution of effects * t = -constants via the Smith
// decomposition; no rational arithmetic anywhere.
inline PillarSolution solve_pillar_system(const PillarSystem& p) {
  const std::size_t r = p.effects.rows(), c = p.effects.cols();
  SnfExtended s = smith_normal_form_extended(p.effects);

  // y = u_inv * (-constants)
  std::vector<Int> y(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      y[i] -= s.u_inv(i, k) * p.constants[k];

  const std::size_t steps = r < c ? r : c;
  std::vector<Int> z(c, 0);
  bool non_unique = c > steps;
  for (std::size_t k = 0; k < steps; ++k) {
    const Int& dk = s.d(k, k);
    if (dk == 0) {
      if (y[k] != 0) return {PillarStatus::NoSolution, {}};
      non_unique = true;
    } else {
      if (y[k] % dk != 0) return {PillarStatus::NoSolution, {}};
      z[k] = y[k] / dk;
    }
  }
  for (std::size_t k = steps; k < r; ++k)
    if (y[k] != 0) return {PillarStatus::NoSolution, {}};
  if (non_unique) return {PillarStatus::NonUnique, {}};

  // t = v_inv * z
  std::vector<Int> t(c, 0);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t k = 0; k < c; ++k)
      if (z[k] != 0) t[i] += s.v_inv(i, k) * z[k];
  return {PillarStatus::Unique, std::move(t)};
}

}  // namespace untwist
