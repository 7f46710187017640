#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "untwist/intmat.hpp"

namespace untwist {

// Smith decomposition u * d * v == input, with u, v unimodular and the
// diagonal of d nonnegative, each entry dividing the next.
struct SnfResult {
  IntMatrix u, d, v;
};

// Same, plus the inverse transforms. They accumulate for free during the
// reduction and the diophantine solver wants them.
struct SnfExtended {
  IntMatrix u, u_inv, d, v, v_inv;
};

// Smith normal form over the integers. Pivot choice: smallest nonzero
// magnitude in the trailing submatrix, ties broken by lowest (row, col);
// entries are reduced against the pivot by Euclidean steps until it
// divides everything it sees.
inline SnfExtended smith_normal_form_extended(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  SnfExtended s{IntMatrix::identity(r), IntMatrix::identity(r), m,
                IntMatrix::identity(c), IntMatrix::identity(c)};
  IntMatrix& d = s.d;

  // Each helper keeps u * d * v == m exact.
  auto row_swap = [&](std::size_t i, std::size_t k) {
    d.swap_rows(i, k);
    s.u_inv.swap_rows(i, k);
    s.u.swap_cols(i, k);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    d.add_row_multiple(dst, src, q);
    s.u_inv.add_row_multiple(dst, src, q);
    s.u.add_col_multiple(src, dst, -q);
  };
  auto row_negate = [&](std::size_t i) {
    d.negate_row(i);
    s.u_inv.negate_row(i);
    s.u.negate_col(i);
  };
  auto col_swap = [&](std::size_t j, std::size_t l) {
    d.swap_cols(j, l);
    s.v.swap_rows(j, l);
    s.v_inv.swap_cols(j, l);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    d.add_col_multiple(dst, src, q);
    s.v_inv.add_col_multiple(dst, src, q);
    s.v.add_row_multiple(src, dst, -q);
  };

  const std::size_t steps = r < c ? r : c;
  for (std::size_t t = 0; t < steps; ++t) {
    bool trailing_zero = false;
    for (;;) {
      // pivot: smallest nonzero magnitude, lowest (row, col) on ties
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d(i, j) != 0 &&
              (pi == r || abs(d(i, j)) < abs(d(pi, pj))))
            pi = i, pj = j;
      if (pi == r) {
        trailing_zero = true;
        break;
      }
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i)
        if (d(i, t) != 0) {
          Int q = d(i, t) / d(t, t);
          row_add(i, t, -q);
          if (d(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (d(t, j) != 0) {
          Int q = d(t, j) / d(t, t);
          col_add(j, t, -q);
          if (d(t, j) != 0) clean = false;
        }
      if (!clean) continue;

      // Pull a non-multiple into row t so the divisibility chain holds.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (trailing_zero) break;
  }

  for (std::size_t k = 0; k < steps; ++k)
    if (d(k, k) < 0) row_negate(k);
  return s;
}

inline SnfResult smith_normal_form(const IntMatrix& m) {
  SnfExtended s = smith_normal_form_extended(m);
  return SnfResult{std::move(s.u), std::move(s.d), std::move(s.v)};
}

// Transvection E(i, j, s) = I + s * e_ij with i != j and s != 0; indices
// are 1-based. An |s| > 1 entry stands for |s| unit elementary factors.
struct Transvection {
  std::size_t i, j;
  Int s;
  bool operator==(const Transvection&) const = default;
};

inline IntMatrix transvection_matrix(std::size_t n, const Transvection& t) {
  if (t.i < 1 || t.i > n || t.j < 1 || t.j > n || t.i == t.j)
    throw IndexError("transvection: indices must be distinct and within 1..n");
  if (t.s == 0) throw std::invalid_argument("transvection: s must be nonzero");
  IntMatrix e = IntMatrix::identity(n);
  e(t.i - 1, t.j - 1) = t.s;
  return e;
}

// Column operations reducing a det(+1) matrix to the identity:
//   m * E(ops[0]) * E(ops[1]) * ... == I.
// Column swaps and sign flips are not elementary, so the quarter-turn
// identity (three transvections sending (col_i, col_j) to (-col_j, col_i))
// stands in for them. Rows are finished top to bottom; ops at step k touch
// only columns >= k until row k is a standard basis row, then clear its
// left part against the fresh pivot.
inline std::vector<Transvection> column_reduce_to_identity(IntMatrix a) {
  if (!a.is_square())
    throw DimensionError("column_reduce_to_identity: matrix must be square");
  if (determinant(a) != 1)
    throw NotSL("column_reduce_to_identity: determinant must be +1");
  const std::size_t n = a.rows();
  std::vector<Transvection> ops;

  // col dst += q * col src, recording the op
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    a.add_col_multiple(dst, src, q);
    ops.push_back(Transvection{src + 1, dst + 1, q});
  };
  // (col_i, col_j) <- (-col_j, col_i)
  auto quarter_turn = [&](std::size_t i, std::size_t j) {
    col_add(j, i, 1);
    col_add(i, j, -1);
    col_add(j, i, 1);
  };

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = k; j < n; ++j)
        if (a(k, j) != 0 && (best == n || abs(a(k, j)) < abs(a(k, best))))
          best = j;
      if (best == n)
        throw InternalInvariantViolation(
            "column reduction: row became zero despite det +1");
      if (best != k) quarter_turn(k, best);

      bool clean = true;
      for (std::size_t j = k + 1; j < n; ++j)
        if (a(k, j) != 0) {
          Int q = a(k, j) / a(k, k);
          col_add(j, k, -q);
          if (a(k, j) != 0) clean = false;
        }
      if (!clean) continue;

      if (a(k, k) < 0) {
        // impossible at k == n-1: the remaining diagonal entry carries
        // the whole determinant
        if (k + 1 >= n)
          throw InternalInvariantViolation(
              "column reduction: negative final pivot despite det +1");
        quarter_turn(k, k + 1);
        quarter_turn(k, k + 1);
      }
      break;
    }
    for (std::size_t j = 0; j < k; ++j)
      if (a(k, j) != 0) col_add(j, k, -a(k, j));
  }
  return ops;
}

// Ordered transvection factorization: the product of E(f) over the result
// equals m exactly. Requires square m with det(m) = +1.
inline std::vector<Transvection> elementary_factorization(const IntMatrix& m) {
  std::vector<Transvection> ops = column_reduce_to_identity(m);
  // m * E(ops...) == I, so m is the product of the inverses in reverse.
  std::vector<Transvection> factors(ops.rbegin(), ops.rend());
  for (Transvection& f : factors) f.s = -f.s;
  return factors;
}

}  // namespace untwist
