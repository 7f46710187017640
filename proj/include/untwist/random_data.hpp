#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "untwist/moves.hpp"

namespace untwist {

// Deterministic random data for property suites and the CLI selftest.
// Bounded draws go through rand_below so runs are reproducible from the
// seed alone.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t rand_below(std::uint64_t n) { return eng() % n; }

  long rand_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(rand_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  long rand_nonzero(long mag) {
    long v = rand_in(1, mag);
    return rand_below(2) ? v : -v;
  }

  bool coin() { return rand_below(2) != 0; }
};

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                               long mag) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rand_in(-mag, mag);
  return m;
}

inline IntMatrix random_symmetric(Rng& rng, std::size_t g, long mag,
                                  bool zero_diagonal = false) {
  IntMatrix m(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    m(i, i) = zero_diagonal ? 0 : rng.rand_in(-mag, mag);
    for (std::size_t j = i + 1; j < g; ++j) m(i, j) = m(j, i) = rng.rand_in(-mag, mag);
  }
  return m;
}

// Product of random transvections: a determinant +1 matrix.
inline IntMatrix random_sl(Rng& rng, std::size_t n, std::size_t num_ops,
                           long coeff_mag) {
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) return m;
  for (std::size_t t = 0; t < num_ops; ++t) {
    std::size_t i = rng.rand_below(n), j = rng.rand_below(n - 1);
    if (j >= i) ++j;
    m = m * transvection_matrix(n, {i + 1, j + 1, Int(rng.rand_nonzero(coeff_mag))});
  }
  return m;
}

// Untwisted datum: A = I, F symmetric with zero diagonal, B = -F (the
// unique choice killing the linking matrix and all self-linkings).
inline HeegaardDatum random_untwisted_seed(Rng& rng, std::size_t g, long mag) {
  IntMatrix f = random_symmetric(rng, g, mag, /*zero_diagonal=*/true);
  IntMatrix b(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) b(i, j) = -f(i, j);
  return HeegaardDatum(IntMatrix::identity(g), std::move(b), std::move(f));
}

inline Move random_move(Rng& rng, std::size_t g, long mag) {
  std::size_t i = rng.rand_below(g) + 1;
  std::size_t j = g > 1 ? (i - 1 + rng.rand_below(g - 1) + 1) % g + 1 : 0;
  switch (g > 1 ? rng.rand_below(5) : rng.rand_below(3)) {
    case 0: return Move::orient_reverse(i);
    case 1: return Move::reframe(i, rng.rand_nonzero(mag));
    case 2: return Move::twist_meridian(i, rng.rand_nonzero(mag));
    case 3: return Move::slide(i, j, rng.rand_nonzero(mag));
    default: return Move::twist_pair(i, j, rng.rand_nonzero(mag));
  }
}

inline MoveScript random_script(Rng& rng, std::size_t g, std::size_t length,
                                long mag) {
  std::vector<Move> moves;
  if (g == 0) return MoveScript(0, {});
  for (std::size_t t = 0; t < length; ++t) moves.push_back(random_move(rng, g, mag));
  return MoveScript(g, std::move(moves));
}

// Valid homology-sphere datum: an untwisted seed pushed around by a
// random script. Moves preserve both validity and |det A| = 1.
inline HeegaardDatum random_homology_sphere(Rng& rng, std::size_t g, long mag,
                                            std::size_t script_len = 10) {
  HeegaardDatum seed = random_untwisted_seed(rng, g, mag);
  return apply_script(seed, random_script(rng, g, script_len, 2));
}

// Valid datum with unconstrained determinant: any A works when B = A * Y
// with Y symmetric (then A*B^T = A*Y*A^T is symmetric for free).
inline HeegaardDatum random_valid_datum(Rng& rng, std::size_t g, long mag) {
  IntMatrix a = random_matrix(rng, g, g, mag);
  IntMatrix y = random_symmetric(rng, g, 2);
  IntMatrix f = random_symmetric(rng, g, mag);
  return HeegaardDatum(a, a * y, std::move(f));
}

}  // namespace untwist
