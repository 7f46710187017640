#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "untwist/intmat.hpp"
#include "untwist/normal_form.hpp"

namespace untwist {

// Homological model of an embedded genus-g Heegaard diagram.
//
//   a - alpha-coefficients of the attaching curves (row i = curve i)
//   b - beta-coefficients
//   f - embedding linking data: f(i,j) = lk(alpha_i, X_j) for i != j
//       (spine-spine linking), diagonal entries are longitude framings
//
// Valid data satisfy: f symmetric, and a * b^T symmetric (the homological
// shadow of the attaching curves being disjoint on the boundary surface).
// g = 0 is the empty diagram of the 3-sphere.
struct HeegaardDatum {
  IntMatrix a, b, f;

  HeegaardDatum() = default;
  HeegaardDatum(IntMatrix a_, IntMatrix b_, IntMatrix f_)
      : a(std::move(a_)), b(std::move(b_)), f(std::move(f_)) {
    const std::size_t g = a.rows();
    if (a.cols() != g || b.rows() != g || b.cols() != g || f.rows() != g ||
        f.cols() != g)
      throw DimensionError("HeegaardDatum: a, b, f must all be g x g");
  }

  std::size_t genus() const { return a.rows(); }
  bool operator==(const HeegaardDatum&) const = default;
};

enum class ViolationKind { FNotSymmetric, ABtNotSymmetric };

// One failed invariant; i, j are the 1-based offending entry pair.
struct Violation {
  ViolationKind kind;
  std::size_t i, j;

  std::string describe() const {
    std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    switch (kind) {
      case ViolationKind::FNotSymmetric:
        return "F asymmetric at " + at;
      case ViolationKind::ABtNotSymmetric:
        return "A*B^T asymmetric at " + at;
    }
    return "unknown violation";
  }
  bool operator==(const Violation&) const = default;
};

// Every violated invariant, with indices; empty means the datum is valid.
inline std::vector<Violation> validate(const HeegaardDatum& d) {
  std::vector<Violation> out;
  const std::size_t g = d.genus();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (d.f(i, j) != d.f(j, i))
        out.push_back({ViolationKind::FNotSymmetric, i + 1, j + 1});
  IntMatrix abt = d.a * d.b.transpose();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (abt(i, j) != abt(j, i))
        out.push_back({ViolationKind::ABtNotSymmetric, i + 1, j + 1});
  return out;
}

inline bool is_valid(const HeegaardDatum& d) { return validate(d).empty(); }

inline void require_valid(const HeegaardDatum& d) {
  std::vector<Violation> v = validate(d);
  if (!v.empty()) throw InvalidDatum("invalid datum: " + v.front().describe());
}

// Linking matrix: entry (i,j) models lk(J_i, X_j). Expanding J_i over the
// basis, the beta terms contribute b(i,j) and the alpha terms pick up the
// embedding data, giving a * f + b.
inline IntMatrix linking_matrix(const HeegaardDatum& d) {
  require_valid(d);
  return d.a * d.f + d.b;
}

// Self-linking of curve i with its outward pushoff, 1-based index:
// (A F A^T)_ii - (A B^T)_ii under the pairing convention lk(alpha_i,
// alpha_j+) = f(i,j), lk(beta_i, alpha_j+) = -delta_ij, other basis pairs
// zero. Under a = I, f = 0 this is -b(i,i).
inline Int self_linking(const HeegaardDatum& d, std::size_t i) {
  require_valid(d);
  const std::size_t g = d.genus();
  if (i < 1 || i > g) throw IndexError("self_linking: curve index out of range");
  const std::size_t r = i - 1;
  Int acc = 0;
  for (std::size_t p = 0; p < g; ++p) {
    if (d.a(r, p) == 0) continue;
    for (std::size_t q = 0; q < g; ++q)
      acc += d.a(r, p) * d.f(p, q) * d.a(r, q);
  }
  for (std::size_t p = 0; p < g; ++p) acc -= d.a(r, p) * d.b(r, p);
  return acc;
}

// A diagram is untwisted when every curve is null-homologous in the
// complement: the whole linking matrix vanishes and so does every
// self-linking. With a = I and f = 0 this is exactly b = 0.
inline bool is_untwisted(const HeegaardDatum& d) {
  if (!linking_matrix(d).is_zero()) return false;
  for (std::size_t i = 1; i <= d.genus(); ++i)
    if (self_linking(d, i) != 0) return false;
  return true;
}

// First homology of the closed manifold, presented by a.
struct HomologyReport {
  std::vector<Int> invariant_factors;  // 0 encodes an infinite factor
  bool is_homology_sphere = false;

  // "0" for the trivial group, else nontrivial factors joined by " + ".
  std::string group_description() const {
    std::string out;
    for (const Int& f : invariant_factors) {
      if (f == 1) continue;
      if (!out.empty()) out += " + ";
      out += f == 0 ? "Z" : "Z/" + f.str();
    }
    return out.empty() ? "0" : out;
  }
  bool operator==(const HomologyReport&) const = default;
};

inline HomologyReport homology(const HeegaardDatum& d) {
  require_valid(d);
  IntMatrix diag = smith_normal_form(d.a).d;
  HomologyReport rep;
  rep.is_homology_sphere = true;
  for (std::size_t k = 0; k < d.genus(); ++k) {
    rep.invariant_factors.push_back(diag(k, k));
    if (diag(k, k) != 1) rep.is_homology_sphere = false;
  }
  return rep;
}

}  // namespace untwist
