#include <catch2/catch_amalgamated.hpp>

#include "untwist/moves.hpp"
#include "untwist/random_data.hpp"

using namespace untwist;

namespace {
HeegaardDatum untwisted_i(std::size_t g) {
  return HeegaardDatum(IntMatrix::identity(g), IntMatrix(g, g), IntMatrix(g, g));
}
}  // namespace

TEST_CASE("pair twist bumps the four affected entries of B") {
  HeegaardDatum d = untwisted_i(3);
  HeegaardDatum after = apply(d, Move::twist_pair(1, 2, 1));
  IntMatrix expect(3, 3);
  expect(0, 0) = expect(0, 1) = expect(1, 0) = expect(1, 1) = 1;
  CHECK(after.b == expect);
  CHECK(after.a == d.a);
  CHECK(after.f == d.f);
}

TEST_CASE("meridian twist changes one diagonal entry of B") {
  HeegaardDatum d = untwisted_i(2);
  HeegaardDatum after = apply(d, Move::twist_meridian(1, -4));
  IntMatrix expect(2, 2);
  expect(0, 0) = -4;
  CHECK(after.b == expect);
  CHECK(after.a == d.a);
  CHECK(after.f == d.f);
}

TEST_CASE("slide reduces the shear example to the identity") {
  HeegaardDatum d(IntMatrix{{1, 1}, {0, 1}}, IntMatrix(2, 2), IntMatrix(2, 2));
  HeegaardDatum after = apply(d, Move::slide(1, 2, 1));
  CHECK(after.a == IntMatrix::identity(2));
  CHECK(after.b.is_zero());
  CHECK(after.f.is_zero());
}

TEST_CASE("orient reverse negates one row of A and B") {
  Rng rng(5);
  HeegaardDatum d = random_homology_sphere(rng, 3, 3, 6);
  HeegaardDatum after = apply(d, Move::orient_reverse(2));
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(after.a(1, j) == -d.a(1, j));
    CHECK(after.b(1, j) == -d.b(1, j));
  }
  CHECK(after.f == d.f);
  CHECK(apply(after, Move::orient_reverse(2)) == d);
}

TEST_CASE("move construction guards") {
  CHECK_THROWS_AS(Move::slide(1, 1, 2), IndexError);
  CHECK_THROWS_AS(Move::twist_pair(2, 2, 1), IndexError);
  CHECK_THROWS_AS(Move::slide(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Move::reframe(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Move::twist_meridian(0, 1), IndexError);
}

TEST_CASE("apply rejects out-of-range indices and invalid data") {
  HeegaardDatum d = untwisted_i(2);
  CHECK_THROWS_AS(apply(d, Move::twist_meridian(3, 1)), IndexError);
  CHECK_THROWS_AS(apply(d, Move::slide(1, 3, 1)), IndexError);
  HeegaardDatum bad(IntMatrix::identity(2), IntMatrix{{0, 1}, {0, 0}}, IntMatrix(2, 2));
  CHECK_THROWS_AS(apply(bad, Move::twist_meridian(1, 1)), InvalidDatum);
}

TEST_CASE("script construction validates indices against the genus") {
  CHECK_THROWS_AS(MoveScript(2, {Move::twist_meridian(3, 1)}), IndexError);
  CHECK_NOTHROW(MoveScript(3, {Move::twist_meridian(3, 1)}));
}

TEST_CASE("apply_script folds and reports the failing move") {
  HeegaardDatum d = untwisted_i(2);
  CHECK(apply_script(d, MoveScript(2, {})) == d);

  MoveScript s(2, {Move::slide(1, 2, 2), Move::twist_pair(1, 2, -1)});
  HeegaardDatum by_hand = apply(apply(d, s.moves[0]), s.moves[1]);
  CHECK(apply_script(d, s) == by_hand);

  CHECK_THROWS_AS(apply_script(untwisted_i(3), s), GenusMismatch);
}

TEST_CASE("every move kind composed with its inverse is the identity") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    std::size_t g = static_cast<std::size_t>(rng.rand_in(2, 6));
    HeegaardDatum d = random_homology_sphere(rng, g, 3, 5);
    Move m = random_move(rng, g, 3);
    CHECK(apply(apply(d, m), m.inverse()) == d);
  }
}

TEST_CASE("moves preserve the datum invariants and transform det A as stated") {
  Rng rng(43);
  for (int t = 0; t < 400; ++t) {
    std::size_t g = static_cast<std::size_t>(rng.rand_in(2, 6));
    HeegaardDatum d = rng.coin() ? random_homology_sphere(rng, g, 3, 5)
                                 : random_valid_datum(rng, g, 4);
    Move m = random_move(rng, g, 3);
    HeegaardDatum after = apply(d, m);
    CHECK(is_valid(after));
    Int det_before = determinant(d.a), det_after = determinant(after.a);
    if (m.kind == MoveKind::OrientReverse)
      CHECK(det_after == -det_before);
    else
      CHECK(det_after == det_before);
  }
}

TEST_CASE("linking matrix transport laws") {
  Rng rng(44);
  for (int t = 0; t < 300; ++t) {
    std::size_t g = static_cast<std::size_t>(rng.rand_in(2, 5));
    HeegaardDatum d = random_valid_datum(rng, g, 4);
    IntMatrix lk = linking_matrix(d);
    Move m = random_move(rng, g, 3);
    HeegaardDatum after = apply(d, m);
    IntMatrix lk_after = linking_matrix(after);
    const std::size_t i = m.i - 1, j = m.j == 0 ? 0 : m.j - 1;
    switch (m.kind) {
      case MoveKind::Slide: {
        // Lk -> Lk * E(i,j,s)^T
        IntMatrix expect = lk;
        expect.add_col_multiple(i, j, m.c);
        CHECK(lk_after == expect);
        // slides conjugate F
        IntMatrix ef = d.f;
        ef.add_row_multiple(i, j, m.c);
        ef.add_col_multiple(i, j, m.c);
        CHECK(after.f == ef);
        break;
      }
      case MoveKind::Reframe:
        CHECK(lk_after == lk);  // neither the curves nor the spine moved
        break;
      case MoveKind::TwistPair: {
        IntMatrix expect = lk;
        for (std::size_t row = 0; row < g; ++row) {
          Int u = d.a(row, i) + d.a(row, j);
          expect(row, i) += m.c * u;
          expect(row, j) += m.c * u;
        }
        CHECK(lk_after == expect);
        break;
      }
      case MoveKind::TwistMeridian: {
        IntMatrix expect = lk;
        for (std::size_t row = 0; row < g; ++row) expect(row, i) += m.c * d.a(row, i);
        CHECK(lk_after == expect);
        break;
      }
      case MoveKind::OrientReverse: {
        IntMatrix expect = lk;
        expect.negate_row(i);
        CHECK(lk_after == expect);
        break;
      }
    }
    // twists never touch A or F
    if (m.is_twist()) {
      CHECK(after.a == d.a);
      CHECK(after.f == d.f);
    }
  }
}

TEST_CASE("script round-trips restore the datum exactly") {
  Rng rng(45);
  for (int t = 0; t < 100; ++t) {
    std::size_t g = static_cast<std::size_t>(rng.rand_in(1, 6));
    HeegaardDatum d = random_homology_sphere(rng, g, 4, 5);
    MoveScript s = random_script(rng, g, 20, 3);
    CHECK(apply_script(apply_script(d, s), inverse(s)) == d);
  }
  CHECK(inverse(MoveScript(2, {})) == MoveScript(2, {}));
  MoveScript single(2, {Move::slide(1, 2, 3)});
  CHECK(inverse(single).moves == std::vector<Move>{Move::slide(1, 2, -3)});
}

TEST_CASE("script text format round-trips") {
  MoveScript s(3, {Move::orient_reverse(2), Move::slide(1, 3, -2), Move::reframe(2, 5),
                   Move::twist_pair(2, 3, -1), Move::twist_meridian(3, 7)});
  std::string text = render_script(s);
  CHECK(text ==
        "flip 2\n"
        "slide 1 3 -2\n"
        "reframe 2 5\n"
        "twistpair 2 3 -1\n"
        "twistm 3 7\n");
  CHECK(parse_script(text, 3) == s);

  CHECK(parse_script("# nothing here\n\n  # noise\n", 4) == MoveScript(4, {}));
  CHECK(parse_script("slide 1 2 1 # with comment\n", 2) ==
        MoveScript(2, {Move::slide(1, 2, 1)}));

  CHECK_THROWS_AS(parse_script("wobble 1\n", 3), ParseError);
  CHECK_THROWS_AS(parse_script("slide 1 2\n", 3), ParseError);
  CHECK_THROWS_AS(parse_script("slide 1 2 0\n", 3), ParseError);
  CHECK_THROWS_AS(parse_script("twistm 4 1\n", 3), ParseError);
  try {
    parse_script("flip 1\nslide 9 1 1\n", 3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}
