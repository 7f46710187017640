#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "support/process.hpp"
#include "support/rewrites.hpp"
#include "untwist/io.hpp"

using proc::cli;
using proc::fixture;
using proc::run;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content = "")
      : path("/tmp/untwist_test_" + name) {
    if (!content.empty()) {
      std::ofstream out(path);
      out << content;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli validate") {
  proc::Result ok = run(cli() + " validate " + fixture("s3_genus0.dg"));
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "ok"));

  CHECK(run(cli() + " validate " + fixture("poincare_g2.dg")).exit_code == 0);

  TempFile bad("asym_f.dg",
               "genus 2\nA\n1 0\n0 1\nB\n0 0\n0 0\nF\n0 1\n2 0\n");
  proc::Result r = run(cli() + " validate " + bad.path);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "F asymmetric at (1,2)"));

  TempFile garbled("garbled.dg", "genus two\n");
  proc::Result g = run(cli() + " validate " + garbled.path);
  CHECK(g.exit_code == 2);
  CHECK(contains(g.output, "line 1"));

  CHECK(run(cli() + " validate /nonexistent/x.dg").exit_code == 2);
}

TEST_CASE("cli homology") {
  proc::Result lens = run(cli() + " homology " + fixture("lens5.dg"));
  CHECK(lens.exit_code == 0);
  CHECK(contains(lens.output, "invariant factors: 5"));
  CHECK(contains(lens.output, "H1 = Z/5"));
  CHECK(contains(lens.output, "homology-sphere: no"));

  proc::Result poin = run(cli() + " homology " + fixture("poincare_g2.dg"));
  CHECK(poin.exit_code == 0);
  CHECK(contains(poin.output, "H1 = 0"));
  CHECK(contains(poin.output, "homology-sphere: yes"));

  proc::Result z6 = run(cli() + " homology " + fixture("z6_g2.dg"));
  CHECK(contains(z6.output, "invariant factors: 1 6"));
  CHECK(contains(z6.output, "H1 = Z/6"));
  CHECK(contains(z6.output, "homology-sphere: no"));
}

TEST_CASE("cli untwist emits the calibrated pillar twists") {
  TempFile script("poincare.script");
  TempFile cert("poincare.cert");
  proc::Result r = run(cli() + " untwist " + fixture("poincare_g2.dg") +
                       " --emit-script " + script.path + " --certificate " + cert.path);
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.output, "untwisted: true"));
  CHECK(contains(r.output, "twistpair 1"));

  std::ifstream in(script.path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text ==
        "twistpair 1 2 -1\n"
        "twistm 1 2\n"
        "twistm 2 2\n");

  proc::Result v = run(cli() + " verify " + cert.path);
  CHECK(v.exit_code == 0);
  CHECK(contains(v.output, "ok"));
}

TEST_CASE("cli untwist of an untwisted diagram emits an empty script") {
  proc::Result r = run(cli() + " untwist " + fixture("s3_genus1.dg"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "moves: 0"));
}

TEST_CASE("cli untwist rejects non-spheres with exit 3") {
  proc::Result r = run(cli() + " untwist " + fixture("lens5.dg"));
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "not a homology sphere"));
  CHECK(contains(r.output, "Z/5"));
}

TEST_CASE("cli verify failure modes") {
  TempFile cert("tampered.cert");
  {
    proc::Result mk = run(cli() + " untwist " + fixture("poincare_g2.dg") +
                          " --certificate " + cert.path);
    REQUIRE(mk.exit_code == 0);
  }
  // tamper with the final matrix: flip one B entry in the final block
  untwist::Certificate c = untwist::parse_certificate([&] {
    std::ifstream in(cert.path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  }());
  c.final.b(0, 0) += 3;
  {
    std::ofstream out(cert.path);
    out << untwist::render_certificate(c);
  }
  proc::Result bad = run(cli() + " verify " + cert.path);
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "verification failed"));
  CHECK(contains(bad.output, "B(1,1)"));

  TempFile oob("oob.cert",
               "initial\ngenus 1\nA\n1\nB\n0\nF\n0\n"
               "script\ntwistm 5 1\n"
               "final\ngenus 1\nA\n1\nB\n0\nF\n0\n"
               "untwisted true\n");
  CHECK(run(cli() + " verify " + oob.path).exit_code == 2);
}

TEST_CASE("cli knot subcommand") {
  proc::Result alex = run(cli() + " knot --pretzel 5 -3 5 --invariant alexander");
  CHECK(alex.exit_code == 0);
  CHECK(alex.output == "1 - 3*t + t^2\n");

  proc::Result jones = run(cli() + " knot --pretzel 1 1 1 --invariant jones");
  CHECK(jones.exit_code == 0);
  CHECK(jones.output == "-t^-4 + t^-3 + t^-1\n");

  proc::Result pd = run(cli() + " knot --pd " + fixture("pretzel_535.pd") +
                        " --invariant jones");
  CHECK(pd.exit_code == 0);
  CHECK(pd.output ==
        "t^-10 - t^-9 + t^-8 - 2*t^-7 + t^-6 - t^-5 + t^-3 + t^-1\n");

  TempFile unknot("unknot.pd", "# no crossings\n");
  proc::Result triv = run(cli() + " knot --pd " + unknot.path + " --invariant bracket");
  CHECK(triv.exit_code == 0);
  CHECK(triv.output == "1\n");

  CHECK(run(cli() + " knot --pretzel 2 1 1 --invariant jones").exit_code == 2);
  CHECK(run(cli() + " knot --pretzel 1 1 1 --invariant nope").exit_code == 2);
  CHECK(run(cli() + " knot --invariant jones").exit_code == 2);

  // 21 kinks: over the state-sum budget
  TempFile big("big.pd",
               untwist::render_pd(rewrites::kinked_unknot(std::vector<int>(21, 1))));
  CHECK(run(cli() + " knot --pd " + big.path + " --invariant jones").exit_code == 4);
}

TEST_CASE("cli solve-pillars") {
  proc::Result hempel = run(cli() + " solve-pillars " + fixture("hempel_system.pillars"));
  CHECK(hempel.exit_code == 0);
  CHECK(hempel.output == "x=2 y=-1 z=2\n");

  TempFile idsys("id.pillars", "effects 2 2\n1 0\n0 1\nconstants 0 0\n");
  CHECK(run(cli() + " solve-pillars " + idsys.path).output == "x=0 y=0\n");

  TempFile nosol("nosol.pillars", "effects 1 1\n2\nconstants 1\n");
  CHECK(run(cli() + " solve-pillars " + nosol.path).output == "NoSolution\n");

  TempFile nonuq("nonuq.pillars", "effects 1 2\n1 1\nconstants 1\n");
  CHECK(run(cli() + " solve-pillars " + nonuq.path).output == "NonUnique\n");

  TempFile bad("bad.pillars", "effects 1 1\nbogus\nconstants 0\n");
  CHECK(run(cli() + " solve-pillars " + bad.path).exit_code == 2);
}

TEST_CASE("cli selftest is deterministic and passes") {
  proc::Result r = run(cli() + " selftest --seed 20240715 --cases 40");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "selftest passed"));
  proc::Result again = run(cli() + " selftest --seed 20240715 --cases 40");
  CHECK(again.output == r.output);
}
