// Command-line surface for the diagram calculus: file validation, homology
// reports, untwisting with replayable certificates, certificate
// verification, knot polynomials, and the twist-system solver.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 not a homology sphere, 4 resource budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "untwist/io.hpp"
#include "untwist/knots.hpp"
#include "untwist/random_data.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotHomologySphere = 3;
constexpr int kExitTooLarge = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw untwist::ParseError(0, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw untwist::ParseError(0, "cannot write file: " + path);
  out << text;
}

void print_homology(const untwist::HomologyReport& rep) {
  std::cout << "invariant factors:";
  if (rep.invariant_factors.empty()) std::cout << " none";
  for (const untwist::Int& f : rep.invariant_factors) std::cout << ' ' << f;
  std::cout << '\n';
  std::cout << "H1 = " << rep.group_description() << '\n';
}

int cmd_validate(const std::string& path) {
  untwist::DiagramFile file = untwist::parse_diagram(read_file(path));
  std::vector<untwist::Violation> violations = untwist::validate(file.datum);
  if (violations.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const untwist::Violation& v : violations)
    std::cout << "violation: " << v.describe() << '\n';
  return kExitVerifyFailed;
}

int cmd_homology(const std::string& path) {
  untwist::DiagramFile file = untwist::parse_diagram(read_file(path));
  untwist::HomologyReport rep = untwist::homology(file.datum);
  print_homology(rep);
  std::cout << "homology-sphere: " << (rep.is_homology_sphere ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_untwist(const std::string& path, const std::string& script_out,
                const std::string& cert_out) {
  untwist::DiagramFile file = untwist::parse_diagram(read_file(path));
  untwist::Certificate cert;
  try {
    cert = untwist::untwist(file.datum);
  } catch (const untwist::NotHomologySphere& e) {
    std::cout << "not a homology sphere\n";
    print_homology(e.report);
    return kExitNotHomologySphere;
  }

  std::size_t flips = 0, slides = 0, reframes = 0, pairs = 0, meridians = 0;
  for (const untwist::Move& m : cert.script.moves) switch (m.kind) {
      case untwist::MoveKind::OrientReverse: ++flips; break;
      case untwist::MoveKind::Slide: ++slides; break;
      case untwist::MoveKind::Reframe: ++reframes; break;
      case untwist::MoveKind::TwistPair: ++pairs; break;
      case untwist::MoveKind::TwistMeridian: ++meridians; break;
    }
  std::cout << "script:\n" << untwist::render_script(cert.script);
  std::cout << "moves: " << cert.script.moves.size() << " (flip " << flips
            << ", slide " << slides << ", reframe " << reframes << ", twistpair "
            << pairs << ", twistm " << meridians << ")\n";
  std::cout << "final A:\n" << cert.final.a;
  std::cout << "final B:\n" << cert.final.b;
  std::cout << "final F:\n" << cert.final.f;
  std::cout << "untwisted: " << (cert.untwisted ? "true" : "false") << '\n';

  if (!script_out.empty()) write_file(script_out, untwist::render_script(cert.script));
  if (!cert_out.empty()) write_file(cert_out, untwist::render_certificate(cert));
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  untwist::Certificate cert = untwist::parse_certificate(read_file(path));
  untwist::HeegaardDatum replayed = untwist::apply_script(cert.initial, cert.script);
  bool matches = replayed == cert.final;
  bool flag_ok = untwist::is_untwisted(cert.final) == cert.untwisted;
  if (matches && flag_ok) {
    std::cout << "ok\n";
    return kExitOk;
  }
  if (!matches) {
    const std::size_t g = cert.final.genus();
    const untwist::IntMatrix* got[3] = {&replayed.a, &replayed.b, &replayed.f};
    const untwist::IntMatrix* want[3] = {&cert.final.a, &cert.final.b, &cert.final.f};
    const char* names = "ABF";
    for (int mtx = 0; mtx < 3; ++mtx)
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
          if ((*got[mtx])(i, j) != (*want[mtx])(i, j)) {
            std::cout << "verification failed: final " << names[mtx] << "("
                      << i + 1 << "," << j + 1 << "): replayed "
                      << (*got[mtx])(i, j) << ", certificate "
                      << (*want[mtx])(i, j) << '\n';
            return kExitVerifyFailed;
          }
  }
  std::cout << "verification failed: untwisted flag should be "
            << (untwist::is_untwisted(cert.final) ? "true" : "false") << '\n';
  return kExitVerifyFailed;
}

int cmd_knot(const std::vector<long>& pretzel, const std::string& pd_path,
             const std::string& invariant) {
  untwist::PDCode pd;
  if (!pretzel.empty()) {
    pd = untwist::pretzel_pd(pretzel[0], pretzel[1], pretzel[2]);
  } else if (!pd_path.empty()) {
    pd = untwist::parse_pd(read_file(pd_path));
  } else {
    throw CLI::ValidationError("knot", "need --pretzel or --pd");
  }
  untwist::LaurentPoly poly =
      invariant == "jones"     ? untwist::jones(pd)
      : invariant == "bracket" ? untwist::kauffman_bracket(pd)
                               : untwist::alexander(pd);
  std::cout << poly.str() << '\n';
  return kExitOk;
}

int cmd_solve_pillars(const std::string& path) {
  untwist::PillarSystem sys = untwist::parse_pillar_system(read_file(path));
  untwist::PillarSolution sol = untwist::solve_pillar_system(sys);
  switch (sol.status) {
    case untwist::PillarStatus::NoSolution: std::cout << "NoSolution\n"; break;
    case untwist::PillarStatus::NonUnique: std::cout << "NonUnique\n"; break;
    case untwist::PillarStatus::Unique: {
      static const char* xyz[3] = {"x", "y", "z"};
      for (std::size_t k = 0; k < sol.values.size(); ++k) {
        if (k) std::cout << ' ';
        if (sol.values.size() <= 3)
          std::cout << xyz[k] << '=' << sol.values[k];
        else
          std::cout << 't' << k + 1 << '=' << sol.values[k];
      }
      std::cout << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, std::size_t cases) {
  untwist::Rng rng(seed);
  std::size_t ran = 0;

  // normal forms: multiply-back identities
  for (std::size_t t = 0; t < cases / 4 + 1; ++t, ++ran) {
    std::size_t n = static_cast<std::size_t>(rng.rand_in(1, 5));
    untwist::IntMatrix m = untwist::random_matrix(rng, n, n, 8);
    untwist::SnfResult s = untwist::smith_normal_form(m);
    if (s.u * s.d * s.v != m) {
      std::cout << "selftest FAILED: snf multiply-back\n" << untwist::to_string(m);
      return kExitVerifyFailed;
    }
    untwist::IntMatrix sl = untwist::random_sl(rng, n, 12, 2);
    untwist::IntMatrix prod = untwist::IntMatrix::identity(n);
    for (const untwist::Transvection& f : untwist::elementary_factorization(sl))
      prod = prod * untwist::transvection_matrix(n, f);
    if (prod != sl) {
      std::cout << "selftest FAILED: factorization multiply-back\n";
      return kExitVerifyFailed;
    }
  }

  // move calculus: invariants and round-trips
  for (std::size_t t = 0; t < cases; ++t, ++ran) {
    std::size_t g = static_cast<std::size_t>(rng.rand_in(1, 5));
    untwist::HeegaardDatum d = untwist::random_homology_sphere(rng, g, 3, 6);
    untwist::MoveScript s = untwist::random_script(rng, g, 8, 2);
    untwist::HeegaardDatum after = untwist::apply_script(d, s);
    if (!untwist::is_valid(after)) {
      std::cout << "selftest FAILED: move broke datum invariants\n";
      return kExitVerifyFailed;
    }
    if (untwist::apply_script(after, untwist::inverse(s)) != d) {
      std::cout << "selftest FAILED: script round-trip\n";
      return kExitVerifyFailed;
    }
  }

  // untwisting: pipeline output verifies and lands untwisted
  for (std::size_t t = 0; t < cases / 2 + 1; ++t, ++ran) {
    std::size_t g = static_cast<std::size_t>(rng.rand_in(0, 5));
    untwist::HeegaardDatum d = untwist::random_homology_sphere(rng, g, 3, 8);
    untwist::Certificate cert = untwist::untwist(d);
    if (!untwist::verify(cert) || !cert.untwisted) {
      std::cout << "selftest FAILED: untwist certificate\n";
      return kExitVerifyFailed;
    }
  }

  std::cout << "selftest passed: " << ran << " cases (seed " << seed << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homological untwisting of Heegaard diagrams"};
  app.require_subcommand(1);

  std::string path, script_out, cert_out, pd_path, invariant;
  std::vector<long> pretzel;
  std::uint64_t seed = 20250101;
  std::size_t cases = 200;

  CLI::App* validate = app.add_subcommand("validate", "check a diagram file's invariants");
  validate->add_option("file", path)->required();

  CLI::App* homology = app.add_subcommand("homology", "first homology of the defined manifold");
  homology->add_option("file", path)->required();

  CLI::App* untw = app.add_subcommand("untwist", "emit and verify an untwisting script");
  untw->add_option("file", path)->required();
  untw->add_option("--emit-script", script_out, "write the move script here");
  untw->add_option("--certificate", cert_out, "write a replayable certificate here");

  CLI::App* verify = app.add_subcommand("verify", "replay a certificate independently");
  verify->add_option("file", path)->required();

  CLI::App* knot = app.add_subcommand("knot", "knot polynomial invariants");
  knot->add_option("--pretzel", pretzel, "three odd half-twist counts")->expected(3);
  knot->add_option("--pd", pd_path, "planar diagram file");
  knot->add_option("--invariant", invariant, "jones | alexander | bracket")
      ->required()
      ->check(CLI::IsMember({"jones", "alexander", "bracket"}));

  CLI::App* pillars = app.add_subcommand("solve-pillars", "solve a twist-count system exactly");
  pillars->add_option("file", path)->required();

  CLI::App* selftest = app.add_subcommand("selftest", "randomized property checks");
  selftest->add_option("--seed", seed, "RNG seed");
  selftest->add_option("--cases", cases, "cases per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(path);
    if (app.got_subcommand(homology)) return cmd_homology(path);
    if (app.got_subcommand(untw)) return cmd_untwist(path, script_out, cert_out);
    if (app.got_subcommand(verify)) return cmd_verify(path);
    if (app.got_subcommand(knot)) return cmd_knot(pretzel, pd_path, invariant);
    if (app.got_subcommand(pillars)) return cmd_solve_pillars(path);
    if (app.got_subcommand(selftest)) return cmd_selftest(seed, cases);
  } catch (const untwist::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const untwist::TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const untwist::NotAKnot& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const untwist::InvalidDatum& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.get_name() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
