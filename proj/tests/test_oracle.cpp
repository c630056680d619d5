#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gst/extract.hpp"
#include "gst/oracle.hpp"
#include "gst/surface.hpp"

using namespace gst;

namespace {

std::vector<Decl> corpus() {
  std::ifstream in(GST_CORPUS_PATH);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), prelude()).decls;
}

TmPtr corpus_def(const std::string& name) {
  for (const auto& d : corpus())
    if (d.name == name) return d.body;
  FAIL("missing corpus definition ", name);
  return nullptr;
}

}  // namespace

TEST_CASE("check_continuity accepts a correct modulus") {
  Sampler s;
  TmPtr f = parse_term("\\a:N -> N. 5");
  TmPtr m = parse_term("\\a:N -> N. 0");
  VerificationReport r = check_continuity(f, m, s);
  CHECK(r.pass());
  CHECK(r.seed == 42);
  CHECK(r.samples == 100);
}

TEST_CASE("check_continuity rejects a lying modulus") {
  Sampler s;
  TmPtr f = parse_term("\\a:N -> N. a 0");
  TmPtr m = parse_term("\\a:N -> N. 0");
  VerificationReport r = check_continuity(f, m, s);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.counterexamples.empty());
  CHECK_FALSE(r.counterexamples[0].inputs.empty());
}

TEST_CASE("check_continuity on an extracted modulus") {
  Sampler s;
  TmPtr t43 = corpus_def("t43");
  ContinuityPair p = continuity_modulus(t43);
  CHECK(check_continuity(t43, p.modulus, s).pass());
}

TEST_CASE("check_uniform_continuity accepts and rejects") {
  Seq one = [](std::uint64_t) { return 1; };
  Seq three = [](std::uint64_t) { return 3; };
  CHECK(check_uniform_continuity(parse_term("\\a:N -> N. 5"),
                                 parse_term("\\a:N -> N. 0"), three)
            .pass());
  TmPtr head = parse_term("\\a:N -> N. a 0");
  ContinuityPair p = uniform_continuity_modulus(head);
  CHECK(check_uniform_continuity(head, p.modulus, one).pass());
  // a 1 needs two entries; the modulus 1 misses the second
  VerificationReport bad = check_uniform_continuity(parse_term("\\a:N -> N. a 1"),
                                                    parse_term("\\a:N -> N. 1"), one);
  CHECK_FALSE(bad.pass());
}

TEST_CASE("check_uniform_continuity respects the enumeration cap") {
  Seq big = [](std::uint64_t) { return 9; };
  TmPtr f = parse_term("\\a:N -> N. a 9");
  TmPtr m = parse_term("\\a:N -> N. 10");
  CHECK_THROWS_AS(check_uniform_continuity(f, m, big, 2, 1000), Error);
}

TEST_CASE("check_majorizes on numerals and constants") {
  Sampler s;
  CHECK(check_majorizes(numeral(3), numeral(5), ty_nat(), s).pass());
  CHECK_FALSE(check_majorizes(numeral(5), numeral(3), ty_nat(), s).pass());
  CHECK(check_majorizes(suc(), majorant(suc()), arrow(ty_nat(), ty_nat()), s).pass());
  TmPtr mx = prelude_decl("max").body;
  CHECK(check_majorizes(mx, majorant(mx), prelude_decl("max").ty, s).pass());
  // suc is not majorized by the identity
  CHECK_FALSE(check_majorizes(suc(), parse_term("\\n:N. n"), arrow(ty_nat(), ty_nat()), s).pass());
}

TEST_CASE("check_gbr on extracted triples and on psi") {
  Sampler s;
  BarTriple tc = bar_triple(parse_term("\\a:N -> N. 7"), ty_nat());
  CHECK(check_gbr(tc.secures, tc.recursor, tc.motive, s).pass());
  BarTriple th = bar_triple(parse_term("\\a:N -> N. a 0"), ty_nat());
  CHECK(check_gbr(th.secures, th.recursor, th.motive, s).pass());
  // psi n against the predicate "n < |s|"
  auto names = prelude();
  names.emplace("psi", psi_term(ty_nat()));
  for (std::uint64_t n = 0; n <= 2; ++n) {
    CAPTURE(n);
    TmPtr S = parse_term("\\s:(N -> N) * N. le " + std::to_string(n) + " (seq_len s)", names);
    TmPtr B = parse_term("psi " + std::to_string(n), names);
    CHECK(check_gbr(S, B, ty_nat(), s).pass());
  }
  // a wrong recursor: ignores H below the bar
  TmPtr Sw = parse_term("\\s:(N -> N) * N. le 1 (seq_len s)", names);
  TmPtr Bw = parse_term("\\g:((N -> N) * N) -> N. \\h:((N -> N) * N) -> (N -> N) -> N. "
                        "\\s:(N -> N) * N. g s",
                        names);
  CHECK_FALSE(check_gbr(Sw, Bw, ty_nat(), s).pass());
}

TEST_CASE("check_secures_monotone") {
  Sampler s;
  BarTriple th = bar_triple(parse_term("\\a:N -> N. a 0"), ty_nat());
  CHECK(check_secures_monotone(th.secures, parse_term("\\a:N -> N. a 0"), s).pass());
  // the constantly-unsecured predicate passes vacuously: both clauses only
  // constrain sequences the predicate already secures
  TmPtr never = parse_term("\\s:(N -> N) * N. 0", prelude());
  CHECK(check_secures_monotone(never, parse_term("\\a:N -> N. a 0"), s).pass());
  // securing everything fails: the head still depends on the tail at nil
  TmPtr always = parse_term("\\s:(N -> N) * N. 1", prelude());
  CHECK_FALSE(check_secures_monotone(always, parse_term("\\a:N -> N. a 0"), s).pass());
  // a non-monotone predicate: secured only at length exactly 1
  TmPtr spike = parse_term(
      "\\s:(N -> N) * N. min (le 0 (seq_len s)) (le (seq_len s) 2)", prelude());
  VerificationReport r =
      check_secures_monotone(spike, parse_term("\\a:N -> N. a 0"), s);
  CHECK_FALSE(r.pass());
}

TEST_CASE("logical relation holds for sound nuclei") {
  Sampler s;
  SimpleNucleus maj = nucleus(NucleusKind::Majorizability);
  TmPtr mx = prelude_decl("max").body;
  TmPtr mxj = tm_translate_closed(Style::Gentzen, maj, mx);
  CHECK(check_logical_relation(maj, maj_spec(), mx, mxj, prelude_decl("max").ty, s).pass());

  SimpleNucleus cont = nucleus(NucleusKind::Continuity);
  Seq alpha = [](std::uint64_t i) { return i % 3; };
  TmPtr sucj = tm_translate_closed(Style::Gentzen, cont, suc());
  CHECK(check_logical_relation(cont, cont_spec(alpha), suc(), sucj,
                               arrow(ty_nat(), ty_nat()), s)
            .pass());

  SimpleNucleus bar = nucleus(NucleusKind::BarRecursion);
  TmPtr zj = tm_translate_closed(Style::Gentzen, bar, zero());
  CHECK(check_logical_relation(bar, bar_spec(alpha), zero(), zj, ty_nat(), s).pass());
}

TEST_CASE("logical relation detects a broken kappa") {
  Sampler s;
  SimpleNucleus cont = nucleus(NucleusKind::Continuity);
  SimpleNucleus broken = cont;
  // drop the outer modulus: the composite forgets how much of alpha the
  // first stage read
  const std::string A = "(N -> N) -> N";
  broken.kappa = parse_term(
      "\\g:N -> (" + A + ") * (" + A + "). \\w:(" + A + ") * (" + A + "). "
      "pair[" + A + ", " + A + "] "
      "(\\a:N -> N. pr1[" + A + ", " + A + "] (g (pr1[" + A + ", " + A + "] w a)) a) "
      "(\\a:N -> N. pr2[" + A + ", " + A + "] (g (pr1[" + A + ", " + A + "] w a)) a)");
  REQUIRE(ty_eq(typecheck_closed(broken.kappa), typecheck_closed(cont.kappa)));
  Seq alpha = [](std::uint64_t i) { return i % 3; };
  TmPtr sucj = tm_translate_closed(Style::Gentzen, broken, suc());
  VerificationReport r = check_logical_relation(broken, cont_spec(alpha), suc(), sucj,
                                                arrow(ty_nat(), ty_nat()), s);
  CHECK_FALSE(r.pass());
  for (const auto& c : r.counterexamples)
    CHECK(c.inputs.rfind("kappa", 0) == 0);
}

TEST_CASE("report json is deterministic and well formed") {
  Sampler s;
  TmPtr f = parse_term("\\a:N -> N. a 0");
  TmPtr m = parse_term("\\a:N -> N. 0");
  std::string j1 = check_continuity(f, m, s).to_json();
  std::string j2 = check_continuity(f, m, s).to_json();
  CHECK(j1 == j2);
  CHECK(j1.find("\"property\"") != std::string::npos);
  CHECK(j1.find("\"verdict\"") != std::string::npos);
  CHECK(j1.find("\"counterexamples\"") != std::string::npos);
  std::string ok = check_continuity(parse_term("\\a:N -> N. 5"), m, s).to_json();
  CHECK(ok.find("pass") != std::string::npos);
}
