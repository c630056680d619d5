#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gst/eval.hpp"
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

bool is_functional(const TyPtr& t) {
  return ty_eq(t, arrow(arrow(ty_nat(), ty_nat()), ty_nat()));
}

std::uint64_t run_on(const TmPtr& f, Seq alpha) {
  Budget b{default_budget()};
  return readback_nat(apply(eval_closed(f, b), foreign(alpha), b));
}

}  // namespace

TEST_CASE("majorant of suc dominates suc") {
  TmPtr m = majorant(suc());
  CHECK(ty_eq(typecheck_closed(m), arrow(ty_nat(), ty_nat())));
  Budget b{default_budget()};
  ValuePtr mv = eval_closed(m, b);
  for (std::uint64_t n = 0; n <= 10; ++n)
    CHECK(readback_nat(apply(mv, nat_value(n), b)) >= n + 1);
}

TEST_CASE("majorant of a numeral is itself") {
  Budget b{default_budget()};
  CHECK(readback_nat(eval_closed(majorant(zero()), b)) == 0);
  CHECK(readback_nat(eval_closed(majorant(numeral(4)), b)) == 4);
}

TEST_CASE("majorant of max dominates exhaustively") {
  TmPtr m = majorant(prelude_decl("max").body);
  Budget b{default_budget()};
  ValuePtr mv = eval_closed(m, b);
  ValuePtr fv = eval_closed(prelude_decl("max").body, b);
  for (std::uint64_t x = 0; x <= 6; ++x)
    for (std::uint64_t y = 0; y <= 6; ++y) {
      std::uint64_t got = readback_nat(apply(apply(mv, nat_value(x), b), nat_value(y), b));
      CHECK(got >= readback_nat(apply(apply(fv, nat_value(x), b), nat_value(y), b)));
    }
}

TEST_CASE("continuity pair of t43 has modulus zero") {
  ContinuityPair p = continuity_modulus(corpus_def("t43"));
  for (std::uint64_t s = 0; s < 20; ++s) {
    Seq alpha = [s](std::uint64_t i) { return (i + s) % 5; };
    CHECK(run_on(p.modulus, alpha) == 0);
    CHECK(run_on(p.value, alpha) == 0);
  }
}

TEST_CASE("continuity pair of a constant functional") {
  ContinuityPair p = continuity_modulus(corpus_def("c_const5"));
  Seq alpha = [](std::uint64_t i) { return 2 * i; };
  CHECK(run_on(p.value, alpha) == 5);
  CHECK(run_on(p.modulus, alpha) == 0);
}

TEST_CASE("continuity pair of head reads one entry") {
  ContinuityPair p = continuity_modulus(corpus_def("c_head"));
  Seq alpha = [](std::uint64_t i) { return i + 4; };
  CHECK(run_on(p.value, alpha) == 4);
  CHECK(run_on(p.modulus, alpha) == 1);
}

TEST_CASE("extracted values and moduli verify on every functional") {
  Sampler s;
  for (const auto& d : corpus()) {
    if (!is_functional(d.ty)) continue;
    CAPTURE(d.name);
    ContinuityPair p = continuity_modulus(d.body);
    CHECK(ty_eq(typecheck_closed(p.value), d.ty));
    CHECK(ty_eq(typecheck_closed(p.modulus), d.ty));
    // value agrees with the source
    Budget b{default_budget()};
    Rng rng(42);
    CHECK(ext_eq_sampled(eval_closed(d.body, b), eval_closed(p.value, b), d.ty, s, rng, b, 50));
    // modulus is a genuine modulus of pointwise continuity
    VerificationReport r = check_continuity(d.body, p.modulus, s);
    CAPTURE(r.to_json());
    CHECK(r.pass());
  }
}

TEST_CASE("uniform continuity moduli verify at two cubes") {
  Sampler s;
  for (const char* name : {"c_const5", "c_head", "t43", "c_sum01", "c_max01"}) {
    CAPTURE(name);
    ContinuityPair p = uniform_continuity_modulus(corpus_def(name));
    for (std::uint64_t bound : {1, 2}) {
      Seq delta = [bound](std::uint64_t) { return bound; };
      VerificationReport r = check_uniform_continuity(corpus_def(name), p.modulus, delta);
      CAPTURE(r.to_json());
      CHECK(r.pass());
    }
  }
  ContinuityPair pc = uniform_continuity_modulus(corpus_def("c_const5"));
  CHECK(run_on(pc.modulus, [](std::uint64_t) { return 3; }) == 0);
  ContinuityPair ph = uniform_continuity_modulus(corpus_def("c_head"));
  CHECK(run_on(ph.modulus, [](std::uint64_t) { return 3; }) >= 1);
}

TEST_CASE("bar triple of head secures after one entry") {
  BarTriple t = bar_triple(corpus_def("c_head"), ty_nat());
  CHECK(ty_eq(typecheck_closed(t.value), arrow(arrow(ty_nat(), ty_nat()), ty_nat())));
  Budget b{default_budget()};
  ValuePtr sv = eval_closed(t.secures, b);
  for (std::uint64_t len = 0; len <= 3; ++len) {
    ValuePtr s = pair_value(foreign([](std::uint64_t) { return 2; }), nat_value(len));
    CHECK(readback_nat(apply(sv, s, b)) == (len >= 1 ? 1 : 0));
  }
}

TEST_CASE("bar triple of a constant secures everywhere") {
  BarTriple t = bar_triple(corpus_def("c_const5"), ty_nat());
  Budget b{default_budget()};
  ValuePtr sv = eval_closed(t.secures, b);
  for (std::uint64_t len = 0; len <= 3; ++len) {
    ValuePtr s = pair_value(foreign([](std::uint64_t) { return 0; }), nat_value(len));
    CHECK(readback_nat(apply(sv, s, b)) == 1);
  }
  Seq alpha = [](std::uint64_t i) { return i; };
  CHECK(run_on(t.value, alpha) == 5);
}

TEST_CASE("bar triples pass the oracles on every functional") {
  Sampler s;
  for (const auto& d : corpus()) {
    if (!is_functional(d.ty)) continue;
    CAPTURE(d.name);
    BarTriple t = bar_triple(d.body, ty_nat());
    VerificationReport r1 = check_secures_monotone(t.secures, d.body, s);
    CAPTURE(r1.to_json());
    CHECK(r1.pass());
    VerificationReport r2 = check_gbr(t.secures, t.recursor, t.motive, s);
    CAPTURE(r2.to_json());
    CHECK(r2.pass());
  }
}

TEST_CASE("uniform continuity modulus through bar recursion") {
  TmPtr mc = uc_modulus_via_bar(corpus_def("c_const5"));
  CHECK(ty_eq(typecheck_closed(mc), arrow(arrow(ty_nat(), ty_nat()), ty_nat())));
  CHECK(run_on(mc, [](std::uint64_t) { return 3; }) == 0);
  TmPtr mh = uc_modulus_via_bar(corpus_def("c_head"));
  CHECK(run_on(mh, [](std::uint64_t) { return 4; }) == 1);
  // and it really is a uniform modulus
  for (const char* name : {"c_head", "t43", "c_sum01"}) {
    CAPTURE(name);
    TmPtr m = uc_modulus_via_bar(corpus_def(name));
    Seq delta = [](std::uint64_t) { return 2; };
    VerificationReport r = check_uniform_continuity(corpus_def(name), m, delta);
    CAPTURE(r.to_json());
    CHECK(r.pass());
  }
}

TEST_CASE("kuroda modulus values") {
  ContinuityPair p43 = kuroda_modulus(corpus_def("t43"));
  Seq alpha = [](std::uint64_t i) { return i % 4; };
  CHECK(run_on(p43.modulus, alpha) == 1);
  CHECK(run_on(p43.value, alpha) == 0);
  ContinuityPair pc = kuroda_modulus(corpus_def("c_const5"));
  CHECK(run_on(pc.modulus, alpha) == 0);
  CHECK(run_on(pc.value, alpha) == 5);
  ContinuityPair ph = kuroda_modulus(corpus_def("c_head"));
  CHECK(run_on(ph.modulus, alpha) == 1);
  CHECK(run_on(ph.value, alpha) == 0);
}

TEST_CASE("kuroda moduli verify on every functional") {
  Sampler s;
  for (const auto& d : corpus()) {
    if (!is_functional(d.ty)) continue;
    CAPTURE(d.name);
    ContinuityPair p = kuroda_modulus(d.body);
    CHECK(ty_eq(typecheck_closed(p.modulus), d.ty));
    VerificationReport r = check_continuity(d.body, p.modulus, s);
    CAPTURE(r.to_json());
    CHECK(r.pass());
  }
}

TEST_CASE("extractors reject ill-shaped inputs") {
  CHECK_THROWS_AS(continuity_modulus(numeral(3)), Error);
  CHECK_THROWS_AS(uniform_continuity_modulus(suc()), Error);
  CHECK_THROWS_AS(bar_triple(parse_term("\\n:N. n"), ty_nat()), Error);
  CHECK_THROWS_AS(majorant(parse_term("inl[N, N] 0")), Error);
}
