#include <algorithm>

#include "doctest.h"
#include "gst/eval.hpp"
#include "gst/prelude.hpp"
#include "gst/surface.hpp"

using namespace gst;

namespace {

std::uint64_t run_nat(const std::string& src) {
  Budget b{default_budget()};
  return readback_nat(eval_closed(parse_term(src, prelude()), b));
}

std::uint64_t apply2(const ValuePtr& f, std::uint64_t m, std::uint64_t n, Budget& b) {
  return readback_nat(apply(apply(f, nat_value(m), b), nat_value(n), b));
}

}  // namespace

TEST_CASE("prelude entries typecheck at their declared types") {
  for (const auto& [name, d] : prelude()) {
    CAPTURE(name);
    CHECK(ty_eq(typecheck_closed(d.body), d.ty));
  }
}

TEST_CASE("arithmetic against host, exhaustive to 8") {
  Budget b{default_budget()};
  ValuePtr vmax = eval_closed(prelude_decl("max").body, b);
  ValuePtr vmin = eval_closed(prelude_decl("min").body, b);
  ValuePtr vadd = eval_closed(prelude_decl("add").body, b);
  ValuePtr vmonus = eval_closed(prelude_decl("monus").body, b);
  ValuePtr vle = eval_closed(prelude_decl("le").body, b);
  for (std::uint64_t m = 0; m <= 8; ++m) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      CHECK(apply2(vmax, m, n, b) == std::max(m, n));
      CHECK(apply2(vmin, m, n, b) == std::min(m, n));
      CHECK(apply2(vadd, m, n, b) == m + n);
      CHECK(apply2(vmonus, m, n, b) == (m > n ? m - n : 0));
      CHECK(apply2(vle, m, n, b) == (m < n ? 1u : 0u));
    }
  }
}

TEST_CASE("le is strict") { CHECK(run_nat("le 3 3") == 0); }

TEST_CASE("ifz selects by zero test") {
  CHECK(run_nat("ifz_n 0 4 9") == 4);
  CHECK(run_nat("ifz_n 2 4 9") == 9);
  Decl ifz = ifz_term(arrow(ty_nat(), ty_nat()));
  CHECK(ty_eq(ifz.ty, arrow(ty_nat(), arrow(arrow(ty_nat(), ty_nat()),
                                            arrow(arrow(ty_nat(), ty_nat()),
                                                  arrow(ty_nat(), ty_nat()))))));
  std::map<std::string, Decl> names = prelude();
  names.emplace("ifz", ifz);
  CHECK(readback_nat([&] {
          Budget b{default_budget()};
          return eval_closed(
              parse_term("ifz 0 (\\n:N. suc n) (\\n:N. n) 5", names), b);
        }()) == 6);
}

TEST_CASE("phi is the running maximum") {
  Budget b{default_budget()};
  ValuePtr vphi = eval_closed(prelude_decl("phi").body, b);
  Sampler s;
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    std::vector<std::uint64_t> tab;
    for (int i = 0; i < 16; ++i) tab.push_back(rng() % 9);
    ValuePtr a = foreign([tab](std::uint64_t i) { return tab[i % 16]; });
    for (std::uint64_t n = 0; n <= 8; ++n) {
      std::uint64_t want = *std::max_element(tab.begin(), tab.begin() + n + 1);
      CHECK(readback_nat(apply(apply(vphi, a, b), nat_value(n), b)) == want);
    }
  }
  // Lemma clause at 0
  ValuePtr a0 = foreign([](std::uint64_t i) { return 7 - (i % 3); });
  CHECK(readback_nat(apply(apply(vphi, a0, b), nat_value(0), b)) == 7);
}

TEST_CASE("sequence operations") {
  Budget b{default_budget()};
  auto names = prelude();
  CHECK(run_nat("seq_len (seq_take (\\i:N. suc i) 4)") == 4);
  CHECK(run_nat("seq_hat (seq_take (\\i:N. suc i) 2) 5") == 0);
  CHECK(run_nat("seq_hat (seq_take (\\i:N. suc i) 2) 1") == 2);
  CHECK(run_nat("seq_len (seq_append (seq_take (\\i:N. 0) 2) 9)") == 3);
  CHECK(run_nat("pr1[N -> N, N] (seq_append (seq_take (\\i:N. 0) 2) 9) 2") == 9);
  Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    std::uint64_t len = rng() % 5;
    std::vector<std::uint64_t> s;
    for (std::uint64_t i = 0; i < len; ++i) s.push_back(rng() % 6);
    std::vector<std::uint64_t> atab;
    for (int i = 0; i < 8; ++i) atab.push_back(rng() % 6);
    ValuePtr sv = pair_value(foreign([s](std::uint64_t i) { return i < s.size() ? s[i] : 0; }),
                             nat_value(len));
    ValuePtr av = foreign([atab](std::uint64_t i) { return atab[i % 8]; });
    ValuePtr vconcat = eval_closed(prelude_decl("seq_concat").body, b);
    std::uint64_t i = rng() % 8;
    std::uint64_t want = i < len ? s[i] : atab[(i - len) % 8];
    CHECK(readback_nat(apply(apply(apply(vconcat, sv, b), av, b), nat_value(i), b)) == want);
  }
}

TEST_CASE("theta computes maximum images") {
  Budget b{default_budget()};
  ValuePtr vtheta = eval_closed(prelude_decl("theta").body, b);
  ValuePtr delta = foreign([](std::uint64_t i) { return i == 0 ? 2 : 1; });
  // base clause: modulus 0 means constant, value f(delta)
  ValuePtr fconst = host_fn([](const ValuePtr&, Budget&) { return nat_value(5); });
  CHECK(readback_nat(apply(apply(apply(vtheta, nat_value(0), b), fconst, b), delta, b)) == 5);
  // head function with delta 0 = 2: maximum of a0 over a0 <= 2 is 2
  Budget b2{default_budget()};
  ValuePtr vhead = eval_closed(parse_term("\\a:N -> N. a 0"), b2);
  CHECK(readback_nat(apply(apply(apply(vtheta, nat_value(1), b2), vhead, b2), delta, b2)) == 2);
  // constant function at sampled m
  for (std::uint64_t m = 0; m <= 3; ++m) {
    Budget b3{default_budget()};
    CHECK(readback_nat(apply(apply(apply(vtheta, nat_value(m), b3), fconst, b3), delta, b3)) ==
          5);
  }
}

TEST_CASE("theta brute-force comparison at small cubes") {
  Budget b{default_budget()};
  ValuePtr vtheta = eval_closed(prelude_decl("theta").body, b);
  // f(a) = max(a0, a1) is uniformly continuous with modulus 2 on any cube
  ValuePtr f = eval_closed(parse_term("\\a:N -> N. max (a 0) (a 1)", prelude()), b);
  ValuePtr delta = foreign([](std::uint64_t) { return 2; });
  // host brute force: max over a0, a1 <= 2 of max(a0, a1) = 2
  CHECK(readback_nat(apply(apply(apply(vtheta, nat_value(2), b), f, b), delta, b)) == 2);
}

TEST_CASE("psi satisfies the bar equations") {
  Budget b{default_budget()};
  std::map<std::string, Decl> names = prelude();
  names.emplace("psi", psi_term(ty_nat()));
  // n < |s|: first clause
  CHECK(readback_nat(eval_closed(
            parse_term("psi 2 (\\s:(N -> N) * N. seq_len s) "
                       "(\\s:(N -> N) * N. \\f:N -> N. 99) (seq_take (\\i:N. i) 3)",
                       names),
            b)) == 3);
  // n >= |s| at the empty sequence: second clause, G = len, H = \s f. f 0
  CHECK(readback_nat(eval_closed(
            parse_term("psi 1 (\\s:(N -> N) * N. seq_len s) "
                       "(\\s:(N -> N) * N. \\f:N -> N. f 0) (seq_take (\\i:N. 0) 0)",
                       names),
            b)) == 2);
  // second clause extensionally: psi 0 (G, H, nil) = H(nil, \m. psi 0 (G, H, [m]))
  std::uint64_t lhs = readback_nat(eval_closed(
      parse_term("psi 0 (\\s:(N -> N) * N. seq_len s) "
                 "(\\s:(N -> N) * N. \\f:N -> N. add (f 0) (f 3)) (seq_take (\\i:N. 0) 0)",
                 names),
      b));
  std::uint64_t rhs = readback_nat(eval_closed(
      parse_term("add (psi 0 (\\s:(N -> N) * N. seq_len s) "
                 "(\\s:(N -> N) * N. \\f:N -> N. add (f 0) (f 3)) (seq_append (seq_take (\\i:N. 0) 0) 0)) "
                 "(psi 0 (\\s:(N -> N) * N. seq_len s) "
                 "(\\s:(N -> N) * N. \\f:N -> N. add (f 0) (f 3)) (seq_append (seq_take (\\i:N. 0) 0) 3))",
                 names),
      b));
  CHECK(lhs == rhs);
}

TEST_CASE("unknown prelude name") {
  CHECK_THROWS_AS(prelude_decl("nope"), Error);
}
