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

}  // namespace

TEST_CASE("rec base and step rules") {
  CHECK(run_nat("rec[N] 7 (\\k:N. \\r:N. 0) 0") == 7);
  CHECK(run_nat("rec[N] 0 (\\k:N. \\r:N. suc r) 4") == 4);
  // rec(a, f, n+1) = f(n, rec(a, f, n))
  CHECK(run_nat("rec[N] 2 (\\k:N. \\r:N. add k r) 3") == 2 + 0 + 1 + 2);
}

TEST_CASE("max on numerals") {
  CHECK(run_nat("max 3 5") == 5);
  CHECK(run_nat("max 5 3") == 5);
  for (std::uint64_t n = 0; n <= 8; ++n)
    CHECK(run_nat("max 0 " + std::to_string(n)) == n);
}

TEST_CASE("suc application") { CHECK(run_nat("suc 4") == 5); }

TEST_CASE("products and sums compute") {
  CHECK(run_nat("pr1[N, N] (pair[N, N] 3 9)") == 3);
  CHECK(run_nat("pr2[N, N] (pair[N, N] 3 9)") == 9);
  CHECK(run_nat("case[N, N, N] (\\n:N. n) (\\n:N. suc n) (inl[N, N] 4)") == 4);
  CHECK(run_nat("case[N, N, N] (\\n:N. n) (\\n:N. suc n) (inr[N, N] 4)") == 5);
}

TEST_CASE("readback rejects non-numerals") {
  Budget b{default_budget()};
  ValuePtr v = eval_closed(parse_term("\\n:N. n"), b);
  CHECK_THROWS_AS(readback_nat(v), Error);
}

TEST_CASE("foreign transparency") {
  Budget b{default_budget()};
  ValuePtr f = foreign([](std::uint64_t n) { return 2 * n + 1; });
  for (std::uint64_t k = 0; k <= 8; ++k)
    CHECK(readback_nat(apply(f, nat_value(k), b)) == 2 * k + 1);
  // object-level application of a foreign sequence
  ValuePtr g = eval_closed(parse_term("\\a:N -> N. a 3"), b);
  CHECK(readback_nat(apply(g, f, b)) == 7);
}

TEST_CASE("call-by-name ignores unused arguments") {
  // the argument a 0 is never forced by rec with a literal scrutinee
  Budget b{100};
  TmPtr t = parse_term("\\a:N -> N. rec[N] (a 0) (\\n:N. \\m:N. 0) 1", prelude());
  ValuePtr v = eval_closed(t, b);
  ValuePtr looping = foreign([](std::uint64_t) -> std::uint64_t {
    FAIL("the sequence must not be forced");
    return 0;
  });
  CHECK(readback_nat(apply(v, looping, b)) == 0);
}

TEST_CASE("budget exhaustion is reported") {
  Budget b{50};
  TmPtr t = parse_term("rec[N] 0 (\\k:N. \\r:N. suc r) 40", prelude());
  CHECK_THROWS_AS(eval_closed(t, b), Error);
}

TEST_CASE("subject reduction on sampled closed applications") {
  Sampler s;
  Rng rng(7);
  Budget b{default_budget()};
  TmPtr terms[] = {
      parse_term("\\n:N. add n n", prelude()),
      parse_term("\\n:N. pair[N, N] n (suc n)", prelude()),
      parse_term("\\n:N. inl[N, N -> N] n", prelude()),
  };
  TyPtr results[] = {ty_nat(), prod(ty_nat(), ty_nat()), sum(ty_nat(), arrow(ty_nat(), ty_nat()))};
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 20; ++k) {
      ValuePtr arg = sample_value(ty_nat(), s, rng);
      ValuePtr v = apply(eval_closed(terms[i], b), arg, b);
      CHECK(value_fits_type(v, results[i], b));
    }
  }
}

TEST_CASE("rec computation rules extensionally at motive N") {
  Sampler s;
  Rng rng(11);
  Budget b{default_budget()};
  for (int k = 0; k < 50; ++k) {
    std::uint64_t a = rng() % 9, n = rng() % 6;
    std::uint64_t c = rng() % 5, d = rng() % 5;
    std::string f = "(\\k:N. \\r:N. add (add k " + std::to_string(c) + ") (add r " +
                    std::to_string(d) + "))";
    std::string base = std::to_string(a);
    CHECK(run_nat("rec[N] " + base + " " + f + " 0") == a);
    std::uint64_t lhs = run_nat("rec[N] " + base + " " + f + " " + std::to_string(n + 1));
    std::uint64_t rhs = run_nat(f + " " + std::to_string(n) + " (rec[N] " + base + " " + f +
                                " " + std::to_string(n) + ")");
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ext_eq_sampled basics") {
  Sampler s;
  Rng rng(3);
  Budget b{default_budget()};
  CHECK(ext_eq_sampled(nat_value(3), nat_value(3), ty_nat(), s, rng, b));
  CHECK_FALSE(ext_eq_sampled(nat_value(3), nat_value(4), ty_nat(), s, rng, b));
  ValuePtr h1 = eval_closed(parse_term("\\a:N -> N. a 0"), b);
  ValuePtr h2 = eval_closed(parse_term("\\a:N -> N. a 0"), b);
  CHECK(ext_eq_sampled(h1, h2, arrow(baire_ty(), ty_nat()), s, rng, b, 50));
  ValuePtr h3 = eval_closed(parse_term("\\a:N -> N. a 1"), b);
  CHECK_FALSE(ext_eq_sampled(h1, h3, arrow(baire_ty(), ty_nat()), s, rng, b, 50));
}

TEST_CASE("determinism of eval") {
  Budget b1{default_budget()}, b2{default_budget()};
  TmPtr t = parse_term("phi (\\i:N. monus 9 i) 6", prelude());
  CHECK(readback_nat(eval_closed(t, b1)) == readback_nat(eval_closed(t, b2)));
}
