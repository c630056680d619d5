#include <random>

#include "doctest.h"
#include "gst/syntax.hpp"

using namespace gst;

namespace {

// The max term of the standard presentation: rec at motive N -> N.
TmPtr max_term() {
  // rec[N->N] (\n:N. n) (\n:N. \f:N->N. rec[N] (suc n) (\m:N. \g:N. suc (f m)))
  TyPtr nn = arrow(ty_nat(), ty_nat());
  TmPtr base = lam(ty_nat(), var(0));
  TmPtr inner_step = lam(ty_nat(), lam(ty_nat(), app(suc(), app(var(2), var(1)))));
  TmPtr inner = app(rec(ty_nat()), app(suc(), var(1)), inner_step);
  TmPtr step = lam(ty_nat(), lam(nn, inner));
  return app(rec(nn), base, step);
}

// Random well-typed term generator for the substitution/weakening properties.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  TyPtr ty(int depth) {
    if (depth <= 0 || rng() % 3 == 0) return ty_nat();
    switch (rng() % 3) {
      case 0: return arrow(ty(depth - 1), ty(depth - 1));
      case 1: return prod(ty(depth - 1), ty(depth - 1));
      default: return sum(ty(depth - 1), ty(depth - 1));
    }
  }

  // A term of the requested type under ctx, built top-down.
  TmPtr tm(const Ctx& ctx, const TyPtr& want, int depth) {
    // try a variable of the right type
    if (rng() % 2 == 0) {
      std::vector<int> hits;
      for (size_t i = 0; i < ctx.size(); ++i)
        if (ty_eq(ctx[i], want)) hits.push_back(static_cast<int>(ctx.size() - 1 - i));
      if (!hits.empty()) return var(hits[rng() % hits.size()]);
    }
    if (depth > 0 && rng() % 3 == 0) {
      // application at a random argument type
      TyPtr at = ty(1);
      Ctx c2 = ctx;
      TmPtr f = tm(ctx, arrow(at, want), depth - 1);
      TmPtr a = tm(ctx, at, depth - 1);
      return app(std::move(f), std::move(a));
    }
    switch (want->kind) {
      case TyKind::Nat:
        return numeral(rng() % 4);
      case TyKind::Arrow: {
        Ctx c2 = ctx;
        c2.push_back(want->a);
        return lam(want->a, tm(c2, want->b, depth - 1));
      }
      case TyKind::Prod:
        return app(pair_c(want->a, want->b), tm(ctx, want->a, depth - 1),
                   tm(ctx, want->b, depth - 1));
      case TyKind::Sum:
        if (rng() % 2)
          return app(inl_c(want->a, want->b), tm(ctx, want->a, depth - 1));
        return app(inr_c(want->a, want->b), tm(ctx, want->b, depth - 1));
      default:
        return zero();
    }
  }
};

}  // namespace

TEST_CASE("typechecking the standard constants") {
  CHECK(ty_eq(typecheck_closed(zero()), ty_nat()));
  CHECK(show_ty(typecheck_closed(suc())) == "N -> N");
  CHECK(show_ty(typecheck_closed(rec(ty_nat()))) == "N -> (N -> N -> N) -> N -> N");
  CHECK(show_ty(typecheck_closed(max_term())) == "N -> N -> N");
  CHECK(show_ty(typecheck_closed(lam(ty_nat(), var(0)))) == "N -> N");
}

TEST_CASE("typecheck error cases") {
  CHECK_THROWS_WITH_AS(typecheck_closed(app(zero(), zero())),
                       doctest::Contains("non-function"), Error);
  CHECK_THROWS_AS(typecheck_closed(var(0)), Error);
  CHECK_THROWS_AS(typecheck_closed(app(suc(), lam(ty_nat(), var(0)))), Error);
  // suc where a numeral is required
  CHECK_THROWS_AS(typecheck({}, app(app(rec(ty_nat()), zero(), suc()), zero())), Error);
}

TEST_CASE("product and sum constants") {
  TyPtr n = ty_nat();
  TmPtr p = app(pair_c(n, arrow(n, n)), zero(), suc());
  CHECK(show_ty(typecheck_closed(p)) == "N * (N -> N)");
  CHECK(ty_eq(typecheck_closed(app(pr1_c(n, arrow(n, n)), p)), n));
  TmPtr inj = app(inl_c(n, arrow(n, n)), numeral(3));
  CHECK(show_ty(typecheck_closed(inj)) == "N + (N -> N)");
  TmPtr cs = app(case_c(n, n, n), lam(n, var(0)), lam(n, app(suc(), var(0))),
                 app(inr_c(n, n), zero()));
  CHECK(ty_eq(typecheck_closed(cs), n));
}

TEST_CASE("instantiate basics") {
  CHECK(tm_eq(instantiate(var(0), zero()), zero()));
  CHECK(tm_eq(instantiate(var(1), zero()), var(0)));
  CHECK(tm_eq(instantiate(app(var(0), var(0)), suc()), app(suc(), suc())));
  // substitution under a binder shifts the argument
  TmPtr body = lam(ty_nat(), app(var(1), var(0)));  // \y. x y with x = Var 0 outside
  TmPtr arg = var(0);                               // some outer variable
  TmPtr res = instantiate(body, arg);
  CHECK(tm_eq(res, lam(ty_nat(), app(var(1), var(0)))));
}

TEST_CASE("typechecking is deterministic and weakening holds") {
  Gen g(7);
  for (int i = 0; i < 200; ++i) {
    TyPtr want = g.ty(2);
    TmPtr t = g.tm({}, want, 3);
    TyPtr a = typecheck({}, t);
    TyPtr b = typecheck({}, t);
    CHECK(ty_eq(a, b));
    CHECK(ty_eq(a, want));
    // weakening: appending to the context (outermost end) leaves the type alone
    Ctx weak = {ty_nat()};
    CHECK(ty_eq(typecheck(weak, shift(t, 1)), want));
  }
}

TEST_CASE("substitution preserves typing on random well-typed terms") {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    TyPtr sigma = g.ty(2);
    TyPtr tau = g.ty(2);
    Ctx inner = {sigma};
    TmPtr body = g.tm(inner, tau, 3);
    TmPtr arg = g.tm({}, sigma, 3);
    CHECK(ty_eq(typecheck({}, instantiate(body, arg)), tau));
  }
}
