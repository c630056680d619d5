#include "gst/translate.hpp"

namespace gst {

std::optional<Style> style_from_name(const std::string& name) {
  if (name == "gentzen") return Style::Gentzen;
  if (name == "kolmogorov") return Style::Kolmogorov;
  if (name == "kuroda") return Style::Kuroda;
  return std::nullopt;
}

namespace {

// Uniform view of the two nucleus tiers. A SimpleNucleus acts only at N;
// every other instance request means the translation needs the generalized
// tier and fails with NucleusTooWeak.
struct NucOps {
  const SimpleNucleus* s = nullptr;
  const GenNucleus* g = nullptr;

  explicit NucOps(const AnyNucleus& nuc) {
    if (auto* p = std::get_if<SimpleNucleus>(&nuc)) s = p;
    else g = &std::get<GenNucleus>(nuc);
  }

  [[noreturn]] void too_weak() const {
    fail(ErrCode::NucleusTooWeak,
         "this construction needs eta/kappa beyond N; use a generalized nucleus");
  }

  TyPtr j(const TyPtr& t) const {
    if (g) return g->apply(t);
    if (t->kind == TyKind::Nat) return s->jn;
    too_weak();
  }
  TmPtr eta(const TyPtr& t) const {
    if (g) return g->eta_at(t);
    if (t->kind == TyKind::Nat) return s->eta;
    too_weak();
  }
  TmPtr kappa(const TyPtr& a, const TyPtr& b) const {
    if (g) return g->kappa_at(a, b);
    if (a->kind == TyKind::Nat && b->kind == TyKind::Nat) return s->kappa;
    too_weak();
  }
};

TyPtr gentzen_ty(const NucOps& n, const TyPtr& rho) {
  switch (rho->kind) {
    case TyKind::Nat: return n.j(ty_nat());
    case TyKind::Arrow: return arrow(gentzen_ty(n, rho->a), gentzen_ty(n, rho->b));
    case TyKind::Prod: return prod(gentzen_ty(n, rho->a), gentzen_ty(n, rho->b));
    case TyKind::Sum: return n.j(sum(gentzen_ty(n, rho->a), gentzen_ty(n, rho->b)));
    default: fail(ErrCode::InvalidArgument, "cannot translate a type with holes");
  }
}

// ke along sigma with source base A:  (A -> sigma^J) -> JA -> sigma^J
TmPtr ke_impl(const NucOps& n, const TyPtr& A, const TyPtr& sigma) {
  switch (sigma->kind) {
    case TyKind::Nat:
      return n.kappa(A, ty_nat());
    case TyKind::Arrow: {
      TyPtr sJ = gentzen_ty(n, sigma->a), tJ = gentzen_ty(n, sigma->b);
      // \g. \a. \x. ke_tau (\v. g v x) a
      return lam(arrow(A, arrow(sJ, tJ)),
                 lam(n.j(A),
                     lam(sJ, app(ke_impl(n, A, sigma->b),
                                 lam(A, app(var(3), var(0), var(1))), var(1)))));
    }
    case TyKind::Prod: {
      TyPtr sJ = gentzen_ty(n, sigma->a), tJ = gentzen_ty(n, sigma->b);
      return lam(arrow(A, prod(sJ, tJ)),
                 lam(n.j(A),
                     app(pair_c(sJ, tJ),
                         app(ke_impl(n, A, sigma->a),
                             lam(A, app(pr1_c(sJ, tJ), app(var(2), var(0)))), var(0)),
                         app(ke_impl(n, A, sigma->b),
                             lam(A, app(pr2_c(sJ, tJ), app(var(2), var(0)))), var(0)))));
    }
    case TyKind::Sum: {
      TyPtr sJ = gentzen_ty(n, sigma->a), tJ = gentzen_ty(n, sigma->b);
      return n.kappa(A, sum(sJ, tJ));
    }
    default: fail(ErrCode::InvalidArgument, "cannot translate a type with holes");
  }
}

TmPtr gentzen_tm(const NucOps& n, const TmPtr& t) {
  switch (t->kind) {
    case TmKind::Var:
      return t;
    case TmKind::Lam:
      return lam(gentzen_ty(n, t->ty1), gentzen_tm(n, t->t1));
    case TmKind::App:
      return app(gentzen_tm(n, t->t1), gentzen_tm(n, t->t2));
    case TmKind::Zero:
      return app(n.eta(ty_nat()), zero());
    case TmKind::Suc:
      return app(n.kappa(ty_nat(), ty_nat()),
                 lam(ty_nat(), app(n.eta(ty_nat()), app(suc(), var(0)))));
    case TmKind::Rec: {
      TyPtr sJ = gentzen_ty(n, t->ty1);
      // \x. \f. ke_sigma (rec x (\v. f (eta v)))
      return lam(sJ, lam(arrow(n.j(ty_nat()), arrow(sJ, sJ)),
                         app(ke_impl(n, ty_nat(), t->ty1),
                             app(rec(sJ), var(1),
                                 lam(ty_nat(), app(var(1), app(n.eta(ty_nat()), var(0))))))));
    }
    case TmKind::PairC:
      return pair_c(gentzen_ty(n, t->ty1), gentzen_ty(n, t->ty2));
    case TmKind::Pr1:
      return pr1_c(gentzen_ty(n, t->ty1), gentzen_ty(n, t->ty2));
    case TmKind::Pr2:
      return pr2_c(gentzen_ty(n, t->ty1), gentzen_ty(n, t->ty2));
    case TmKind::Inl: {
      TyPtr lJ = gentzen_ty(n, t->ty1), rJ = gentzen_ty(n, t->ty2);
      return lam(lJ, app(n.eta(sum(lJ, rJ)), app(inl_c(lJ, rJ), var(0))));
    }
    case TmKind::Inr: {
      TyPtr lJ = gentzen_ty(n, t->ty1), rJ = gentzen_ty(n, t->ty2);
      return lam(rJ, app(n.eta(sum(lJ, rJ)), app(inr_c(lJ, rJ), var(0))));
    }
    case TmKind::CaseC: {
      TyPtr lJ = gentzen_ty(n, t->ty1), rJ = gentzen_ty(n, t->ty2);
      TyPtr mJ = gentzen_ty(n, t->ty3);
      // \f. \g. ke over source lJ + rJ applied to case f g
      return lam(arrow(lJ, mJ),
                 lam(arrow(rJ, mJ),
                     app(ke_impl(n, sum(lJ, rJ), t->ty3),
                         app(case_c(lJ, rJ, mJ), var(1), var(0)))));
    }
  }
  fail(ErrCode::InvalidArgument, "unreachable term kind");
}

TyPtr ko_ty(const GenNucleus& n, const TyPtr& rho) {
  switch (rho->kind) {
    case TyKind::Nat: return ty_nat();
    case TyKind::Arrow: return arrow(n.apply(ko_ty(n, rho->a)), n.apply(ko_ty(n, rho->b)));
    case TyKind::Prod: return prod(n.apply(ko_ty(n, rho->a)), n.apply(ko_ty(n, rho->b)));
    case TyKind::Sum: return sum(n.apply(ko_ty(n, rho->a)), n.apply(ko_ty(n, rho->b)));
    default: fail(ErrCode::InvalidArgument, "cannot translate a type with holes");
  }
}

TyPtr ku_ty(const GenNucleus& n, const TyPtr& rho) {
  switch (rho->kind) {
    case TyKind::Nat: return ty_nat();
    case TyKind::Arrow: return arrow(ku_ty(n, rho->a), n.apply(ku_ty(n, rho->b)));
    case TyKind::Prod: return prod(ku_ty(n, rho->a), ku_ty(n, rho->b));
    case TyKind::Sum: return sum(ku_ty(n, rho->a), ku_ty(n, rho->b));
    default: fail(ErrCode::InvalidArgument, "cannot translate a type with holes");
  }
}

// f <> a = kappa(\g. g a, f) at instance f : J(s -> Jt), a : s
TmPtr diamond(const GenNucleus& n, const TmPtr& f, const TmPtr& a, const TyPtr& s,
              const TyPtr& t) {
  TyPtr fun = arrow(s, n.apply(t));
  return app(n.kappa_at(fun, t), lam(fun, app(var(0), shift(a, 1))), f);
}

// f . a = kappa(\g. kappa(g, a), f) at instance f : J(s -> Jt), a : Js
TmPtr bullet(const GenNucleus& n, const TmPtr& f, const TmPtr& a, const TyPtr& s,
             const TyPtr& t) {
  TyPtr fun = arrow(s, n.apply(t));
  return app(n.kappa_at(fun, t), lam(fun, app(n.kappa_at(s, t), var(0), shift(a, 1))), f);
}

struct Trans {
  TmPtr tm;
  TyPtr src_ty;
};

Trans ko_tm(const GenNucleus& n, Ctx& ctx, const TmPtr& t) {
  auto J = [&](const TyPtr& s) { return n.apply(s); };
  auto eta = [&](const TyPtr& s) { return n.eta_at(s); };
  switch (t->kind) {
    case TmKind::Var: {
      if (t->idx < 0 || t->idx >= (int)ctx.size())
        fail(ErrCode::UnboundVariable, "unbound variable");
      return {var(t->idx), ctx[ctx.size() - 1 - t->idx]};
    }
    case TmKind::Lam: {
      ctx.push_back(t->ty1);
      Trans b = ko_tm(n, ctx, t->t1);
      ctx.pop_back();
      TyPtr koD = ko_ty(n, t->ty1), koB = ko_ty(n, b.src_ty);
      return {app(eta(arrow(J(koD), J(koB))), lam(J(koD), b.tm)), arrow(t->ty1, b.src_ty)};
    }
    case TmKind::App: {
      Trans f = ko_tm(n, ctx, t->t1);
      Trans a = ko_tm(n, ctx, t->t2);
      if (f.src_ty->kind != TyKind::Arrow)
        fail(ErrCode::NonFunctionApplication, "applied term is not a function");
      if (!ty_eq(f.src_ty->a, a.src_ty))
        fail(ErrCode::TypeMismatch, "argument type mismatch");
      return {diamond(n, f.tm, a.tm, J(ko_ty(n, f.src_ty->a)), ko_ty(n, f.src_ty->b)),
              f.src_ty->b};
    }
    case TmKind::Zero:
      return {app(eta(ty_nat()), zero()), ty_nat()};
    case TmKind::Suc: {
      TmPtr inner = app(n.kappa_at(ty_nat(), ty_nat()),
                        lam(ty_nat(), app(eta(ty_nat()), app(suc(), var(0)))));
      return {app(eta(arrow(J(ty_nat()), J(ty_nat()))), inner),
              arrow(ty_nat(), ty_nat())};
    }
    case TmKind::Rec: {
      TyPtr A = ko_ty(n, t->ty1);
      TyPtr JA = J(A);
      TyPtr F = arrow(J(ty_nat()), J(arrow(JA, JA)));
      // under binders a : A, f : F
      TmPtr recdia =
          lam(ty_nat(),
              app(rec(JA), app(eta(A), var(2)),
                  lam(ty_nat(),
                      lam(JA, diamond(n, app(var(3), app(eta(ty_nat()), var(1))), var(0),
                                      JA, A))),
                  var(0)));
      TyPtr T0 = arrow(J(ty_nat()), JA);
      TyPtr T1 = arrow(J(F), J(T0));
      TmPtr body = lam(A, app(eta(T1),
                              app(n.kappa_at(F, T0),
                                  lam(F, app(eta(T0), app(n.kappa_at(ty_nat(), A), recdia))))));
      TyPtr sigma = t->ty1;
      return {app(eta(arrow(JA, J(T1))), app(n.kappa_at(A, T1), body)),
              arrow(sigma, arrow(arrow(ty_nat(), arrow(sigma, sigma)),
                                 arrow(ty_nat(), sigma)))};
    }
    case TmKind::PairC: {
      TyPtr l = J(ko_ty(n, t->ty1)), r = J(ko_ty(n, t->ty2));
      TyPtr P = prod(l, r);
      TmPtr inner = lam(l, app(eta(arrow(r, J(P))),
                               lam(r, app(eta(P), app(pair_c(l, r), var(1), var(0))))));
      return {app(eta(arrow(l, J(arrow(r, J(P))))), inner),
              arrow(t->ty1, arrow(t->ty2, prod(t->ty1, t->ty2)))};
    }
    case TmKind::Pr1: {
      TyPtr l = J(ko_ty(n, t->ty1)), r = J(ko_ty(n, t->ty2));
      TyPtr P = prod(l, r);
      return {app(eta(arrow(J(P), l)), app(n.kappa_at(P, ko_ty(n, t->ty1)), pr1_c(l, r))),
              arrow(prod(t->ty1, t->ty2), t->ty1)};
    }
    case TmKind::Pr2: {
      TyPtr l = J(ko_ty(n, t->ty1)), r = J(ko_ty(n, t->ty2));
      TyPtr P = prod(l, r);
      return {app(eta(arrow(J(P), r)), app(n.kappa_at(P, ko_ty(n, t->ty2)), pr2_c(l, r))),
              arrow(prod(t->ty1, t->ty2), t->ty2)};
    }
    case TmKind::Inl: {
      TyPtr l = J(ko_ty(n, t->ty1)), r = J(ko_ty(n, t->ty2));
      TyPtr S = sum(l, r);
      return {app(eta(arrow(l, J(S))), lam(l, app(eta(S), app(inl_c(l, r), var(0))))),
              arrow(t->ty1, sum(t->ty1, t->ty2))};
    }
    case TmKind::Inr: {
      TyPtr l = J(ko_ty(n, t->ty1)), r = J(ko_ty(n, t->ty2));
      TyPtr S = sum(l, r);
      return {app(eta(arrow(r, J(S))), lam(r, app(eta(S), app(inr_c(l, r), var(0))))),
              arrow(t->ty2, sum(t->ty1, t->ty2))};
    }
    case TmKind::CaseC: {
      TyPtr l = J(ko_ty(n, t->ty1)), r = J(ko_ty(n, t->ty2));
      TyPtr kom = ko_ty(n, t->ty3);
      TyPtr m = J(kom);
      TyPtr S = sum(l, r);
      TyPtr LM = arrow(l, m), RM = arrow(r, m);
      TyPtr T0 = arrow(J(S), m);
      // under binders f : LM, g : RM
      TmPtr inner1 = app(eta(T0), app(n.kappa_at(S, kom),
                                      app(case_c(l, r, m), var(1), var(0))));
      TyPtr T1 = arrow(J(RM), J(T0));
      TmPtr mid = lam(LM, app(eta(T1), app(n.kappa_at(RM, T0), lam(RM, inner1))));
      return {app(eta(arrow(J(LM), J(T1))), app(n.kappa_at(LM, T1), mid)),
              arrow(arrow(t->ty1, t->ty3),
                    arrow(arrow(t->ty2, t->ty3), arrow(sum(t->ty1, t->ty2), t->ty3)))};
    }
  }
  fail(ErrCode::InvalidArgument, "unreachable term kind");
}

Trans ku_tm(const GenNucleus& n, Ctx& ctx, const TmPtr& t) {
  auto J = [&](const TyPtr& s) { return n.apply(s); };
  auto eta = [&](const TyPtr& s) { return n.eta_at(s); };
  switch (t->kind) {
    case TmKind::Var: {
      if (t->idx < 0 || t->idx >= (int)ctx.size())
        fail(ErrCode::UnboundVariable, "unbound variable");
      TyPtr src = ctx[ctx.size() - 1 - t->idx];
      return {app(eta(ku_ty(n, src)), var(t->idx)), src};
    }
    case TmKind::Lam: {
      ctx.push_back(t->ty1);
      Trans b = ku_tm(n, ctx, t->t1);
      ctx.pop_back();
      TyPtr kuD = ku_ty(n, t->ty1), kuB = ku_ty(n, b.src_ty);
      return {app(eta(arrow(kuD, J(kuB))), lam(kuD, b.tm)), arrow(t->ty1, b.src_ty)};
    }
    case TmKind::App: {
      Trans f = ku_tm(n, ctx, t->t1);
      Trans a = ku_tm(n, ctx, t->t2);
      if (f.src_ty->kind != TyKind::Arrow)
        fail(ErrCode::NonFunctionApplication, "applied term is not a function");
      if (!ty_eq(f.src_ty->a, a.src_ty))
        fail(ErrCode::TypeMismatch, "argument type mismatch");
      return {bullet(n, f.tm, a.tm, ku_ty(n, f.src_ty->a), ku_ty(n, f.src_ty->b)),
              f.src_ty->b};
    }
    case TmKind::Zero:
      return {app(eta(ty_nat()), zero()), ty_nat()};
    case TmKind::Suc: {
      TmPtr inner = lam(ty_nat(), app(eta(ty_nat()), app(suc(), var(0))));
      return {app(eta(arrow(ty_nat(), J(ty_nat()))), inner), arrow(ty_nat(), ty_nat())};
    }
    case TmKind::Rec: {
      TyPtr A = ku_ty(n, t->ty1);
      TyPtr JA = J(A);
      TyPtr F = arrow(ty_nat(), J(arrow(A, JA)));
      // under binders a : A, f : F
      TmPtr recbul =
          lam(ty_nat(),
              app(rec(JA), app(eta(A), var(2)),
                  lam(ty_nat(), lam(JA, bullet(n, app(var(3), var(1)), var(0), A, A))),
                  var(0)));
      TyPtr T0 = arrow(ty_nat(), JA);
      TmPtr tm = app(eta(arrow(A, J(arrow(F, J(T0))))),
                     lam(A, app(eta(arrow(F, J(T0))), lam(F, app(eta(T0), recbul)))));
      TyPtr sigma = t->ty1;
      return {tm, arrow(sigma, arrow(arrow(ty_nat(), arrow(sigma, sigma)),
                                     arrow(ty_nat(), sigma)))};
    }
    case TmKind::PairC: {
      TyPtr l = ku_ty(n, t->ty1), r = ku_ty(n, t->ty2);
      TyPtr P = prod(l, r);
      TmPtr inner = lam(l, app(eta(arrow(r, J(P))),
                               lam(r, app(eta(P), app(pair_c(l, r), var(1), var(0))))));
      return {app(eta(arrow(l, J(arrow(r, J(P))))), inner),
              arrow(t->ty1, arrow(t->ty2, prod(t->ty1, t->ty2)))};
    }
    case TmKind::Pr1: {
      TyPtr l = ku_ty(n, t->ty1), r = ku_ty(n, t->ty2);
      TyPtr P = prod(l, r);
      return {app(eta(arrow(P, J(l))), lam(P, app(eta(l), app(pr1_c(l, r), var(0))))),
              arrow(prod(t->ty1, t->ty2), t->ty1)};
    }
    case TmKind::Pr2: {
      TyPtr l = ku_ty(n, t->ty1), r = ku_ty(n, t->ty2);
      TyPtr P = prod(l, r);
      return {app(eta(arrow(P, J(r))), lam(P, app(eta(r), app(pr2_c(l, r), var(0))))),
              arrow(prod(t->ty1, t->ty2), t->ty2)};
    }
    case TmKind::Inl: {
      TyPtr l = ku_ty(n, t->ty1), r = ku_ty(n, t->ty2);
      TyPtr S = sum(l, r);
      return {app(eta(arrow(l, J(S))), lam(l, app(eta(S), app(inl_c(l, r), var(0))))),
              arrow(t->ty1, sum(t->ty1, t->ty2))};
    }
    case TmKind::Inr: {
      TyPtr l = ku_ty(n, t->ty1), r = ku_ty(n, t->ty2);
      TyPtr S = sum(l, r);
      return {app(eta(arrow(r, J(S))), lam(r, app(eta(S), app(inr_c(l, r), var(0))))),
              arrow(t->ty2, sum(t->ty1, t->ty2))};
    }
    case TmKind::CaseC: {
      TyPtr l = ku_ty(n, t->ty1), r = ku_ty(n, t->ty2);
      TyPtr m = ku_ty(n, t->ty3);
      TyPtr S = sum(l, r);
      TyPtr LM = arrow(l, J(m)), RM = arrow(r, J(m));
      TyPtr T0 = arrow(S, J(m));
      // under binders f : LM, g : RM
      TmPtr inner = app(eta(T0), app(case_c(l, r, J(m)), var(1), var(0)));
      TmPtr tm = app(eta(arrow(LM, J(arrow(RM, J(T0))))),
                     lam(LM, app(eta(arrow(RM, J(T0))), lam(RM, inner))));
      return {tm, arrow(arrow(t->ty1, t->ty3),
                        arrow(arrow(t->ty2, t->ty3), arrow(sum(t->ty1, t->ty2), t->ty3)))};
    }
  }
  fail(ErrCode::InvalidArgument, "unreachable term kind");
}

const GenNucleus& need_gen(const NucOps& n) {
  if (!n.g)
    fail(ErrCode::NucleusTooWeak,
         "the Kolmogorov and Kuroda translations need a generalized nucleus");
  return *n.g;
}

}  // namespace

TyPtr ko_inner(const GenNucleus& nuc, const TyPtr& rho) { return ko_ty(nuc, rho); }
TyPtr ku_inner(const GenNucleus& nuc, const TyPtr& rho) { return ku_ty(nuc, rho); }

TyPtr ty_translate(Style style, const AnyNucleus& nuc, const TyPtr& rho) {
  NucOps n(nuc);
  switch (style) {
    case Style::Gentzen: return gentzen_ty(n, rho);
    case Style::Kolmogorov: return need_gen(n).apply(ko_ty(*n.g, rho));
    case Style::Kuroda: return need_gen(n).apply(ku_ty(*n.g, rho));
  }
  fail(ErrCode::InvalidArgument, "unreachable style");
}

TmPtr ke(const AnyNucleus& nuc, const TyPtr& sigma, const TyPtr& source) {
  NucOps n(nuc);
  return ke_impl(n, source, sigma);
}

TmPtr tm_translate(Style style, const AnyNucleus& nuc, const Ctx& ctx, const TmPtr& t) {
  NucOps n(nuc);
  switch (style) {
    case Style::Gentzen: return gentzen_tm(n, t);
    case Style::Kolmogorov: {
      Ctx c = ctx;
      return ko_tm(need_gen(n), c, t).tm;
    }
    case Style::Kuroda: {
      Ctx c = ctx;
      return ku_tm(need_gen(n), c, t).tm;
    }
  }
  fail(ErrCode::InvalidArgument, "unreachable style");
}

Ctx ctx_translate(Style style, const AnyNucleus& nuc, const Ctx& ctx) {
  NucOps n(nuc);
  Ctx out;
  out.reserve(ctx.size());
  for (const auto& s : ctx) {
    switch (style) {
      case Style::Gentzen: out.push_back(gentzen_ty(n, s)); break;
      case Style::Kolmogorov: out.push_back(need_gen(n).apply(ko_ty(*n.g, s))); break;
      case Style::Kuroda: out.push_back(ku_ty(need_gen(n), s)); break;
    }
  }
  return out;
}

TmPtr monadic_apply(Style style, const GenNucleus& nuc, const TmPtr& f, const TmPtr& a,
                    const TyPtr& sigma, const TyPtr& tau) {
  switch (style) {
    case Style::Kolmogorov: return diamond(nuc, f, a, sigma, tau);
    case Style::Kuroda: return bullet(nuc, f, a, sigma, tau);
    default: fail(ErrCode::InvalidArgument, "monadic application is a Kolmogorov/Kuroda notion");
  }
}

}  // namespace gst
