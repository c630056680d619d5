#include "gst/syntax.hpp"

#include <sstream>

namespace gst {

namespace {
TyPtr mk_ty(TyKind k, TyPtr a = nullptr, TyPtr b = nullptr) {
  return std::make_shared<Ty>(Ty{k, std::move(a), std::move(b)});
}
}  // namespace

TyPtr ty_nat() {
  static const TyPtr n = mk_ty(TyKind::Nat);
  return n;
}
TyPtr ty_hole() {
  static const TyPtr h = mk_ty(TyKind::Hole);
  return h;
}
TyPtr arrow(TyPtr dom, TyPtr cod) { return mk_ty(TyKind::Arrow, std::move(dom), std::move(cod)); }
TyPtr prod(TyPtr l, TyPtr r) { return mk_ty(TyKind::Prod, std::move(l), std::move(r)); }
TyPtr sum(TyPtr l, TyPtr r) { return mk_ty(TyKind::Sum, std::move(l), std::move(r)); }

bool ty_eq(const TyPtr& s, const TyPtr& t) {
  if (s.get() == t.get()) return true;
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TyKind::Nat:
    case TyKind::Hole:
      return true;
    default:
      return ty_eq(s->a, t->a) && ty_eq(s->b, t->b);
  }
}

bool ty_has_hole(const TyPtr& t) {
  switch (t->kind) {
    case TyKind::Hole: return true;
    case TyKind::Nat: return false;
    default: return ty_has_hole(t->a) || ty_has_hole(t->b);
  }
}

TyPtr plug(const TyPtr& j, const TyPtr& sigma) {
  switch (j->kind) {
    case TyKind::Hole: return sigma;
    case TyKind::Nat: return j;
    default: {
      TyPtr a = plug(j->a, sigma);
      TyPtr b = plug(j->b, sigma);
      if (a.get() == j->a.get() && b.get() == j->b.get()) return j;
      return mk_ty(j->kind, std::move(a), std::move(b));
    }
  }
}

namespace {
// Precedence: atoms < prod (*) < sum (+) < arrow (->, right assoc).
void show_ty_rec(const TyPtr& t, int prec, std::ostringstream& out) {
  switch (t->kind) {
    case TyKind::Nat:
      out << "N";
      break;
    case TyKind::Hole:
      out << "_";
      break;
    case TyKind::Arrow:
      if (prec > 0) out << "(";
      show_ty_rec(t->a, 1, out);
      out << " -> ";
      show_ty_rec(t->b, 0, out);
      if (prec > 0) out << ")";
      break;
    case TyKind::Sum:
      if (prec > 1) out << "(";
      show_ty_rec(t->a, 2, out);
      out << " + ";
      show_ty_rec(t->b, 1, out);
      if (prec > 1) out << ")";
      break;
    case TyKind::Prod:
      if (prec > 2) out << "(";
      show_ty_rec(t->a, 3, out);
      out << " * ";
      show_ty_rec(t->b, 2, out);
      if (prec > 2) out << ")";
      break;
  }
}
}  // namespace

std::string show_ty(const TyPtr& t) {
  std::ostringstream out;
  show_ty_rec(t, 0, out);
  return out.str();
}

namespace {
TmPtr mk_tm(Tm t) { return std::make_shared<Tm>(std::move(t)); }
}  // namespace

TmPtr var(int idx) { return mk_tm({.kind = TmKind::Var, .idx = idx}); }
TmPtr lam(TyPtr dom, TmPtr body) {
  return mk_tm({.kind = TmKind::Lam, .ty1 = std::move(dom), .t1 = std::move(body)});
}
TmPtr app(TmPtr fn, TmPtr arg) {
  return mk_tm({.kind = TmKind::App, .t1 = std::move(fn), .t2 = std::move(arg)});
}
TmPtr zero() {
  static const TmPtr z = mk_tm({.kind = TmKind::Zero});
  return z;
}
TmPtr suc() {
  static const TmPtr s = mk_tm({.kind = TmKind::Suc});
  return s;
}
TmPtr rec(TyPtr motive) { return mk_tm({.kind = TmKind::Rec, .ty1 = std::move(motive)}); }
TmPtr pair_c(TyPtr l, TyPtr r) {
  return mk_tm({.kind = TmKind::PairC, .ty1 = std::move(l), .ty2 = std::move(r)});
}
TmPtr pr1_c(TyPtr l, TyPtr r) {
  return mk_tm({.kind = TmKind::Pr1, .ty1 = std::move(l), .ty2 = std::move(r)});
}
TmPtr pr2_c(TyPtr l, TyPtr r) {
  return mk_tm({.kind = TmKind::Pr2, .ty1 = std::move(l), .ty2 = std::move(r)});
}
TmPtr inl_c(TyPtr l, TyPtr r) {
  return mk_tm({.kind = TmKind::Inl, .ty1 = std::move(l), .ty2 = std::move(r)});
}
TmPtr inr_c(TyPtr l, TyPtr r) {
  return mk_tm({.kind = TmKind::Inr, .ty1 = std::move(l), .ty2 = std::move(r)});
}
TmPtr case_c(TyPtr l, TyPtr r, TyPtr motive) {
  return mk_tm({.kind = TmKind::CaseC,
                .ty1 = std::move(l),
                .ty2 = std::move(r),
                .ty3 = std::move(motive)});
}

TmPtr numeral(unsigned long long n) {
  TmPtr t = zero();
  for (unsigned long long i = 0; i < n; ++i) t = app(suc(), t);
  return t;
}

bool tm_eq(const TmPtr& s, const TmPtr& t) {
  if (s.get() == t.get()) return true;
  if (s->kind != t->kind) return false;
  auto eq_ty = [](const TyPtr& a, const TyPtr& b) {
    return (a == nullptr && b == nullptr) || (a && b && ty_eq(a, b));
  };
  switch (s->kind) {
    case TmKind::Var: return s->idx == t->idx;
    case TmKind::Lam: return eq_ty(s->ty1, t->ty1) && tm_eq(s->t1, t->t1);
    case TmKind::App: return tm_eq(s->t1, t->t1) && tm_eq(s->t2, t->t2);
    case TmKind::Zero:
    case TmKind::Suc: return true;
    case TmKind::Rec: return eq_ty(s->ty1, t->ty1);
    case TmKind::CaseC:
      return eq_ty(s->ty1, t->ty1) && eq_ty(s->ty2, t->ty2) && eq_ty(s->ty3, t->ty3);
    default:  // binary-annotated constants
      return eq_ty(s->ty1, t->ty1) && eq_ty(s->ty2, t->ty2);
  }
}

TyPtr const_type(const Tm& t) {
  switch (t.kind) {
    case TmKind::Zero: return ty_nat();
    case TmKind::Suc: return arrow(ty_nat(), ty_nat());
    case TmKind::Rec: {
      const TyPtr& s = t.ty1;
      return arrow(s, arrow(arrow(ty_nat(), arrow(s, s)), arrow(ty_nat(), s)));
    }
    case TmKind::PairC: return arrow(t.ty1, arrow(t.ty2, prod(t.ty1, t.ty2)));
    case TmKind::Pr1: return arrow(prod(t.ty1, t.ty2), t.ty1);
    case TmKind::Pr2: return arrow(prod(t.ty1, t.ty2), t.ty2);
    case TmKind::Inl: return arrow(t.ty1, sum(t.ty1, t.ty2));
    case TmKind::Inr: return arrow(t.ty2, sum(t.ty1, t.ty2));
    case TmKind::CaseC: {
      TyPtr st = sum(t.ty1, t.ty2);
      return arrow(arrow(t.ty1, t.ty3), arrow(arrow(t.ty2, t.ty3), arrow(st, t.ty3)));
    }
    default: fail(ErrCode::IllTypedRuntime, "const_type: not a constant");
  }
}

TyPtr typecheck(const Ctx& ctx, const TmPtr& t) {
  switch (t->kind) {
    case TmKind::Var: {
      if (t->idx < 0 || t->idx >= static_cast<int>(ctx.size()))
        fail(ErrCode::UnboundVariable, "unbound variable with index " + std::to_string(t->idx));
      return ctx[ctx.size() - 1 - static_cast<size_t>(t->idx)];
    }
    case TmKind::Lam: {
      Ctx inner = ctx;
      inner.push_back(t->ty1);
      return arrow(t->ty1, typecheck(inner, t->t1));
    }
    case TmKind::App: {
      TyPtr fn = typecheck(ctx, t->t1);
      TyPtr arg = typecheck(ctx, t->t2);
      if (fn->kind != TyKind::Arrow)
        fail(ErrCode::NonFunctionApplication,
             "application head has non-function type " + show_ty(fn));
      if (!ty_eq(fn->a, arg))
        fail(ErrCode::TypeMismatch,
             "argument type mismatch: expected " + show_ty(fn->a) + ", found " + show_ty(arg));
      return fn->b;
    }
    default:
      return const_type(*t);
  }
}

TmPtr shift(const TmPtr& t, int d, int cutoff) {
  switch (t->kind) {
    case TmKind::Var:
      if (t->idx < cutoff) return t;
      return var(t->idx + d);
    case TmKind::Lam: {
      TmPtr body = shift(t->t1, d, cutoff + 1);
      if (body.get() == t->t1.get()) return t;
      return lam(t->ty1, std::move(body));
    }
    case TmKind::App: {
      TmPtr f = shift(t->t1, d, cutoff);
      TmPtr a = shift(t->t2, d, cutoff);
      if (f.get() == t->t1.get() && a.get() == t->t2.get()) return t;
      return app(std::move(f), std::move(a));
    }
    default:
      return t;
  }
}

namespace {
TmPtr subst(const TmPtr& t, const TmPtr& arg, int depth) {
  switch (t->kind) {
    case TmKind::Var:
      if (t->idx == depth) return shift(arg, depth);
      if (t->idx > depth) return var(t->idx - 1);
      return t;
    case TmKind::Lam:
      return lam(t->ty1, subst(t->t1, arg, depth + 1));
    case TmKind::App:
      return app(subst(t->t1, arg, depth), subst(t->t2, arg, depth));
    default:
      return t;
  }
}
}  // namespace

TmPtr instantiate(const TmPtr& body, const TmPtr& arg) { return subst(body, arg, 0); }

}  // namespace gst
