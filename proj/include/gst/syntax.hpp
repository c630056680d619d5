#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gst/error.hpp"

namespace gst {

// Types of System T with products and sums. Hole is the marker leaf used by
// type endofunctions (GenNucleus); ordinary types never contain it.
enum class TyKind { Nat, Arrow, Prod, Sum, Hole };

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

struct Ty {
  TyKind kind;
  TyPtr a, b;
};

TyPtr ty_nat();
TyPtr ty_hole();
TyPtr arrow(TyPtr dom, TyPtr cod);
TyPtr prod(TyPtr l, TyPtr r);
TyPtr sum(TyPtr l, TyPtr r);

bool ty_eq(const TyPtr& s, const TyPtr& t);
bool ty_has_hole(const TyPtr& t);
// Substitutes sigma for every Hole leaf of j.
TyPtr plug(const TyPtr& j, const TyPtr& sigma);
std::string show_ty(const TyPtr& t);

// Terms in de Bruijn representation (index 0 = innermost binder). Polymorphic
// constants carry their full type instance so typechecking is syntax-directed.
enum class TmKind { Var, Lam, App, Zero, Suc, Rec, PairC, Pr1, Pr2, Inl, Inr, CaseC };

struct Tm;
using TmPtr = std::shared_ptr<const Tm>;

struct Tm {
  TmKind kind;
  int idx = 0;         // Var
  TyPtr ty1, ty2, ty3; // Lam dom / Rec motive / Pair,Pr,Inj (l,r) / Case (l,r,motive)
  TmPtr t1, t2;        // Lam body / App fn,arg
};

TmPtr var(int idx);
TmPtr lam(TyPtr dom, TmPtr body);
TmPtr app(TmPtr fn, TmPtr arg);
template <typename... Rest>
TmPtr app(TmPtr fn, TmPtr arg, TmPtr arg2, Rest... rest) {
  return app(app(std::move(fn), std::move(arg)), std::move(arg2), std::move(rest)...);
}
TmPtr zero();
TmPtr suc();
TmPtr rec(TyPtr motive);
TmPtr pair_c(TyPtr l, TyPtr r);
TmPtr pr1_c(TyPtr l, TyPtr r);
TmPtr pr2_c(TyPtr l, TyPtr r);
TmPtr inl_c(TyPtr l, TyPtr r);
TmPtr inr_c(TyPtr l, TyPtr r);
TmPtr case_c(TyPtr l, TyPtr r, TyPtr motive);
// suc^n(0)
TmPtr numeral(unsigned long long n);

bool tm_eq(const TmPtr& s, const TmPtr& t);

// Typing context: ordered sequence of types, innermost binder last.
using Ctx = std::vector<TyPtr>;

// The type of a constant at its annotated instance.
TyPtr const_type(const Tm& t);

// Returns the unique type of t under ctx, or throws (UnboundVariable,
// TypeMismatch, NonFunctionApplication).
TyPtr typecheck(const Ctx& ctx, const TmPtr& t);

inline TyPtr typecheck_closed(const TmPtr& t) { return typecheck({}, t); }

// Adds d to every free variable index >= cutoff.
TmPtr shift(const TmPtr& t, int d, int cutoff = 0);

// Capture-free substitution of arg for index 0 in body, decrementing the
// remaining free indices: the beta-step of (\x. body) arg.
TmPtr instantiate(const TmPtr& body, const TmPtr& arg);

// Named top-level declaration; body is closed and typechecks at ty.
struct Decl {
  std::string name;
  TyPtr ty;
  TmPtr body;
};

}  // namespace gst
