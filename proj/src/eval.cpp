#include "gst/eval.hpp"

#include <cstdlib>

namespace gst {

std::uint64_t default_budget() {
  if (const char* s = std::getenv("GST_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000000ull;  // 10^8
}

ThunkPtr Thunk::of(TmPtr t, Env env) {
  auto th = std::make_shared<Thunk>();
  th->t = std::move(t);
  th->env = std::move(env);
  return th;
}

ThunkPtr Thunk::of(ValuePtr v) {
  auto th = std::make_shared<Thunk>();
  th->known = std::move(v);
  return th;
}

ThunkPtr Thunk::defer(std::function<ValuePtr(Budget&)> f) {
  auto th = std::make_shared<Thunk>();
  th->compute = std::move(f);
  return th;
}

namespace {
ValuePtr mk(Value v) { return std::make_shared<Value>(std::move(v)); }

int prim_arity(TmKind k) {
  switch (k) {
    case TmKind::Suc:
    case TmKind::Pr1:
    case TmKind::Pr2:
    case TmKind::Inl:
    case TmKind::Inr: return 1;
    case TmKind::PairC: return 2;
    case TmKind::Rec:
    case TmKind::CaseC: return 3;
    default: return 0;
  }
}

ValuePtr delta(const TmPtr& prim, const std::vector<ThunkPtr>& args, Budget& budget);
}  // namespace

ValuePtr nat_value(std::uint64_t n) { return mk({.kind = VKind::Nat, .nat = n}); }

ValuePtr foreign(std::function<std::uint64_t(std::uint64_t)> f) {
  return host_fn([f = std::move(f)](const ValuePtr& v, Budget&) -> ValuePtr {
    return nat_value(f(readback_nat(v)));
  });
}

ValuePtr host_fn(std::function<ValuePtr(const ValuePtr&, Budget&)> f) {
  Value v;
  v.kind = VKind::Host;
  v.host = [f = std::move(f)](const ThunkPtr& th, Budget& budget) {
    return f(force(th, budget), budget);
  };
  return mk(std::move(v));
}

ValuePtr pair_value(ValuePtr fst, ValuePtr snd) {
  Value v;
  v.kind = VKind::Pair;
  v.fst = Thunk::of(std::move(fst));
  v.snd = Thunk::of(std::move(snd));
  return mk(std::move(v));
}

ValuePtr force(const ThunkPtr& th, Budget& budget) {
  if (th->known) return th->known;
  ValuePtr v = th->compute ? th->compute(budget) : eval(th->env, th->t, budget);
  // memoize: evaluation is pure, and shared thunks otherwise make the
  // translated recursors recompute whole chains under call-by-name
  th->known = v;
  th->env.clear();
  th->t = nullptr;
  th->compute = nullptr;
  return v;
}

ValuePtr eval(const Env& env, const TmPtr& t, Budget& budget) {
  budget.spend();
  switch (t->kind) {
    case TmKind::Var: {
      if (t->idx < 0 || t->idx >= static_cast<int>(env.size()))
        fail(ErrCode::IllTypedRuntime, "variable index out of range");
      return force(env[env.size() - 1 - static_cast<size_t>(t->idx)], budget);
    }
    case TmKind::Lam:
      return mk({.kind = VKind::Closure, .env = env, .dom = t->ty1, .body = t->t1});
    case TmKind::App:
      return apply(eval(env, t->t1, budget), Thunk::of(t->t2, env), budget);
    case TmKind::Zero:
      return nat_value(0);
    default:
      return mk({.kind = VKind::Prim, .prim = t});
  }
}

ValuePtr eval_closed(const TmPtr& t, Budget& budget) { return eval({}, t, budget); }

ValuePtr apply(const ValuePtr& fn, const ThunkPtr& arg, Budget& budget) {
  budget.spend();
  switch (fn->kind) {
    case VKind::Closure: {
      Env inner = fn->env;
      inner.push_back(arg);
      return eval(inner, fn->body, budget);
    }
    case VKind::Host:
      return fn->host(arg, budget);
    case VKind::Prim: {
      std::vector<ThunkPtr> args = fn->args;
      args.push_back(arg);
      if (static_cast<int>(args.size()) < prim_arity(fn->prim->kind))
        return mk({.kind = VKind::Prim, .prim = fn->prim, .args = std::move(args)});
      return delta(fn->prim, args, budget);
    }
    default:
      fail(ErrCode::IllTypedRuntime, "application of a non-function value");
  }
}

ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg, Budget& budget) {
  return apply(fn, Thunk::of(arg), budget);
}

namespace {

ValuePtr delta(const TmPtr& prim, const std::vector<ThunkPtr>& args, Budget& budget) {
  switch (prim->kind) {
    case TmKind::Suc: {
      ValuePtr v = force(args[0], budget);
      if (v->kind != VKind::Nat) fail(ErrCode::IllTypedRuntime, "suc of a non-numeral");
      return nat_value(v->nat + 1);
    }
    case TmKind::Rec: {
      ValuePtr nv = force(args[2], budget);
      if (nv->kind != VKind::Nat) fail(ErrCode::IllTypedRuntime, "rec scrutinee not a numeral");
      std::uint64_t n = nv->nat;
      if (n == 0) return force(args[0], budget);
      ThunkPtr a = args[0];
      ValuePtr f = force(args[1], budget);
      // rec(a,f,n+1) = f(n, rec(a,f,n)); the recursive occurrence stays lazy.
      ThunkPtr below = Thunk::defer([prim, a, fthunk = args[1], n](Budget& b) {
        return delta(prim, {a, fthunk, Thunk::of(nat_value(n - 1))}, b);
      });
      return apply(apply(f, Thunk::of(nat_value(n - 1)), budget), below, budget);
    }
    case TmKind::PairC:
      return mk({.kind = VKind::Pair, .fst = args[0], .snd = args[1]});
    case TmKind::Pr1:
    case TmKind::Pr2: {
      ValuePtr p = force(args[0], budget);
      if (p->kind != VKind::Pair) fail(ErrCode::IllTypedRuntime, "projection of a non-pair");
      return force(prim->kind == TmKind::Pr1 ? p->fst : p->snd, budget);
    }
    case TmKind::Inl:
      return mk({.kind = VKind::Inl, .inj = args[0]});
    case TmKind::Inr:
      return mk({.kind = VKind::Inr, .inj = args[0]});
    case TmKind::CaseC: {
      ValuePtr s = force(args[2], budget);
      if (s->kind == VKind::Inl) return apply(force(args[0], budget), s->inj, budget);
      if (s->kind == VKind::Inr) return apply(force(args[1], budget), s->inj, budget);
      fail(ErrCode::IllTypedRuntime, "case scrutinee not an injection");
    }
    default:
      fail(ErrCode::IllTypedRuntime, "unknown primitive");
  }
}

}  // namespace

std::uint64_t readback_nat(const ValuePtr& v) {
  if (v->kind != VKind::Nat) fail(ErrCode::NotANumeral, "value is not a numeral");
  return v->nat;
}

bool value_fits_type(const ValuePtr& v, const TyPtr& ty, Budget& budget) {
  switch (ty->kind) {
    case TyKind::Nat:
      return v->kind == VKind::Nat;
    case TyKind::Arrow:
      return v->kind == VKind::Closure || v->kind == VKind::Prim || v->kind == VKind::Host;
    case TyKind::Prod:
      return v->kind == VKind::Pair && value_fits_type(force(v->fst, budget), ty->a, budget) &&
             value_fits_type(force(v->snd, budget), ty->b, budget);
    case TyKind::Sum:
      if (v->kind == VKind::Inl) return value_fits_type(force(v->inj, budget), ty->a, budget);
      if (v->kind == VKind::Inr) return value_fits_type(force(v->inj, budget), ty->b, budget);
      return false;
    default:
      return false;
  }
}

ValuePtr sample_value(const TyPtr& ty, const Sampler& s, Rng& rng) {
  switch (ty->kind) {
    case TyKind::Nat:
      return nat_value(rng() % (s.max_nat + 1));
    case TyKind::Arrow: {
      if (ty->a->kind == TyKind::Nat && ty->b->kind == TyKind::Nat) {
        std::vector<std::uint64_t> tab(32);
        for (auto& x : tab) x = rng() % (s.seq_bound + 1);
        return foreign([tab = std::move(tab)](std::uint64_t i) { return tab[i % tab.size()]; });
      }
      ValuePtr c = sample_value(ty->b, s, rng);
      return host_fn([c](const ValuePtr&, Budget&) { return c; });
    }
    case TyKind::Prod:
      return pair_value(sample_value(ty->a, s, rng), sample_value(ty->b, s, rng));
    case TyKind::Sum: {
      bool left = rng() & 1;
      Value v;
      v.kind = left ? VKind::Inl : VKind::Inr;
      v.inj = Thunk::of(sample_value(left ? ty->a : ty->b, s, rng));
      return mk(std::move(v));
    }
    default:
      fail(ErrCode::InvalidArgument, "cannot sample a value at a type with holes");
  }
}

bool ext_eq_sampled(const ValuePtr& f, const ValuePtr& g, const TyPtr& ty, const Sampler& s,
                    Rng& rng, Budget& budget, int n_samples) {
  if (n_samples < 0) n_samples = s.samples;
  switch (ty->kind) {
    case TyKind::Nat:
      return readback_nat(f) == readback_nat(g);
    case TyKind::Arrow: {
      for (int i = 0; i < n_samples; ++i) {
        ValuePtr x = sample_value(ty->a, s, rng);
        if (!ext_eq_sampled(apply(f, x, budget), apply(g, x, budget), ty->b, s, rng, budget,
                            std::max(1, n_samples / 4)))
          return false;
      }
      return true;
    }
    case TyKind::Prod:
      return ext_eq_sampled(force(f->fst, budget), force(g->fst, budget), ty->a, s, rng, budget,
                            n_samples) &&
             ext_eq_sampled(force(f->snd, budget), force(g->snd, budget), ty->b, s, rng, budget,
                            n_samples);
    case TyKind::Sum: {
      if (f->kind != g->kind) return false;
      TyPtr inner = f->kind == VKind::Inl ? ty->a : ty->b;
      return ext_eq_sampled(force(f->inj, budget), force(g->inj, budget), inner, s, rng, budget,
                            n_samples);
    }
    default:
      fail(ErrCode::InvalidArgument, "ext_eq_sampled at a type with holes");
  }
}

}  // namespace gst
