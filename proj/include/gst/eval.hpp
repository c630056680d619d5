#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "gst/syntax.hpp"

namespace gst {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// A call-by-name suspension: either an unevaluated (term, env) pair, a
// host-supplied computation, or an already-known value. Thunks are not
// memoized; T is total, so re-forcing only costs time.
struct Thunk;
using ThunkPtr = std::shared_ptr<Thunk>;
using Env = std::vector<ThunkPtr>;  // indexed from the back: Var 0 = back()

struct Budget {
  std::uint64_t steps;
  void spend() {
    if (steps == 0) fail(ErrCode::BudgetExhausted, "evaluation step budget exhausted");
    --steps;
  }
};

// Reads GST_BUDGET from the environment, default 10^8.
std::uint64_t default_budget();

enum class VKind { Nat, Closure, Pair, Inl, Inr, Prim, Host };

struct Value {
  VKind kind;
  std::uint64_t nat = 0;                       // Nat
  Env env; TyPtr dom; TmPtr body;              // Closure
  ThunkPtr fst, snd;                           // Pair
  ThunkPtr inj;                                // Inl / Inr
  TmPtr prim; std::vector<ThunkPtr> args;      // partially applied constant
  std::function<ValuePtr(const ThunkPtr&, Budget&)> host;  // Host (foreign)
};

struct Thunk {
  TmPtr t;  // with env: pending eval
  Env env;
  ValuePtr known;                                 // host-injected value
  std::function<ValuePtr(Budget&)> compute;       // host-injected computation

  static ThunkPtr of(TmPtr t, Env env);
  static ThunkPtr of(ValuePtr v);
  static ThunkPtr defer(std::function<ValuePtr(Budget&)> f);
};

ValuePtr force(const ThunkPtr& th, Budget& budget);
ValuePtr eval(const Env& env, const TmPtr& t, Budget& budget);
ValuePtr eval_closed(const TmPtr& t, Budget& budget);
ValuePtr apply(const ValuePtr& fn, const ThunkPtr& arg, Budget& budget);
ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg, Budget& budget);

std::uint64_t readback_nat(const ValuePtr& v);

ValuePtr nat_value(std::uint64_t n);
// Wraps a host sequence as a value of object type N -> N.
ValuePtr foreign(std::function<std::uint64_t(std::uint64_t)> f);
// Wraps an arbitrary host function on values (oracle plumbing; the argument
// thunk is forced before f sees it).
ValuePtr host_fn(std::function<ValuePtr(const ValuePtr&, Budget&)> f);
ValuePtr pair_value(ValuePtr fst, ValuePtr snd);

// Structural compatibility of a fully evaluated value with a type; arrows
// only check that the value is applicable.
bool value_fits_type(const ValuePtr& v, const TyPtr& ty, Budget& budget);

struct Sampler {
  std::uint64_t seed = 42;
  std::uint64_t max_nat = 8;    // numeral bound
  std::uint64_t seq_bound = 5;  // entries of sampled sequences
  int samples = 100;            // per universal quantifier
};

using Rng = std::mt19937_64;

// A random value of the given object type: numerals at N, seeded-table
// foreign sequences at N -> N, constant functions at other arrows.
ValuePtr sample_value(const TyPtr& ty, const Sampler& s, Rng& rng);

// Sampled extensional equality at the given object type: exact at N, both
// sides applied to sampled arguments at arrows, component-wise at products.
// True means no counterexample was found within the budget.
bool ext_eq_sampled(const ValuePtr& f, const ValuePtr& g, const TyPtr& ty, const Sampler& s,
                    Rng& rng, Budget& budget, int n_samples = -1);

}  // namespace gst
