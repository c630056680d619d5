#pragma once

#include "gst/eval.hpp"
#include "gst/nucleus.hpp"

namespace gst {

struct Counterexample {
  std::string inputs;
  std::string observed;
  std::string expected;
};

struct VerificationReport {
  std::string property;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<Counterexample> counterexamples;
  std::string note;
  bool pass() const { return counterexamples.empty(); }
  std::string to_json() const;
};

// A base relation at N between a natural and a value of the carrier JN,
// together with generators of related pairs used to instantiate universal
// quantifiers at function positions.
struct RelationSpec {
  std::string name;
  // n R w; may sample internal witnesses through the rng
  std::function<bool(std::uint64_t, const ValuePtr&, Rng&, Budget&)> base;
  // a related pair (n, w)
  std::function<std::pair<std::uint64_t, ValuePtr>(Rng&, Budget&)> gen;
  // a related pair at N -> N (source function, translated-side value); optional
  std::function<std::pair<ValuePtr, ValuePtr>(Rng&, Budget&)> gen_fun;
  // unary mode: base ignores its first argument and reads as a predicate Q(w)
  bool unary = false;
};

using Seq = std::function<std::uint64_t(std::uint64_t)>;

RelationSpec maj_spec();
RelationSpec cont_spec(Seq alpha);
RelationSpec ucont_spec(Seq delta);
RelationSpec bar_spec(Seq alpha);

// For each sampled alpha: m = M(alpha), perturb alpha somewhere in
// [m, m + 8] and require f to be unchanged.
VerificationReport check_continuity(const TmPtr& f, const TmPtr& M, const Sampler& s);

// Exhaustive over prefixes p <= delta of length eval(M delta) + prefix_bound,
// zero-extended; f must be constant on each class of prefixes agreeing up to
// eval(M delta). Throws BudgetExhausted past the enumeration cap.
VerificationReport check_uniform_continuity(const TmPtr& f, const TmPtr& M, const Seq& delta,
                                            int prefix_bound = 2,
                                            std::uint64_t cap = 1000000);

// Checks t maj-dominated by u at rho: <= at N, exhaustive arguments
// 0..max_nat plus sampled dominated pairs at N-domains, sampled pairs above.
VerificationReport check_majorizes(const TmPtr& t, const TmPtr& u, const TyPtr& rho,
                                   const Sampler& s);

// The two general-bar-recursion equations for B against the predicate S at
// motive N, over sampled G, H and short sequences.
VerificationReport check_gbr(const TmPtr& S, const TmPtr& B, const TyPtr& sigma,
                             const Sampler& s);

// S monotone and S secures Y, over sampled sequences and sampled alpha.
VerificationReport check_secures_monotone(const TmPtr& S, const TmPtr& Y, const Sampler& s);

// The fundamental-theorem evidence: (a) the eta/kappa hypothesis conditions
// for the nucleus under the spec's base relation, (b) t related to tJ at rho
// by the inductive relation clauses. Counterexample inputs are prefixed
// "eta", "kappa" or "conclusion" by sub-check.
VerificationReport check_logical_relation(const SimpleNucleus& nuc, const RelationSpec& spec,
                                          const TmPtr& t, const TmPtr& tJ, const TyPtr& rho,
                                          const Sampler& s);

}  // namespace gst
