#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gst/prelude.hpp"
#include "gst/syntax.hpp"

namespace gst {

enum class NucleusKind {
  Identity,
  Majorizability,
  Lifting,
  Continuity,
  UniformContinuity,
  BarRecursion,
  GenIdentity,
  GenContinuity,
};

// A nucleus (JN, eta, kappa): a type and two closed terms
//   eta : N -> JN     kappa : (N -> JN) -> JN -> JN
// with no law requirements. omega, when present, is the generic element of
// type JN -> JN (the translated type of N -> N).
struct SimpleNucleus {
  NucleusKind kind;
  TyPtr jn;
  TmPtr eta;
  TmPtr kappa;
  TmPtr omega;  // null when the nucleus has no generic element
  bool monad_laws_expected = true;
  TyPtr param;  // Lifting: X; BarRecursion: the recursion motive
};

// The type-endofunction generalization: J acts on every type, and eta/kappa
// exist at every instance.
struct GenNucleus {
  NucleusKind kind;
  TyPtr j;  // contains exactly one Hole
  std::function<TmPtr(const TyPtr&)> eta_at;              // sigma -> J sigma
  std::function<TmPtr(const TyPtr&, const TyPtr&)> kappa_at;  // (sigma -> J tau) -> J sigma -> J tau
  TyPtr apply(const TyPtr& sigma) const { return plug(j, sigma); }
};

// Constructors. nucleus() throws WrongTier for Gen* kinds; Lifting and
// BarRecursion take their type parameter (Lifting's generic element exists
// only at X = N -> N).
SimpleNucleus nucleus(NucleusKind kind);
SimpleNucleus lifting_nucleus(const TyPtr& x);
SimpleNucleus bar_nucleus(const TyPtr& sigma);

// The generic element; throws NoGenericElement when the nucleus has none.
TmPtr generic_element(const SimpleNucleus& nuc);

GenNucleus gen_nucleus(NucleusKind kind);  // GenIdentity | GenContinuity

// CLI names: identity, major, lifting, cont, ucont, bar, gen-identity, gen-cont.
std::optional<NucleusKind> nucleus_kind_from_name(const std::string& name);

// Projection helpers for the continuity-style pair encoding JN = (value, modulus)
// and the bar-recursion triple <V, <S, B>>.
TmPtr proj_value(const SimpleNucleus& nuc, const TmPtr& w);
TmPtr proj_modulus(const SimpleNucleus& nuc, const TmPtr& w);
TmPtr proj_bar(const SimpleNucleus& nuc, const TmPtr& w);
TmPtr proj_recursor(const SimpleNucleus& nuc, const TmPtr& w);

}  // namespace gst
