#pragma once

#include "gst/translate.hpp"

namespace gst {

// A functional (N -> N) -> N split into its pointwise value and modulus
// components, both closed terms of type (N -> N) -> N.
struct ContinuityPair {
  TmPtr value;
  TmPtr modulus;
};

// The three components read off the bar-recursion carrier: the value
// (N -> N) -> N, the securing predicate (N -> N) * N -> N (1 on secured
// finite sequences), and the general-bar-recursion functional at the motive.
struct BarTriple {
  TmPtr value;
  TmPtr secures;
  TmPtr recursor;
  TyPtr motive;
};

// All extractors below expect a closed t : (N -> N) -> N except majorant,
// which accepts any closed term; they throw TypeMismatch otherwise.

// t translated under the majorizability nucleus: a term of the same type
// that pointwise dominates t on monotone-dominating arguments.
TmPtr majorant(const TmPtr& t);

// Gentzen translation under the (uniform) continuity nucleus applied to the
// generic sequence: value agrees with t, modulus bounds the sensitive prefix.
ContinuityPair continuity_modulus(const TmPtr& t);
ContinuityPair uniform_continuity_modulus(const TmPtr& t);

// Translation under the bar-recursion nucleus at the given motive, applied
// to the generic sequence.
BarTriple bar_triple(const TmPtr& t, const TyPtr& motive);

// A uniform-continuity modulus (N -> N) -> N obtained by running the
// extracted bar recursor at motive N from the empty sequence.
TmPtr uc_modulus_via_bar(const TmPtr& t);

// The Kuroda-style modulus: ku(t) applied (via bullet) to eta of the Kuroda
// generic sequence under the generalized continuity nucleus.
ContinuityPair kuroda_modulus(const TmPtr& t);

}  // namespace gst
