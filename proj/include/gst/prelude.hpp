#pragma once

#include <map>
#include <string>

#include "gst/surface.hpp"
#include "gst/syntax.hpp"

namespace gst {

// N -> N, the type of infinite sequences.
TyPtr baire_ty();
// (N -> N) * N, the encoding of finite sequences: a prefix function paired
// with a length.
TyPtr seq_ty();

// The registry of non-parametric prelude terms, keyed by surface name:
// add, pred, monus, max, min, ispos, le, ifz_n, cons, seq_len, seq_hat,
// seq_append, seq_concat, seq_take, phi, theta. All closed and well-typed;
// available as reserved identifiers in source files.
const std::map<std::string, Decl>& prelude();

// Lookup by name; throws UnknownPreludeName.
const Decl& prelude_decl(const std::string& name);

// if-zero at an arbitrary motive: ifz(n, a, b) = a when n = 0, else b.
Decl ifz_term(const TyPtr& sigma);

// The bar recursor for the constant predicate \s. n < |s|, at motive sigma:
// n < |s|  ->  psi(n, G, H, s) = G(s)
// n >= |s| ->  psi(n, G, H, s) = H(s, \m. psi(n, G, H, s*m))
// realized by primitive recursion on the fuel (n+1) - |s|.
Decl psi_term(const TyPtr& sigma);

}  // namespace gst
