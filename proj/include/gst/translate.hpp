#pragma once

#include <variant>

#include "gst/nucleus.hpp"
#include "gst/syntax.hpp"

namespace gst {

enum class Style { Gentzen, Kolmogorov, Kuroda };

std::optional<Style> style_from_name(const std::string& name);

// Either nucleus tier. The Gentzen translation on the arrow/product fragment
// accepts a SimpleNucleus; sums and the Kolmogorov/Kuroda styles need the
// generalized tier and reject a SimpleNucleus with NucleusTooWeak.
using AnyNucleus = std::variant<SimpleNucleus, GenNucleus>;

// Type translation. For Gentzen the result is rho with N replaced by JN
// structurally (sums gaining an outer J); for the K-styles it is the full
// outer-J type J ko(rho) / J ku(rho).
TyPtr ty_translate(Style style, const AnyNucleus& nuc, const TyPtr& rho);

// The inner Kolmogorov / Kuroda type maps (without the outer J).
TyPtr ko_inner(const GenNucleus& nuc, const TyPtr& rho);
TyPtr ku_inner(const GenNucleus& nuc, const TyPtr& rho);

// The extension of kappa along the type sigma:
//   ke_sigma : (N -> sigma^J) -> JN -> sigma^J
// `source` generalizes the base N (the case translation needs source
// sigma^J + tau^J); pass ty_nat() for the paper's ke.
TmPtr ke(const AnyNucleus& nuc, const TyPtr& sigma, const TyPtr& source);
inline TmPtr ke(const AnyNucleus& nuc, const TyPtr& sigma) { return ke(nuc, sigma, ty_nat()); }

// Translates ctx |- t : rho to the corresponding term over the translated
// context (binder annotations rewritten in place; de Bruijn indices are
// unchanged). Gentzen needs no typing information; the K-styles typecheck
// subterms to pick the monadic-application instances, so t must be
// well-typed under ctx.
TmPtr tm_translate(Style style, const AnyNucleus& nuc, const Ctx& ctx, const TmPtr& t);

inline TmPtr tm_translate_closed(Style style, const AnyNucleus& nuc, const TmPtr& t) {
  return tm_translate(style, nuc, {}, t);
}

// The translated context for re-typechecking translated open terms.
Ctx ctx_translate(Style style, const AnyNucleus& nuc, const Ctx& ctx);

// Monadic application at instance types sigma, tau:
//   Kolmogorov (diamond): f : J(sigma -> J tau), a : sigma
//   Kuroda (bullet):      f : J(sigma -> J tau), a : J sigma
TmPtr monadic_apply(Style style, const GenNucleus& nuc, const TmPtr& f, const TmPtr& a,
                    const TyPtr& sigma, const TyPtr& tau);

}  // namespace gst
