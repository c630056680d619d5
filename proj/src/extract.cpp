#include "gst/extract.hpp"

#include "gst/surface.hpp"

namespace gst {

namespace {

void expect_functional(const TmPtr& t) {
  TyPtr ty = typecheck_closed(t);
  if (!ty_eq(ty, arrow(baire_ty(), ty_nat())))
    fail(ErrCode::TypeMismatch,
         "extraction needs a term of type (N -> N) -> N, got " + show_ty(ty));
}

ContinuityPair pair_extract(NucleusKind kind, const TmPtr& t) {
  expect_functional(t);
  SimpleNucleus nuc = nucleus(kind);
  TmPtr w = app(tm_translate_closed(Style::Gentzen, nuc, t), generic_element(nuc));
  return {proj_value(nuc, w), proj_modulus(nuc, w)};
}

}  // namespace

TmPtr majorant(const TmPtr& t) {
  typecheck_closed(t);
  return tm_translate_closed(Style::Gentzen, nucleus(NucleusKind::Majorizability), t);
}

ContinuityPair continuity_modulus(const TmPtr& t) {
  return pair_extract(NucleusKind::Continuity, t);
}

ContinuityPair uniform_continuity_modulus(const TmPtr& t) {
  return pair_extract(NucleusKind::UniformContinuity, t);
}

BarTriple bar_triple(const TmPtr& t, const TyPtr& motive) {
  expect_functional(t);
  SimpleNucleus nuc = bar_nucleus(motive);
  TmPtr w = app(tm_translate_closed(Style::Gentzen, nuc, t), generic_element(nuc));
  return {proj_value(nuc, w), proj_bar(nuc, w), proj_recursor(nuc, w), motive};
}

TmPtr uc_modulus_via_bar(const TmPtr& t) {
  BarTriple bt = bar_triple(t, ty_nat());
  std::map<std::string, Decl> names = prelude();
  names.emplace("brec", Decl{"brec", typecheck_closed(bt.recursor), bt.recursor});
  return parse_term(
      "\\d:N -> N. brec (\\s:(N -> N) * N. 0) "
      "(\\s:(N -> N) * N. \\f:N -> N. suc (phi f (d (seq_len s)))) "
      "(pair[N -> N, N] (\\i:N. 0) 0)",
      names);
}

ContinuityPair kuroda_modulus(const TmPtr& t) {
  expect_functional(t);
  GenNucleus g = gen_nucleus(NucleusKind::GenContinuity);
  TmPtr kt = tm_translate_closed(Style::Kuroda, g, t);
  TmPtr omega = parse_term(
      "\\n:N. pair[(N -> N) -> N, (N -> N) -> N] (\\a:N -> N. a n) (\\a:N -> N. suc n)");
  TyPtr ku_nn = arrow(ty_nat(), g.apply(ty_nat()));
  TmPtr w = monadic_apply(Style::Kuroda, g, kt, app(g.eta_at(ku_nn), omega), ku_nn, ty_nat());
  TyPtr a = arrow(baire_ty(), ty_nat());
  return {app(pr1_c(a, a), w), app(pr2_c(a, a), w)};
}

}  // namespace gst
