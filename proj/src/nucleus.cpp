#include "gst/nucleus.hpp"

#include "gst/surface.hpp"

namespace gst {

namespace {

TmPtr pt(const std::string& src) { return parse_term(src, prelude()); }

SimpleNucleus identity_nucleus() {
  return {.kind = NucleusKind::Identity,
          .jn = ty_nat(),
          .eta = pt("\\n:N. n"),
          .kappa = pt("\\g:N -> N. \\n:N. g n"),
          .monad_laws_expected = true};
}

SimpleNucleus majorizability_nucleus() {
  // kappa(g, n) is the greatest of g 0 .. g n; breaks the left identity law.
  return {.kind = NucleusKind::Majorizability,
          .jn = ty_nat(),
          .eta = pt("\\n:N. n"),
          .kappa = pt("\\g:N -> N. \\n:N. phi g n"),
          .monad_laws_expected = false};
}

SimpleNucleus continuity_nucleus(bool uniform) {
  const std::string A = "(N -> N) -> N";
  const std::string J = "(" + A + ") * (" + A + ")";
  const std::string pr1w = "pr1[" + A + ", " + A + "]";
  const std::string pr2w = "pr2[" + A + ", " + A + "]";
  std::string eta = "\\n:N. pair[" + A + ", " + A + "] (\\a:N -> N. n) (\\a:N -> N. 0)";
  std::string kappa;
  if (!uniform) {
    kappa = "\\g:N -> " + J + ". \\w:" + J + ". pair[" + A + ", " + A + "] "
            "(\\a:N -> N. " + pr1w + " (g (" + pr1w + " w a)) a) "
            "(\\a:N -> N. max (" + pr2w + " (g (" + pr1w + " w a)) a) (" + pr2w + " w a))";
  } else {
    // the modulus over the cube { a | a <=1 d }: the largest modulus of any
    // g i with i bounded by the maximum image of the value component
    kappa = "\\g:N -> " + J + ". \\w:" + J + ". pair[" + A + ", " + A + "] "
            "(\\a:N -> N. " + pr1w + " (g (" + pr1w + " w a)) a) "
            "(\\d:N -> N. max (phi (\\i:N. " + pr2w + " (g i) d) "
            "(theta (" + pr2w + " w d) (" + pr1w + " w) d)) (" + pr2w + " w d))";
  }
  std::string gen = "(\\n:N. pair[" + A + ", " + A + "] (\\a:N -> N. a n) (\\a:N -> N. suc n))";
  SimpleNucleus nuc{.kind = uniform ? NucleusKind::UniformContinuity : NucleusKind::Continuity,
                    .jn = parse_type(J),
                    .eta = pt(eta),
                    .kappa = pt(kappa),
                    .monad_laws_expected = true};
  nuc.omega = app(nuc.kappa, pt(gen));
  return nuc;
}

}  // namespace

SimpleNucleus lifting_nucleus(const TyPtr& x) {
  std::string X = show_ty(x);
  SimpleNucleus nuc{.kind = NucleusKind::Lifting,
                    .jn = arrow(x, ty_nat()),
                    .eta = pt("\\n:N. \\x:" + X + ". n"),
                    .kappa = pt("\\g:N -> (" + X + ") -> N. \\f:(" + X + ") -> N. \\x:" + X +
                                ". g (f x) x"),
                    .monad_laws_expected = true,
                    .param = x};
  if (ty_eq(x, baire_ty()))
    nuc.omega = pt("\\f:(N -> N) -> N. \\x:N -> N. x (f x)");
  return nuc;
}

SimpleNucleus bar_nucleus(const TyPtr& sigma) {
  const std::string S = show_ty(sigma);
  const std::string A = "(N -> N) -> N";
  const std::string Seq = "(N -> N) * N";
  const std::string Sty = Seq + " -> N";
  const std::string Gty = Seq + " -> " + S;
  const std::string Hty = Seq + " -> (N -> " + S + ") -> " + S;
  const std::string Bty = "(" + Gty + ") -> (" + Hty + ") -> " + Seq + " -> " + S;
  const std::string SB = "(" + Sty + ") * (" + Bty + ")";
  const std::string J = "(" + A + ") * " + SB;
  const std::string V = "pr1[" + A + ", " + SB + "]";
  const std::string SBp = "pr2[" + A + ", " + SB + "]";
  const std::string Sp = "pr1[" + Sty + ", " + Bty + "]";
  const std::string Bp = "pr2[" + Sty + ", " + Bty + "]";
  const std::string mkJ = "pair[" + A + ", " + SB + "]";
  const std::string mkSB = "pair[" + Sty + ", " + Bty + "]";
  auto Sof = [&](const std::string& w) { return Sp + " (" + SBp + " " + w + ")"; };
  auto Bof = [&](const std::string& w) { return Bp + " (" + SBp + " " + w + ")"; };

  std::string eta = "\\n:N. " + mkJ + " (\\a:N -> N. n) (" + mkSB +
                    " (\\s:" + Seq + ". 1) (\\G:" + Gty + ". \\H:" + Hty + ". G))";
  std::string kappa =
      "\\g:N -> " + J + ". \\w:" + J + ". " + mkJ +
      " (\\a:N -> N. " + V + " (g (" + V + " w a)) a) (" + mkSB +
      " (\\s:" + Seq + ". min (" + Sof("w") + " s) (" +
      Sof("(g (" + V + " w (seq_hat s)))") + " s))" +
      " (\\G:" + Gty + ". \\H:" + Hty + ". " + Bof("w") + " (\\s:" + Seq + ". " +
      Bof("(g (" + V + " w (seq_hat s)))") + " G H s) H))";

  std::map<std::string, Decl> names = prelude();
  names.emplace("psi", psi_term(sigma));
  std::string gen = "(\\n:N. " + mkJ + " (\\a:N -> N. a n) (" + mkSB +
                    " (\\s:" + Seq + ". le n (seq_len s)) (psi n)))";

  SimpleNucleus nuc{.kind = NucleusKind::BarRecursion,
                    .jn = parse_type(J),
                    .eta = parse_term(eta, names),
                    .kappa = parse_term(kappa, names),
                    .monad_laws_expected = true,
                    .param = sigma};
  nuc.omega = app(nuc.kappa, parse_term(gen, names));
  return nuc;
}

SimpleNucleus nucleus(NucleusKind kind) {
  switch (kind) {
    case NucleusKind::Identity: return identity_nucleus();
    case NucleusKind::Majorizability: return majorizability_nucleus();
    case NucleusKind::Lifting: return lifting_nucleus(baire_ty());
    case NucleusKind::Continuity: return continuity_nucleus(false);
    case NucleusKind::UniformContinuity: return continuity_nucleus(true);
    case NucleusKind::BarRecursion: return bar_nucleus(ty_nat());
    default:
      fail(ErrCode::WrongTier, "kind names a generalized nucleus; use gen_nucleus()");
  }
}

TmPtr generic_element(const SimpleNucleus& nuc) {
  if (!nuc.omega)
    fail(ErrCode::NoGenericElement, "this nucleus has no generic element");
  return nuc.omega;
}

GenNucleus gen_nucleus(NucleusKind kind) {
  switch (kind) {
    case NucleusKind::GenIdentity: {
      GenNucleus g;
      g.kind = kind;
      g.j = ty_hole();
      g.eta_at = [](const TyPtr& s) { return lam(s, var(0)); };
      g.kappa_at = [](const TyPtr& s, const TyPtr& t) {
        // \g:s -> t. \a:s. g a   (J is the identity)
        return lam(arrow(s, t), lam(s, app(var(1), var(0))));
      };
      return g;
    }
    case NucleusKind::GenContinuity: {
      GenNucleus g;
      g.kind = kind;
      g.j = prod(arrow(baire_ty(), ty_hole()), arrow(baire_ty(), ty_nat()));
      auto pr = [](const TyPtr& s) {
        std::string S = show_ty(s);
        return std::pair<std::string, std::string>{"pr1[(N -> N) -> " + S + ", (N -> N) -> N]",
                                                   "pr2[(N -> N) -> " + S + ", (N -> N) -> N]"};
      };
      g.eta_at = [](const TyPtr& s) {
        std::string S = show_ty(s);
        return pt("\\x:" + S + ". pair[(N -> N) -> " + S +
                  ", (N -> N) -> N] (\\a:N -> N. x) (\\a:N -> N. 0)");
      };
      g.kappa_at = [g, pr](const TyPtr& s, const TyPtr& t) {
        std::string S = show_ty(s), T = show_ty(t);
        std::string JS = show_ty(plug(g.j, s)), JT = show_ty(plug(g.j, t));
        auto [v_s, m_s] = pr(s);
        auto [v_t, m_t] = pr(t);
        return pt("\\g:(" + S + ") -> " + JT + ". \\w:" + JS + ". pair[(N -> N) -> " + T +
                  ", (N -> N) -> N] "
                  "(\\a:N -> N. " + v_t + " (g (" + v_s + " w a)) a) "
                  "(\\a:N -> N. max (" + m_t + " (g (" + v_s + " w a)) a) (" + m_s + " w a))");
      };
      return g;
    }
    default:
      fail(ErrCode::WrongTier, "kind names a simple nucleus; use nucleus()");
  }
}

std::optional<NucleusKind> nucleus_kind_from_name(const std::string& name) {
  if (name == "identity") return NucleusKind::Identity;
  if (name == "major") return NucleusKind::Majorizability;
  if (name == "lifting") return NucleusKind::Lifting;
  if (name == "cont") return NucleusKind::Continuity;
  if (name == "ucont") return NucleusKind::UniformContinuity;
  if (name == "bar") return NucleusKind::BarRecursion;
  if (name == "gen-identity") return NucleusKind::GenIdentity;
  if (name == "gen-cont") return NucleusKind::GenContinuity;
  return std::nullopt;
}

namespace {
void require_pair_jn(const SimpleNucleus& nuc) {
  if (nuc.jn->kind != TyKind::Prod)
    fail(ErrCode::InvalidArgument, "nucleus carrier is not a product");
}
}  // namespace

TmPtr proj_value(const SimpleNucleus& nuc, const TmPtr& w) {
  require_pair_jn(nuc);
  return app(pr1_c(nuc.jn->a, nuc.jn->b), w);
}

TmPtr proj_modulus(const SimpleNucleus& nuc, const TmPtr& w) {
  require_pair_jn(nuc);
  if (nuc.kind == NucleusKind::BarRecursion)
    fail(ErrCode::InvalidArgument, "bar-recursion carrier has no modulus component");
  return app(pr2_c(nuc.jn->a, nuc.jn->b), w);
}

TmPtr proj_bar(const SimpleNucleus& nuc, const TmPtr& w) {
  require_pair_jn(nuc);
  const TyPtr& sb = nuc.jn->b;
  return app(pr1_c(sb->a, sb->b), app(pr2_c(nuc.jn->a, sb), w));
}

TmPtr proj_recursor(const SimpleNucleus& nuc, const TmPtr& w) {
  require_pair_jn(nuc);
  const TyPtr& sb = nuc.jn->b;
  return app(pr2_c(sb->a, sb->b), app(pr2_c(nuc.jn->a, sb), w));
}

}  // namespace gst
