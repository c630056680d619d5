#include "gst/prelude.hpp"

namespace gst {

TyPtr baire_ty() {
  static const TyPtr t = arrow(ty_nat(), ty_nat());
  return t;
}

TyPtr seq_ty() {
  static const TyPtr t = prod(baire_ty(), ty_nat());
  return t;
}

namespace {

constexpr const char* kPreludeSource = R"(
def max : N -> N -> N =
  rec[N -> N] (\n:N. n)
              (\n:N. \f:N -> N. rec[N] (suc n) (\m:N. \g:N. suc (f m)));

def add : N -> N -> N = \m:N. \n:N. rec[N] m (\k:N. \r:N. suc r) n;

def pred : N -> N = \n:N. rec[N] 0 (\k:N. \r:N. k) n;

def monus : N -> N -> N = \m:N. \n:N. rec[N] m (\k:N. \r:N. pred r) n;

def min : N -> N -> N = \m:N. \n:N. monus m (monus m n);

def ispos : N -> N = \k:N. rec[N] 0 (\p:N. \q:N. 1) k;

-- le m n = 1 iff m < n (strict)
def le : N -> N -> N = \m:N. \n:N. ispos (monus n m);

def ifz_n : N -> N -> N -> N = \c:N. \a:N. \b:N. rec[N] a (\p:N. \q:N. b) c;

-- cons i a = the sequence with head i and tail a
def cons : N -> (N -> N) -> N -> N =
  \i:N. \a:N -> N. \k:N. rec[N] i (\p:N. \q:N. a p) k;

def seq_len : (N -> N) * N -> N = \s:(N -> N) * N. pr2[N -> N, N] s;

-- extension of a finite sequence with infinitely many zeros
def seq_hat : (N -> N) * N -> N -> N =
  \s:(N -> N) * N. \i:N. ifz_n (le i (seq_len s)) 0 (pr1[N -> N, N] s i);

def seq_append : (N -> N) * N -> N -> (N -> N) * N =
  \s:(N -> N) * N. \n:N.
    pair[N -> N, N] (\i:N. ifz_n (le i (seq_len s)) n (pr1[N -> N, N] s i))
                    (suc (seq_len s));

def seq_concat : (N -> N) * N -> (N -> N) -> N -> N =
  \s:(N -> N) * N. \a:N -> N. \i:N.
    ifz_n (le i (seq_len s)) (a (monus i (seq_len s))) (pr1[N -> N, N] s i);

def seq_take : (N -> N) -> N -> (N -> N) * N = \a:N -> N. \n:N. pair[N -> N, N] a n;

-- phi a n = the greatest of a 0 .. a n (the running maximum)
def phi : (N -> N) -> N -> N =
  \a:N -> N. \n:N. rec[N] (a 0) (\k:N. \r:N. max r (a (suc k))) n;

-- theta m f d = the maximum image of f on { a | a <=1 d }, for f uniformly
-- continuous on that cube with modulus m
def theta : N -> ((N -> N) -> N) -> (N -> N) -> N =
  \m:N. rec[((N -> N) -> N) -> (N -> N) -> N]
    (\f:(N -> N) -> N. \d:N -> N. f d)
    (\k:N. \th:((N -> N) -> N) -> (N -> N) -> N. \f:(N -> N) -> N. \d:N -> N.
       phi (\i:N. th (\a:N -> N. f (cons i a)) (\j:N. d (suc j))) (d 0))
    m;
)";

std::map<std::string, Decl> build_prelude() {
  SourceFile f = parse(kPreludeSource);
  std::map<std::string, Decl> out;
  for (auto& d : f.decls) out.emplace(d.name, d);
  return out;
}

}  // namespace

const std::map<std::string, Decl>& prelude() {
  static const std::map<std::string, Decl> reg = build_prelude();
  return reg;
}

const Decl& prelude_decl(const std::string& name) {
  const auto& reg = prelude();
  auto it = reg.find(name);
  if (it == reg.end()) fail(ErrCode::UnknownPreludeName, "unknown prelude name '" + name + "'");
  return it->second;
}

Decl ifz_term(const TyPtr& sigma) {
  std::string s = show_ty(sigma);
  std::string src = "\\c:N. \\a:" + s + ". \\b:" + s + ". rec[" + s +
                    "] a (\\p:N. \\q:" + s + ". b) c";
  TmPtr body = parse_term(src);
  return Decl{"ifz", typecheck_closed(body), body};
}

Decl psi_term(const TyPtr& sigma) {
  std::string s = show_ty(sigma);
  std::string seq = "(N -> N) * N";
  std::string gty = seq + " -> " + s;
  std::string hty = seq + " -> (N -> " + s + ") -> " + s;
  // fuel recursion: (n+1) - |s| strictly decreases across the H branch
  std::string src =
      "\\n:N. \\G:" + gty + ". \\H:" + hty + ". \\s:" + seq + ". "
      "rec[" + seq + " -> " + s + "] "
      "(\\t:" + seq + ". G t) "
      "(\\fuel:N. \\rest:" + seq + " -> " + s + ". \\t:" + seq + ". "
      "rec[" + s + "] (G t) (\\p:N. \\q:" + s +
      ". H t (\\m:N. rest (seq_append t m))) (monus (suc n) (seq_len t))) "
      "(monus (suc n) (seq_len s)) s";
  TmPtr body = parse_term(src, prelude());
  return Decl{"psi", typecheck_closed(body), body};
}

}  // namespace gst
