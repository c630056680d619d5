#include "gst/surface.hpp"

#include <cctype>
#include <sstream>

namespace gst {

const Decl* SourceFile::find(const std::string& name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

enum class Tok {
  Ident, Numeral, Def, Colon, Equals, Semi, LParen, RParen, LBracket, RBracket,
  Comma, Dot, Lambda, Arrow, Plus, Star, End,
};

struct Token {
  Tok kind;
  std::string text;
  unsigned long long num = 0;
  int line = 1, col = 1;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void err(const std::string& msg) const {
    fail(ErrCode::Parse,
         "syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  void advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') { ++line; col = 1; } else { ++col; }
    }
  }

  void skip_trivia() {
    for (;;) {
      while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance();
      if (pos + 1 < src.size() && src[pos] == '-' && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      return;
    }
  }

  Token next() {
    skip_trivia();
    Token t;
    t.line = line;
    t.col = col;
    if (pos >= src.size()) { t.kind = Tok::End; return t; }
    char c = src[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
              src[pos] == '\''))
        advance();
      t.text = src.substr(start, pos - start);
      t.kind = t.text == "def" ? Tok::Def : Tok::Ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) advance();
      t.kind = Tok::Numeral;
      t.text = src.substr(start, pos - start);
      t.num = std::stoull(t.text);
      return t;
    }
    if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
      advance(2);
      t.kind = Tok::Arrow;
      return t;
    }
    advance();
    switch (c) {
      case ':': t.kind = Tok::Colon; return t;
      case '=': t.kind = Tok::Equals; return t;
      case ';': t.kind = Tok::Semi; return t;
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      case '[': t.kind = Tok::LBracket; return t;
      case ']': t.kind = Tok::RBracket; return t;
      case ',': t.kind = Tok::Comma; return t;
      case '.': t.kind = Tok::Dot; return t;
      case '\\': t.kind = Tok::Lambda; return t;
      case '+': t.kind = Tok::Plus; return t;
      case '*': t.kind = Tok::Star; return t;
      default: err(std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lex;
  Token tok;
  const std::map<std::string, Decl>& names;
  std::vector<Decl> file_decls;

  Parser(const std::string& src, const std::map<std::string, Decl>& names)
      : lex(src), names(names) {
    tok = lex.next();
  }

  [[noreturn]] void err(const std::string& msg) const {
    fail(ErrCode::Parse,
         "syntax error at " + std::to_string(tok.line) + ":" + std::to_string(tok.col) + ": " +
             msg);
  }

  void bump() { tok = lex.next(); }

  void expect(Tok k, const char* what) {
    if (tok.kind != k) err(std::string("expected ") + what);
    bump();
  }

  std::string expect_ident() {
    if (tok.kind != Tok::Ident) err("expected identifier");
    std::string s = tok.text;
    bump();
    return s;
  }

  // type := sum [ "->" type ]
  TyPtr type() {
    TyPtr t = sum_type();
    if (tok.kind == Tok::Arrow) {
      bump();
      return arrow(std::move(t), type());
    }
    return t;
  }

  // + and * associate to the right, matching the printer
  TyPtr sum_type() {
    TyPtr t = prod_type();
    if (tok.kind == Tok::Plus) {
      bump();
      return sum(std::move(t), sum_type());
    }
    return t;
  }

  TyPtr prod_type() {
    TyPtr t = atom_type();
    if (tok.kind == Tok::Star) {
      bump();
      return prod(std::move(t), prod_type());
    }
    return t;
  }

  TyPtr atom_type() {
    if (tok.kind == Tok::Ident && tok.text == "N") {
      bump();
      return ty_nat();
    }
    if (tok.kind == Tok::LParen) {
      bump();
      TyPtr t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    err("expected type");
  }

  TmPtr term(std::vector<std::string>& binders) {
    TmPtr t = atom(binders, /*required=*/true);
    for (;;) {
      TmPtr a = atom(binders, /*required=*/false);
      if (!a) return t;
      t = app(std::move(t), std::move(a));
    }
  }

  TyPtr bracket1() {
    expect(Tok::LBracket, "'['");
    TyPtr t = type();
    expect(Tok::RBracket, "']'");
    return t;
  }

  void bracket2(TyPtr* a, TyPtr* b) {
    expect(Tok::LBracket, "'['");
    *a = type();
    expect(Tok::Comma, "','");
    *b = type();
    expect(Tok::RBracket, "']'");
  }

  void bracket3(TyPtr* a, TyPtr* b, TyPtr* c) {
    expect(Tok::LBracket, "'['");
    *a = type();
    expect(Tok::Comma, "','");
    *b = type();
    expect(Tok::Comma, "','");
    *c = type();
    expect(Tok::RBracket, "']'");
  }

  TmPtr atom(std::vector<std::string>& binders, bool required) {
    switch (tok.kind) {
      case Tok::Numeral: {
        unsigned long long n = tok.num;
        bump();
        return numeral(n);
      }
      case Tok::Lambda: {
        bump();
        std::string x = expect_ident();
        expect(Tok::Colon, "':'");
        TyPtr dom = type();
        expect(Tok::Dot, "'.'");
        binders.push_back(x);
        TmPtr body = term(binders);
        binders.pop_back();
        return lam(std::move(dom), std::move(body));
      }
      case Tok::LParen: {
        bump();
        TmPtr t = term(binders);
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Ident: {
        std::string n = tok.text;
        if (n == "zero") { bump(); return zero(); }
        if (n == "suc") { bump(); return suc(); }
        if (n == "rec") { bump(); return rec(bracket1()); }
        if (n == "pair" || n == "pr1" || n == "pr2" || n == "inl" || n == "inr") {
          bump();
          TyPtr a, b;
          bracket2(&a, &b);
          if (n == "pair") return pair_c(a, b);
          if (n == "pr1") return pr1_c(a, b);
          if (n == "pr2") return pr2_c(a, b);
          if (n == "inl") return inl_c(a, b);
          return inr_c(a, b);
        }
        if (n == "case") {
          bump();
          TyPtr a, b, c;
          bracket3(&a, &b, &c);
          return case_c(a, b, c);
        }
        // bound variable?
        for (int i = static_cast<int>(binders.size()) - 1; i >= 0; --i) {
          if (binders[static_cast<size_t>(i)] == n) {
            bump();
            return var(static_cast<int>(binders.size()) - 1 - i);
          }
        }
        // earlier declaration in this file, then predefined names
        for (const auto& d : file_decls) {
          if (d.name == n) {
            bump();
            return d.body;
          }
        }
        auto it = names.find(n);
        if (it != names.end()) {
          bump();
          return it->second.body;
        }
        fail(ErrCode::UnknownName, "unknown name '" + n + "' at " + std::to_string(tok.line) +
                                       ":" + std::to_string(tok.col));
      }
      default:
        if (required) err("expected term");
        return nullptr;
    }
  }

  SourceFile file() {
    while (tok.kind != Tok::End) {
      expect(Tok::Def, "'def'");
      std::string name = expect_ident();
      for (const auto& d : file_decls)
        if (d.name == name) err("duplicate declaration '" + name + "'");
      expect(Tok::Colon, "':'");
      TyPtr ty = type();
      expect(Tok::Equals, "'='");
      std::vector<std::string> binders;
      TmPtr body = term(binders);
      expect(Tok::Semi, "';'");
      TyPtr actual = typecheck_closed(body);
      if (!ty_eq(actual, ty))
        fail(ErrCode::TypeMismatch, "declaration '" + name + "': declared type " + show_ty(ty) +
                                        " but body has type " + show_ty(actual));
      file_decls.push_back({std::move(name), std::move(ty), std::move(body)});
    }
    return SourceFile{std::move(file_decls)};
  }
};

}  // namespace

SourceFile parse(const std::string& text, const std::map<std::string, Decl>& names) {
  Parser p(text, names);
  return p.file();
}

TmPtr parse_term(const std::string& text, const std::map<std::string, Decl>& names) {
  Parser p(text, names);
  std::vector<std::string> binders;
  TmPtr t = p.term(binders);
  if (p.tok.kind != Tok::End) p.err("trailing input after term");
  return t;
}

TyPtr parse_type(const std::string& text) {
  Parser p(text, {});
  TyPtr t = p.type();
  if (p.tok.kind != Tok::End) p.err("trailing input after type");
  return t;
}

namespace {

// Chains of suc applications ending in 0 fold back to literals.
bool as_numeral(const TmPtr& t, unsigned long long* out) {
  const Tm* cur = t.get();
  unsigned long long n = 0;
  while (cur->kind == TmKind::App && cur->t1->kind == TmKind::Suc) {
    ++n;
    cur = cur->t2.get();
  }
  if (cur->kind != TmKind::Zero) return false;
  *out = n;
  return true;
}

void pretty_rec(const TmPtr& t, int depth, int prec, std::ostringstream& out) {
  unsigned long long n;
  if (as_numeral(t, &n)) {
    out << n;
    return;
  }
  switch (t->kind) {
    case TmKind::Var: {
      out << "x" << (depth - 1 - t->idx);
      return;
    }
    case TmKind::Lam: {
      if (prec > 0) out << "(";
      out << "\\x" << depth << ":" << show_ty(t->ty1) << ". ";
      pretty_rec(t->t1, depth + 1, 0, out);
      if (prec > 0) out << ")";
      return;
    }
    case TmKind::App: {
      if (prec > 1) out << "(";
      pretty_rec(t->t1, depth, 1, out);
      out << " ";
      pretty_rec(t->t2, depth, 2, out);
      if (prec > 1) out << ")";
      return;
    }
    case TmKind::Zero: out << "0"; return;
    case TmKind::Suc: out << "suc"; return;
    case TmKind::Rec: out << "rec[" << show_ty(t->ty1) << "]"; return;
    case TmKind::PairC: out << "pair[" << show_ty(t->ty1) << ", " << show_ty(t->ty2) << "]"; return;
    case TmKind::Pr1: out << "pr1[" << show_ty(t->ty1) << ", " << show_ty(t->ty2) << "]"; return;
    case TmKind::Pr2: out << "pr2[" << show_ty(t->ty1) << ", " << show_ty(t->ty2) << "]"; return;
    case TmKind::Inl: out << "inl[" << show_ty(t->ty1) << ", " << show_ty(t->ty2) << "]"; return;
    case TmKind::Inr: out << "inr[" << show_ty(t->ty1) << ", " << show_ty(t->ty2) << "]"; return;
    case TmKind::CaseC:
      out << "case[" << show_ty(t->ty1) << ", " << show_ty(t->ty2) << ", " << show_ty(t->ty3)
          << "]";
      return;
  }
}

}  // namespace

std::string pretty(const TmPtr& t) {
  std::ostringstream out;
  pretty_rec(t, 0, 0, out);
  return out.str();
}

}  // namespace gst
