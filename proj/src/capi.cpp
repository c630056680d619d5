#include "gst.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "gst/extract.hpp"
#include "gst/oracle.hpp"
#include "gst/prelude.hpp"
#include "gst/surface.hpp"
#include "json.hpp"

using namespace gst;

struct gst_session {
  std::map<std::string, Decl> defs;  // user definitions, insertion order kept separately
  std::vector<std::string> order;
  std::string error;
};

namespace {

char* dup_str(const std::string& s) {
  char* p = (char*)std::malloc(s.size() + 1);
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gst_status code_of(const Error& e) {
  switch (e.code) {
    case ErrCode::Parse: return GST_ERR_PARSE;
    case ErrCode::UnboundVariable:
    case ErrCode::TypeMismatch:
    case ErrCode::NonFunctionApplication:
    case ErrCode::IllTypedRuntime:
    case ErrCode::NotANumeral: return GST_ERR_TYPE;
    case ErrCode::UnknownName:
    case ErrCode::UnknownPreludeName: return GST_ERR_UNKNOWN_NAME;
    case ErrCode::NucleusTooWeak:
    case ErrCode::NoGenericElement:
    case ErrCode::WrongTier: return GST_ERR_NUCLEUS;
    case ErrCode::BudgetExhausted: return GST_ERR_BUDGET;
    default: return GST_ERR_ARGUMENT;
  }
}

template <typename F>
gst_status guard(gst_session* s, F&& f) {
  if (!s) return GST_ERR_ARGUMENT;
  try {
    f();
    s->error.clear();
    return GST_OK;
  } catch (const Error& e) {
    s->error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    s->error = e.what();
    return GST_ERR_INTERNAL;
  }
}

std::map<std::string, Decl> scope(const gst_session* s) {
  std::map<std::string, Decl> names = prelude();
  for (const auto& [k, v] : s->defs) names[k] = v;
  return names;
}

const Decl& lookup(gst_session* s, const char* def) {
  if (!def) fail(ErrCode::InvalidArgument, "missing definition name");
  auto it = s->defs.find(def);
  if (it == s->defs.end())
    fail(ErrCode::UnknownName, "no definition named '" + std::string(def) + "'");
  return it->second;
}

AnyNucleus make_nucleus(const std::string& name) {
  auto kind = nucleus_kind_from_name(name);
  if (!kind) fail(ErrCode::InvalidArgument, "unknown nucleus '" + name + "'");
  if (*kind == NucleusKind::GenIdentity || *kind == NucleusKind::GenContinuity)
    return gen_nucleus(*kind);
  return nucleus(*kind);
}

Seq const_seq(std::uint64_t c) {
  return [c](std::uint64_t) { return c; };
}

std::string show_value(const ValuePtr& v) {
  switch (v->kind) {
    case VKind::Nat: return std::to_string(v->nat);
    case VKind::Pair: return "<pair>";
    case VKind::Inl: return "<inl>";
    case VKind::Inr: return "<inr>";
    default: return "<function>";
  }
}

}  // namespace

extern "C" {

gst_session* gst_session_new(void) { return new gst_session(); }

void gst_session_free(gst_session* s) { delete s; }

const char* gst_session_error(const gst_session* s) {
  return s ? s->error.c_str() : "null session";
}

gst_status gst_load_string(gst_session* s, const char* src) {
  return guard(s, [&] {
    if (!src) fail(ErrCode::InvalidArgument, "null source");
    SourceFile f = parse(src, scope(s));
    for (auto& d : f.decls) {
      if (!s->defs.count(d.name)) s->order.push_back(d.name);
      s->defs[d.name] = d;
    }
  });
}

gst_status gst_load_file(gst_session* s, const char* path) {
  return guard(s, [&] {
    if (!path) fail(ErrCode::InvalidArgument, "null path");
    std::ifstream in(path);
    if (!in) fail(ErrCode::InvalidArgument, "cannot open '" + std::string(path) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    SourceFile f = parse(ss.str(), scope(s));
    for (auto& d : f.decls) {
      if (!s->defs.count(d.name)) s->order.push_back(d.name);
      s->defs[d.name] = d;
    }
  });
}

gst_status gst_list_defs(gst_session* s, char** out) {
  return guard(s, [&] {
    std::ostringstream os;
    for (const auto& name : s->order)
      os << name << " : " << show_ty(s->defs.at(name).ty) << "\n";
    *out = dup_str(os.str());
  });
}

gst_status gst_type_of(gst_session* s, const char* def, char** out) {
  return guard(s, [&] { *out = dup_str(show_ty(lookup(s, def).ty)); });
}

gst_status gst_translate(gst_session* s, const char* def, const char* style,
                         const char* nucleus_name, char** out_term, char** out_type) {
  return guard(s, [&] {
    const Decl& d = lookup(s, def);
    auto st = style_from_name(style ? style : "gentzen");
    if (!st) fail(ErrCode::InvalidArgument, "unknown style");
    AnyNucleus nuc = make_nucleus(nucleus_name ? nucleus_name : "identity");
    TmPtr tj = tm_translate_closed(*st, nuc, d.body);
    TyPtr tyj = ty_translate(*st, nuc, d.ty);
    if (out_term) *out_term = dup_str(pretty(tj));
    if (out_type) *out_type = dup_str(show_ty(tyj));
  });
}

gst_status gst_extract(gst_session* s, const char* def, const char* property, char** out) {
  return guard(s, [&] {
    const Decl& d = lookup(s, def);
    std::string p = property ? property : "";
    nlohmann::json j;
    j["definition"] = d.name;
    j["property"] = p;
    if (p == "modulus") {
      ContinuityPair c = continuity_modulus(d.body);
      j["value"] = pretty(c.value);
      j["modulus"] = pretty(c.modulus);
    } else if (p == "ucmodulus") {
      ContinuityPair c = uniform_continuity_modulus(d.body);
      j["value"] = pretty(c.value);
      j["modulus"] = pretty(c.modulus);
    } else if (p == "ucmodulus-bar") {
      j["modulus"] = pretty(uc_modulus_via_bar(d.body));
    } else if (p == "majorant") {
      j["majorant"] = pretty(majorant(d.body));
    } else if (p == "bar-triple") {
      BarTriple t = bar_triple(d.body, ty_nat());
      j["value"] = pretty(t.value);
      j["secures"] = pretty(t.secures);
      j["recursor"] = pretty(t.recursor);
    } else if (p == "kuroda-modulus") {
      ContinuityPair c = kuroda_modulus(d.body);
      j["value"] = pretty(c.value);
      j["modulus"] = pretty(c.modulus);
    } else {
      fail(ErrCode::InvalidArgument, "unknown extraction property '" + p + "'");
    }
    *out = dup_str(j.dump(2));
  });
}

gst_status gst_verify(gst_session* s, const char* def, const char* property,
                      const char* nucleus_name, uint64_t seed, int samples, char** out,
                      int* out_pass) {
  return guard(s, [&] {
    const Decl& d = lookup(s, def);
    std::string p = property ? property : "";
    Sampler smp;
    smp.seed = seed;
    if (samples > 0) smp.samples = samples;
    VerificationReport r;
    if (p == "continuity") {
      r = check_continuity(d.body, continuity_modulus(d.body).modulus, smp);
    } else if (p == "uniform") {
      r = check_uniform_continuity(d.body, uniform_continuity_modulus(d.body).modulus,
                                   const_seq(2));
    } else if (p == "gbr") {
      BarTriple t = bar_triple(d.body, ty_nat());
      r = check_gbr(t.secures, t.recursor, ty_nat(), smp);
    } else if (p == "secures") {
      BarTriple t = bar_triple(d.body, ty_nat());
      r = check_secures_monotone(t.secures, d.body, smp);
    } else if (p == "majorant") {
      r = check_majorizes(d.body, majorant(d.body), d.ty, smp);
    } else if (p == "logical-relation") {
      std::string nn = nucleus_name ? nucleus_name : "major";
      auto kind = nucleus_kind_from_name(nn);
      if (!kind) fail(ErrCode::InvalidArgument, "unknown nucleus '" + nn + "'");
      SimpleNucleus nuc = nucleus(*kind);
      RelationSpec spec;
      switch (*kind) {
        case NucleusKind::Identity:
          spec.name = "eq";
          spec.base = [](std::uint64_t n, const ValuePtr& w, Rng&, Budget&) {
            return n == readback_nat(w);
          };
          spec.gen = [](Rng& rng, Budget&) -> std::pair<std::uint64_t, ValuePtr> {
            std::uint64_t n = rng() % 9;
            return {n, nat_value(n)};
          };
          break;
        case NucleusKind::Majorizability: spec = maj_spec(); break;
        case NucleusKind::Continuity: spec = cont_spec(const_seq(3)); break;
        case NucleusKind::UniformContinuity: spec = ucont_spec(const_seq(2)); break;
        case NucleusKind::BarRecursion: spec = bar_spec(const_seq(3)); break;
        default:
          fail(ErrCode::InvalidArgument, "no relation spec for nucleus '" + nn + "'");
      }
      TmPtr tj = tm_translate_closed(Style::Gentzen, nuc, d.body);
      r = check_logical_relation(nuc, spec, d.body, tj, d.ty, smp);
    } else {
      fail(ErrCode::InvalidArgument, "unknown verification property '" + p + "'");
    }
    if (out) *out = dup_str(r.to_json());
    if (out_pass) *out_pass = r.pass() ? 1 : 0;
  });
}

gst_status gst_eval_term(gst_session* s, const char* term, char** out) {
  return guard(s, [&] {
    if (!term) fail(ErrCode::InvalidArgument, "null term");
    TmPtr t = parse_term(term, scope(s));
    Budget b{default_budget()};
    *out = dup_str(show_value(eval_closed(t, b)));
  });
}

void gst_string_free(char* p) { std::free(p); }

}  // extern "C"
