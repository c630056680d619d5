#pragma once

#include <map>
#include <string>
#include <vector>

#include "gst/syntax.hpp"

namespace gst {

struct SourceFile {
  std::vector<Decl> decls;
  const Decl* find(const std::string& name) const;
};

// Parses a declaration file. Named references (earlier declarations and the
// entries of `names`) are inlined, so declaration bodies are closed terms of
// the name-free core. Every body is typechecked against its declared type.
SourceFile parse(const std::string& text, const std::map<std::string, Decl>& names = {});

// Parses a single term (no trailing ';'), closed up to the given names.
TmPtr parse_term(const std::string& text, const std::map<std::string, Decl>& names = {});

TyPtr parse_type(const std::string& text);

// Inverse of parse on well-typed closed terms: parse_term(pretty(t)) == t.
// Numerals are folded back to literals; binder names are invented by depth.
std::string pretty(const TmPtr& t);

}  // namespace gst
