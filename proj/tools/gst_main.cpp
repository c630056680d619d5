#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gst.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { gst_string_free(p); }
  char** slot() { return &p; }
  std::string str() const { return p ? p : ""; }
};

int fail_input(const gst_session* s) {
  std::cerr << "error: " << gst_session_error(s) << "\n";
  return 2;
}

int load_all(gst_session* s, const std::vector<std::string>& files) {
  for (const auto& f : files)
    if (gst_load_file(s, f.c_str()) != GST_OK) return fail_input(s);
  return 0;
}

void emit(const std::string& text, const std::string& json_path) {
  if (json_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(json_path);
    out << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"System T translation and witness-extraction toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string def, style = "gentzen", nucleus, property, term, json_path;
  std::uint64_t seed = 42;
  int samples = 100;

  auto add_common = [&](CLI::App* c, bool need_files = true) {
    c->add_option("files", files, "input .gst source files")->required(need_files);
    c->add_option("--def", def, "definition name");
    c->add_option("--json", json_path, "write the JSON report to this path");
  };

  CLI::App* check = app.add_subcommand("check", "parse and typecheck, print the definitions");
  add_common(check);

  CLI::App* translate = app.add_subcommand("translate", "translate a definition");
  add_common(translate);
  translate->add_option("--style", style, "gentzen | kolmogorov | kuroda");
  translate->add_option("--nucleus", nucleus,
                        "identity | major | lifting | cont | ucont | bar | gen-identity | gen-cont")
      ->required();

  CLI::App* extract = app.add_subcommand("extract", "extract a witness term");
  add_common(extract);
  extract
      ->add_option("--property", property,
                   "modulus | ucmodulus | ucmodulus-bar | majorant | bar-triple | kuroda-modulus")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "run an oracle check on a definition");
  add_common(verify);
  verify
      ->add_option("--property", property,
                   "continuity | uniform | gbr | secures | majorant | logical-relation")
      ->required();
  verify->add_option("--nucleus", nucleus, "nucleus for logical-relation");
  verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--samples", samples, "samples per universal");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a closed term");
  add_common(eval, false);
  eval->add_option("--term", term, "source expression to evaluate");

  CLI11_PARSE(app, argc, argv);

  gst_session* s = gst_session_new();
  int rc = load_all(s, files);
  if (rc != 0) {
    gst_session_free(s);
    return rc;
  }

  if (check->parsed()) {
    Owned out;
    if (gst_list_defs(s, out.slot()) != GST_OK) rc = fail_input(s);
    else std::cout << out.str();
  } else if (translate->parsed()) {
    Owned t, ty;
    if (gst_translate(s, def.c_str(), style.c_str(), nucleus.c_str(), t.slot(), ty.slot()) !=
        GST_OK)
      rc = fail_input(s);
    else
      std::cout << def << " : " << ty.str() << "\n" << t.str() << "\n";
  } else if (extract->parsed()) {
    Owned out;
    if (gst_extract(s, def.c_str(), property.c_str(), out.slot()) != GST_OK)
      rc = fail_input(s);
    else
      emit(out.str(), json_path);
  } else if (verify->parsed()) {
    Owned out;
    int pass = 0;
    if (gst_verify(s, def.c_str(), property.c_str(), nucleus.empty() ? nullptr : nucleus.c_str(),
                   seed, samples, out.slot(), &pass) != GST_OK) {
      rc = fail_input(s);
    } else {
      emit(out.str(), json_path);
      rc = pass ? 0 : 1;
    }
  } else if (eval->parsed()) {
    std::string src = term;
    if (src.empty() && !def.empty()) src = def;
    if (src.empty()) {
      std::cerr << "error: eval needs --term or --def\n";
      rc = 2;
    } else {
      Owned out;
      if (gst_eval_term(s, src.c_str(), out.slot()) != GST_OK) rc = fail_input(s);
      else std::cout << out.str() << "\n";
    }
  }

  gst_session_free(s);
  return rc;
}
