#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "brauerlie/brauerlie.h"

namespace {

struct OptionsDeleter {
  void operator()(bl_options* o) const { bl_options_free(o); }
};
struct ResultDeleter {
  void operator()(bl_result* r) const { bl_result_free(r); }
};
using Options = std::unique_ptr<bl_options, OptionsDeleter>;
using Result = std::unique_ptr<bl_result, ResultDeleter>;

struct Flags {
  std::optional<std::string> delta;
  std::optional<int> n;
  std::optional<int> degree_bound;
  std::string format = "text";
  std::optional<std::string> input;
};

int fail(bl_status s, const std::string& context = {}) {
  std::cerr << "error [" << bl_status_name(s) << "]";
  if (!context.empty()) std::cerr << " in '" << context << "'";
  std::cerr << ": " << bl_last_error() << "\n";
  if (int p = bl_last_error_position(); p >= 0 && !context.empty()) std::cerr << "  " << context << "\n  " << std::string(p, ' ') << "^\n";
  return 2;
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(bl_status s, bl_result* raw, const std::string& format, const std::string& context = {}) {
  Result r(raw);
  if (s != BL_OK) return fail(s, context);
  std::cout << (format == "json" ? bl_result_json(r.get()) : bl_result_text(r.get()));
  return bl_result_passed(r.get()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagrammatic Lie algebras, current modules and their incarnations"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--delta", f.delta, "loop value: a rational or 'generic'");
  app.add_option("--n", f.n, "incarnation dimension")->check(CLI::PositiveNumber);
  app.add_option("--degree-bound", f.degree_bound, "highest current degree checked (default 2)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json", "tikz"}));
  app.add_option("--input", f.input, "input JSON file")->check(CLI::ExistingFile);
  app.fallthrough();

  std::string expr, suite, word, id = "all";
  auto* normalize = app.add_subcommand("normalize", "print the normal form of a diagram expression");
  normalize->add_option("expr", expr)->required();
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember({"lie-axioms", "current", "equivariant"}));
  auto* kernel = app.add_subcommand("kernel", "kernel of the incarnation on End(word)");
  kernel->add_option("word", word)->required();
  auto* solve = app.add_subcommand("solve", "solve a current-morphism problem given by --input");
  auto* reproduce = app.add_subcommand("reproduce", "rerun the reproduction manifest");
  reproduce->add_option("id", id, "all or a manifest id");

  CLI11_PARSE(app, argc, argv);

  Options o(bl_options_new());
  if (!o) return fail(BL_ERR_INTERNAL);
  if (f.delta)
    if (auto s = bl_options_set_delta(o.get(), f.delta->c_str())) return fail(s, *f.delta);
  if (f.n)
    if (auto s = bl_options_set_n(o.get(), *f.n)) return fail(s);
  if (f.degree_bound)
    if (auto s = bl_options_set_degree_bound(o.get(), *f.degree_bound)) return fail(s);
  if (auto s = bl_options_set_format(o.get(), f.format.c_str())) return fail(s);

  std::optional<std::string> input;
  if (f.input) {
    input = slurp(*f.input);
    if (!input) {
      std::cerr << "error [io]: cannot read " << *f.input << "\n";
      return 2;
    }
  }

  bl_result* r = nullptr;
  bl_status s = BL_OK;
  std::string context;
  if (*normalize) {
    context = expr;
    s = bl_normalize(expr.c_str(), o.get(), &r);
  } else if (*verify) {
    s = bl_verify(suite.c_str(), input ? input->c_str() : nullptr, o.get(), &r);
  } else if (*kernel) {
    context = word;
    s = bl_kernel(word.c_str(), o.get(), &r);
  } else if (*solve) {
    if (!input) {
      std::cerr << "error [invalid_argument]: solve needs --input\n";
      return 2;
    }
    s = bl_solve(input->c_str(), o.get(), &r);
  } else {
    s = bl_reproduce(id.c_str(), o.get(), &r);
  }
  return emit(s, r, f.format, context);
}
