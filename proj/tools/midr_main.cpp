// midr command line front end. Talks to the library exclusively through the
// C interface in midr/midr.h.

#include <midr/midr.h>

#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct IdealDeleter {
  void operator()(midr_ideal* v) const { midr_ideal_free(v); }
};
struct DecompDeleter {
  void operator()(midr_decomp* d) const { midr_decomp_free(d); }
};
using IdealPtr = std::unique_ptr<midr_ideal, IdealDeleter>;
using DecompPtr = std::unique_ptr<midr_decomp, DecompDeleter>;

// Exit codes: 0 success / predicate true, 1 predicate false, 2 parse error,
// 3 dimension error, 4 any other failure.
int to_exit(int status) {
  switch (status) {
    case MIDR_OK: return 0;
    case MIDR_ERR_PARSE: return 2;
    case MIDR_ERR_DIM: return 3;
    default: return 4;
  }
}

int report(int status, const midr_error& err) {
  std::cerr << "error: " << (err.message[0] ? err.message : "operation failed")
            << "\n";
  return to_exit(status);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  midr_string_free(s);
  return out;
}

struct Options {
  unsigned dim = 0;
  bool json = false;
  bool quiet = false;
  bool svg = false;
};

void emit(const Options& opt, const std::string& text) {
  if (!opt.quiet) std::cout << text << "\n";
}

IdealPtr parse_or_exit(const std::string& expr, const Options& opt,
                       int& exit_code) {
  midr_error err{};
  midr_ideal* raw = nullptr;
  int status = midr_ideal_parse(expr.c_str(), opt.dim, &raw, &err);
  if (status != MIDR_OK) {
    exit_code = report(status, err);
    return nullptr;
  }
  return IdealPtr(raw);
}

int run_format(const std::string& expr, const Options& opt, bool simplify) {
  int code = 0;
  IdealPtr v = parse_or_exit(expr, opt, code);
  if (!v) return code;
  IdealPtr shown = std::move(v);
  if (simplify) {
    midr_ideal* s = nullptr;
    if (int st = midr_ideal_simplify(shown.get(), &s); st != MIDR_OK)
      return to_exit(st);
    shown.reset(s);
  }
  char* text = nullptr;
  if (int st = midr_ideal_format(shown.get(), opt.json, &text); st != MIDR_OK)
    return to_exit(st);
  emit(opt, take(text));
  return 0;
}

int run_decompose(const std::string& expr, const Options& opt) {
  int code = 0;
  IdealPtr v = parse_or_exit(expr, opt, code);
  if (!v) return code;
  midr_decomp* d = nullptr;
  if (int st = midr_ideal_decompose(v.get(), &d); st != MIDR_OK)
    return to_exit(st);
  DecompPtr dp(d);
  char* text = nullptr;
  if (int st = midr_decomp_format(dp.get(), opt.json, &text); st != MIDR_OK)
    return to_exit(st);
  emit(opt, take(text));
  return 0;
}

int run_member(const std::string& mono, const std::string& expr,
               const Options& opt) {
  int code = 0;
  IdealPtr v = parse_or_exit(expr, opt, code);
  if (!v) return code;
  midr_error err{};
  int member = 0;
  int st = midr_ideal_member(v.get(), mono.c_str(), &member, &err);
  if (st != MIDR_OK) return report(st, err);
  emit(opt, opt.json ? (member ? "{\"result\":true}" : "{\"result\":false}")
                     : (member ? "true" : "false"));
  return member ? 0 : 1;
}

int run_contains(const std::string& outer, const std::string& inner,
                 const Options& opt) {
  int code = 0;
  IdealPtr a = parse_or_exit(outer, opt, code);
  if (!a) return code;
  IdealPtr b = parse_or_exit(inner, opt, code);
  if (!b) return code;
  int contained = 0;
  char* witness = nullptr;
  int st = midr_ideal_contains(a.get(), b.get(), &contained, &witness, opt.json);
  if (st != MIDR_OK) return to_exit(st);
  std::string w = take(witness);
  if (opt.json) {
    emit(opt, contained ? "{\"result\":true}"
                        : "{\"result\":false,\"witness\":" + w + "}");
  } else if (contained) {
    emit(opt, "true");
  } else {
    emit(opt, "false\nwitness: " + w);
  }
  return contained ? 0 : 1;
}

int run_equal(const std::string& lhs, const std::string& rhs,
              const Options& opt) {
  int code = 0;
  IdealPtr a = parse_or_exit(lhs, opt, code);
  if (!a) return code;
  IdealPtr b = parse_or_exit(rhs, opt, code);
  if (!b) return code;
  int eq = 0;
  if (int st = midr_ideal_equal(a.get(), b.get(), &eq); st != MIDR_OK)
    return to_exit(st);
  emit(opt, opt.json ? (eq ? "{\"result\":true}" : "{\"result\":false}")
                     : (eq ? "true" : "false"));
  return eq ? 0 : 1;
}

int run_irreducible(const std::string& expr, const Options& opt) {
  int code = 0;
  IdealPtr v = parse_or_exit(expr, opt, code);
  if (!v) return code;
  int irr = 0;
  char *f1 = nullptr, *f2 = nullptr;
  if (int st = midr_ideal_is_irreducible(v.get(), &irr, &f1, &f2);
      st != MIDR_OK)
    return to_exit(st);
  std::string a = take(f1), b = take(f2);
  if (opt.json) {
    emit(opt, irr ? "{\"result\":true}"
                  : "{\"result\":false,\"factors\":[\"" + a + "\",\"" + b +
                        "\"]}");
  } else if (irr) {
    emit(opt, "true");
  } else {
    emit(opt, "false\nfactors: " + a + " and " + b);
  }
  return irr ? 0 : 1;
}

int run_staircase(const std::string& expr, const Options& opt) {
  int code = 0;
  IdealPtr v = parse_or_exit(expr, opt, code);
  if (!v) return code;
  midr_error err{};
  char* text = nullptr;
  int format = opt.svg ? 2 : opt.json ? 1 : 0;
  int st = midr_ideal_staircase(v.get(), format, &text, &err);
  if (st != MIDR_OK) return report(st, err);
  std::string out = take(text);
  if (!out.empty() && out.back() == '\n') out.pop_back();
  emit(opt, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial ideals with rational exponents: decompositions, "
               "containment and staircases"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--dim", opt.dim, "number of variables")
      ->required()
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--quiet", opt.quiet, "suppress normal output");

  std::string expr, expr2, mono;

  auto* decompose = app.add_subcommand(
      "decompose", "irredundant intersection of pure-power ideals");
  decompose->add_option("expr", expr)->required();

  auto* recompose =
      app.add_subcommand("recompose", "sum-of-boxes form of an expression");
  recompose->add_option("expr", expr)->required();

  auto* simplify =
      app.add_subcommand("simplify", "drop redundant terms from a sum");
  simplify->add_option("expr", expr)->required();

  auto* member = app.add_subcommand("member", "monomial membership");
  member->add_option("monomial", mono)->required();
  member->add_option("expr", expr)->required();

  auto* containsc =
      app.add_subcommand("contains", "is the second ideal inside the first?");
  containsc->add_option("outer", expr)->required();
  containsc->add_option("inner", expr2)->required();

  auto* equalc = app.add_subcommand("equal", "do both expressions denote the "
                                             "same ideal?");
  equalc->add_option("lhs", expr)->required();
  equalc->add_option("rhs", expr2)->required();

  auto* irreducible =
      app.add_subcommand("irreducible", "is the ideal m-irreducible?");
  irreducible->add_option("expr", expr)->required();

  auto* staircase =
      app.add_subcommand("staircase", "2-d boundary corners of the region");
  staircase->add_option("expr", expr)->required();
  staircase->add_flag("--svg", opt.svg, "emit a standalone SVG image");

  CLI11_PARSE(app, argc, argv);

  if (decompose->parsed()) return run_decompose(expr, opt);
  if (recompose->parsed()) return run_format(expr, opt, false);
  if (simplify->parsed()) return run_format(expr, opt, true);
  if (member->parsed()) return run_member(mono, expr, opt);
  if (containsc->parsed()) return run_contains(expr, expr2, opt);
  if (equalc->parsed()) return run_equal(expr, expr2, opt);
  if (irreducible->parsed()) return run_irreducible(expr, opt);
  if (staircase->parsed()) return run_staircase(expr, opt);
  return 4;
}
