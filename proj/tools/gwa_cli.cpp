// Command line front end: expression calculator, classifier and
// verification suites for generalized Weyl algebras over exact fields.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gwa/classify.hpp"
#include "gwa/expr.hpp"
#include "gwa/morita.hpp"
#include "gwa/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOpenStrict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct PresentationOptions {
  std::string mode = "rational";
  std::string q, h0, poly;
  std::string example;
  std::string lambda;
  unsigned k = 0, l = 0;
  std::string pres_file;
};

void add_presentation_flags(CLI::App* cmd, PresentationOptions& opt) {
  cmd->add_option("--mode", opt.mode, "Field mode: rational or generic")
      ->check(CLI::IsMember({"rational", "generic"}));
  cmd->add_option("--q", opt.q, "Automorphism scale factor (scalar)");
  cmd->add_option("--h0", opt.h0, "Automorphism shift (scalar)");
  cmd->add_option("--poly", opt.poly, "Defining polynomial P in h");
  cmd->add_option("--example", opt.example,
                  "Named example: weyl, quantum-weyl, quantum-plane, "
                  "b-lambda, wpq");
  cmd->add_option("--lambda", opt.lambda, "Parameter for b-lambda (rational)");
  cmd->add_option("--k", opt.k, "First weight for wpq");
  cmd->add_option("--l", opt.l, "Second weight for wpq");
  cmd->add_option("--pres-file", opt.pres_file,
                  "JSON presentation file {\"mode\",\"q\",\"h0\",\"poly\"}");
}

gwa::FieldMode parse_mode(const std::string& name) {
  return name == "generic" ? gwa::FieldMode::Generic : gwa::FieldMode::Rational;
}

gwa::Presentation resolve_presentation(const PresentationOptions& opt) {
  if (!opt.pres_file.empty()) {
    std::ifstream in(opt.pres_file);
    if (!in) throw gwa::ArithmeticError("cannot open " + opt.pres_file);
    nlohmann::json j;
    in >> j;
    return gwa::presentation_from_json(j);
  }
  if (!opt.example.empty()) {
    gwa::ExampleParams params;
    if (!opt.lambda.empty()) {
      mpq_class v(opt.lambda, 10);
      v.canonicalize();
      params.lambda = v;
    }
    if (opt.k != 0) params.k = opt.k;
    if (opt.l != 0) params.l = opt.l;
    if (!opt.q.empty()) params.q = opt.q;
    return gwa::named_example(opt.example, params);
  }
  const gwa::FieldMode m = parse_mode(opt.mode);
  if (opt.poly.empty())
    throw gwa::ArithmeticError(
        "a presentation requires --poly (or --example / --pres-file)");
  const gwa::Scalar q =
      opt.q.empty() ? gwa::Scalar::one(m) : gwa::parse_scalar(opt.q, m);
  const gwa::Scalar h0 =
      opt.h0.empty() ? gwa::Scalar::zero(m) : gwa::parse_scalar(opt.h0, m);
  return gwa::Presentation(gwa::AffineAuto(q, h0),
                           gwa::parse_poly(opt.poly, m));
}

struct Fixture {
  std::string name;
  gwa::Presentation pres;
};

std::vector<Fixture> default_fixtures() {
  gwa::ExampleParams lam0;
  lam0.lambda = mpq_class(0);
  gwa::ExampleParams wpq11;
  wpq11.k = 1;
  wpq11.l = 1;
  return {
      {"weyl", gwa::named_example("weyl")},
      {"quantum-weyl", gwa::named_example("quantum-weyl")},
      {"quantum-plane", gwa::named_example("quantum-plane")},
      {"b-lambda(0)", gwa::named_example("b-lambda", lam0)},
      {"wpq(1,1)", gwa::named_example("wpq", wpq11)},
  };
}

std::vector<Fixture> representable_fixtures() {
  gwa::ExampleParams lam0;
  lam0.lambda = mpq_class(0);
  return {
      {"weyl", gwa::named_example("weyl")},
      {"quantum-weyl", gwa::named_example("quantum-weyl")},
      {"b-lambda(0)", gwa::named_example("b-lambda", lam0)},
  };
}

int run_classify(const PresentationOptions& opt, bool json, bool strict,
                 bool with_certificate) {
  const gwa::Presentation pres = resolve_presentation(opt);
  const gwa::Verdict v = gwa::classify(pres);
  if (json) {
    if (with_certificate) {
      std::cout << gwa::certificate_to_json(gwa::certificate(pres)).dump()
                << "\n";
    } else {
      std::cout << gwa::verdict_to_json(v).dump() << "\n";
    }
  } else {
    std::cout << "presentation: q = " << pres.sigma.q.str()
              << ", h0 = " << pres.sigma.h0.str()
              << ", P = " << pres.a.str() << "\n";
    if (v.classified) {
      std::cout << "class:        " << v.cls.str() << "\n"
                << "k0 rank:      " << v.k0_rank << "\n"
                << "k1 rank:      " << v.k1_rank << "\n"
                << "case:         " << v.case_name() << "\n";
    } else {
      std::cout << "open:         " << gwa::open_reason_name(v.reason) << "\n";
    }
    std::cout << "why:          " << v.citation() << "\n";
  }
  return (!v.classified && strict) ? kExitOpenStrict : kExitOk;
}

int run_nf(const PresentationOptions& opt, const std::string& expr, bool json) {
  const gwa::Presentation pres = resolve_presentation(opt);
  const gwa::Element u = gwa::parse_element(expr, pres);
  if (json) {
    nlohmann::ordered_json j;
    j["normal_form"] = gwa::element_str(u);
    j["components"] = gwa::element_to_json(u);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << gwa::element_str(u) << "\n";
    for (const auto& [d, p] : u.components())
      std::cout << "  degree " << d << ": " << p.str() << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  unsigned cases = 100;
  unsigned truncation = 24;
  unsigned max_degree = 4;
  unsigned max_index = 5;
  std::uint64_t seed = 0;
};

int run_verify(const std::string& suite, const PresentationOptions& popt,
               const VerifyOptions& vopt, bool json, bool explicit_pres) {
  std::vector<gwa::Report> reports;
  const bool all = suite == "all";

  std::vector<Fixture> general;
  std::vector<Fixture> representable;
  if (explicit_pres) {
    const gwa::Presentation pres = resolve_presentation(popt);
    general.push_back({"presentation", pres});
    representable = general;
  } else {
    general = default_fixtures();
    representable = representable_fixtures();
  }

  const auto tag = [](gwa::Report r, const std::string& fixture) {
    r.meta["fixture"] = fixture;
    return r;
  };

  if (all || suite == "gwa") {
    for (const auto& f : general)
      reports.push_back(
          tag(gwa::verify_normal_form(f.pres, vopt.cases, vopt.seed), f.name));
  }
  if (all || suite == "rep") {
    for (const auto& f : representable)
      reports.push_back(tag(
          gwa::verify_representation(f.pres, vopt.cases, vopt.truncation,
                                     vopt.max_degree, vopt.seed),
          f.name));
  }
  if (all || suite == "toeplitz") {
    reports.push_back(gwa::verify_toeplitz_structure(vopt.cases, vopt.seed));
    for (const auto& f : general)
      reports.push_back(
          tag(gwa::verify_extension(f.pres, vopt.cases, vopt.seed), f.name));
  }
  if (all || suite == "morita") {
    for (const auto& f : representable) {
      reports.push_back(
          tag(gwa::verify_lambda_context(f.pres, vopt.cases, vopt.truncation,
                                         vopt.max_index, vopt.seed),
              f.name));
      reports.push_back(
          tag(gwa::verify_c_context(f.pres, vopt.cases, vopt.truncation,
                                    vopt.max_index, vopt.seed),
              f.name));
    }
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    nlohmann::ordered_json out;
    out["suite"] = suite;
    out["seed"] = vopt.seed;
    out["pass"] = ok;
    out["reports"] = arr;
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& r : reports) {
      std::string fixture =
          r.meta.contains("fixture") ? r.meta["fixture"].get<std::string>() : "";
      std::cout << (r.pass() ? "[pass] " : "[FAIL] ") << r.suite
                << (fixture.empty() ? "" : " (" + fixture + ")") << ": "
                << r.checks.size() << " checks, " << r.failures.size()
                << " failures\n";
      for (const auto& f : r.failures) std::cout << "       " << f << "\n";
    }
    std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_examples(bool json) {
  const auto reg = gwa::example_registry();
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : reg) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["params"] = e.params;
      j["description"] = e.description;
      arr.push_back(j);
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& e : reg)
      std::cout << e.name << " " << e.params << "\n    " << e.description
                << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gwa - exact computation and classification for generalized Weyl "
      "algebras.\n"
      "Expressions use the noncommutative generators x, y and the central "
      "variable h,\nevaluated left to right; division is only defined by "
      "scalars."};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--seed", seed, "Seed for randomized suites");

  PresentationOptions copt;
  bool strict = false, with_cert = false;
  auto* c_cmd = app.add_subcommand("classify", "Classify a presentation");
  c_cmd->fallthrough();
  add_presentation_flags(c_cmd, copt);
  c_cmd->add_flag("--strict", strict, "Exit 1 on an open verdict");
  c_cmd->add_flag("--certificate", with_cert,
                  "Emit the full certificate (JSON only)");

  PresentationOptions nopt;
  std::string expr;
  auto* n_cmd = app.add_subcommand("nf", "Normal form of an expression");
  n_cmd->fallthrough();
  add_presentation_flags(n_cmd, nopt);
  n_cmd->add_option("--expr", expr, "Expression in x, y, h")->required();

  PresentationOptions vpopt;
  VerifyOptions vopt;
  std::string suite;
  auto* v_cmd = app.add_subcommand("verify", "Run verification suites");
  v_cmd->fallthrough();
  v_cmd->add_option("suite", suite, "gwa, rep, toeplitz, morita or all")
      ->required()
      ->check(CLI::IsMember({"gwa", "rep", "toeplitz", "morita", "all"}));
  add_presentation_flags(v_cmd, vpopt);
  v_cmd->add_option("--cases", vopt.cases, "Random cases per suite");
  v_cmd->add_option("--truncation", vopt.truncation, "Matrix truncation size");
  v_cmd->add_option("--max-degree", vopt.max_degree, "Degree bound for samples");
  v_cmd->add_option("--max-index", vopt.max_index, "Index bound for couplings");

  auto* e_cmd = app.add_subcommand("examples", "List the example registry");
  e_cmd->fallthrough();
  (void)e_cmd;

  CLI11_PARSE(app, argc, argv);
  vopt.seed = seed;

  try {
    if (app.got_subcommand("classify"))
      return run_classify(copt, json, strict, with_cert);
    if (app.got_subcommand("nf")) return run_nf(nopt, expr, json);
    if (app.got_subcommand("verify")) {
      const bool explicit_pres = !vpopt.example.empty() ||
                                 !vpopt.poly.empty() ||
                                 !vpopt.pres_file.empty();
      return run_verify(suite, vpopt, vopt, json, explicit_pres);
    }
    if (app.got_subcommand("examples")) return run_examples(json);
  } catch (const gwa::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gwa::ArithmeticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
