// Acceptance suite: every release criterion as one exact check with a time
// budget, one pass/fail line each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gwa/classify.hpp"
#include "gwa/expr.hpp"
#include "gwa/matrix_rep.hpp"
#include "gwa/morita.hpp"
#include "gwa/rng.hpp"
#include "gwa/toeplitz.hpp"
#include "gwa/verify.hpp"

using namespace gwa;

namespace {

constexpr FieldMode kRat = FieldMode::Rational;

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GWA_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation example(const std::string& name, const ExampleParams& p = {}) {
  return named_example(name, p);
}

ExampleParams lambda_params(long num) {
  ExampleParams p;
  p.lambda = mpq_class(num);
  return p;
}

ExampleParams wpq_params(unsigned k, unsigned l) {
  ExampleParams p;
  p.k = k;
  p.l = l;
  return p;
}

bool classifies_to(const Presentation& pres, const std::string& cls,
                   std::string& detail) {
  const Verdict v = classify(pres);
  if (!v.classified || v.cls.str() != cls) {
    detail += " [expected " + cls + ", got " +
              (v.classified ? v.cls.str() : std::string("open")) + "]";
    return false;
  }
  return true;
}

bool is_open(const Presentation& pres, OpenReason reason, std::string& detail) {
  const Verdict v = classify(pres);
  if (v.classified || v.reason != reason) {
    detail += " [expected an open verdict]";
    return false;
  }
  return true;
}

// --------------------------------------------------------------------------

bool criterion_classification_table(std::string& detail) {
  bool ok = true;
  ok &= classifies_to(example("weyl"), "C", detail);
  ok &= classifies_to(example("quantum-weyl"), "C", detail);
  ok &= classifies_to(example("quantum-plane"), "C", detail);
  ok &= classifies_to(example("b-lambda", lambda_params(1)), "C", detail);
  ok &= classifies_to(example("b-lambda", lambda_params(0)), "C^2", detail);
  ok &= classifies_to(example("b-lambda", lambda_params(5)), "C^2", detail);
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned l = 1; l <= 4; ++l) {
      const std::string expect = "C^" + std::to_string(l + 1);
      ok &= classifies_to(example("wpq", wpq_params(k, l)), expect, detail);
    }
  }
  ok &= classifies_to(Presentation(AffineAuto(Scalar::rational(1),
                                              Scalar::rational(-1)),
                                   Poly(kRat)),
                      "C", detail);
  ok &= classifies_to(
      Presentation(AffineAuto(Scalar::rational(1), Scalar::rational(-1)),
                   Poly::constant(Scalar::rational(3))),
      "SC+C", detail);
  ok &= is_open(Presentation(AffineAuto(Scalar::rational(-1),
                                        Scalar::rational(0)),
                             parse_poly("h(h-1)", kRat)),
                OpenReason::RootOfUnity, detail);
  ok &= is_open(Presentation(AffineAuto(Scalar::rational(1),
                                        Scalar::rational(0)),
                             parse_poly("h", kRat)),
                OpenReason::Commutative, detail);
  return ok;
}

bool criterion_k_theory_ranks(std::string& detail) {
  bool ok = true;
  const Verdict b0 = classify(example("b-lambda", lambda_params(0)));
  ok &= b0.classified && b0.k0_rank == 2 && b0.k1_rank == 0;
  const Verdict c3 = classify(Presentation(
      AffineAuto(Scalar::rational(1), Scalar::rational(-1)),
      Poly::constant(Scalar::rational(3))));
  ok &= c3.classified && c3.k0_rank == 1 && c3.k1_rank == 1;
  const Verdict w12 = classify(example("wpq", wpq_params(1, 2)));
  ok &= w12.classified && w12.k0_rank == 3 && w12.k1_rank == 0;
  if (!ok) detail += " [rank mismatch]";
  return ok;
}

bool criterion_normal_form_engine(std::string& detail) {
  const std::vector<std::pair<std::string, Presentation>> fixtures = {
      {"weyl", example("weyl")},
      {"quantum-weyl", example("quantum-weyl")},
      {"quantum-plane", example("quantum-plane")},
      {"b-lambda(0)", example("b-lambda", lambda_params(0))},
      {"wpq(1,1)", example("wpq", wpq_params(1, 1))},
  };
  bool ok = true;
  for (const auto& [name, pres] : fixtures) {
    const Report r = verify_normal_form(pres, 200, 101);
    if (!r.pass()) {
      ok = false;
      detail += " [" + name + " failed]";
    }
  }
  return ok;
}

bool criterion_representation(std::string& detail) {
  bool ok = true;
  const auto fixtures = std::vector<std::pair<std::string, Presentation>>{
      {"weyl", example("weyl")},
      {"quantum-weyl", example("quantum-weyl")},
  };
  for (const auto& [name, pres] : fixtures) {
    const Report r = verify_representation(pres, 200, 24, 4, 103);
    if (!r.pass()) {
      ok = false;
      detail += " [" + name + " failed]";
    }
    // 50 faithfulness probes per fixture at the minimal admissible size
    for (unsigned i = 0; i < 50; ++i) {
      Sampler s(derive_seed(107, i));
      const Element u = s.nonzero_element(pres.mode, 4, 3, 6);
      const std::size_t M = static_cast<std::size_t>(
          u.degree_span() + std::max(0, u.max_poly_degree()) + 2);
      if (!faithfulness_probe(u, pres, M)) {
        ok = false;
        detail += " [faithfulness failed on " + element_str(u) + "]";
      }
    }
  }
  return ok;
}

bool criterion_toeplitz(std::string& detail) {
  bool ok = true;
  const Report s = verify_toeplitz_structure(100, 113);
  if (!s.pass()) {
    ok = false;
    detail += " [structure suite failed]";
  }
  for (const auto& name : {"weyl", "quantum-weyl"}) {
    const Report e = verify_extension(example(name), 100, 127);
    if (!e.pass()) {
      ok = false;
      detail += " [extension failed on " + std::string(name) + "]";
    }
  }
  return ok;
}

bool criterion_morita(std::string& detail) {
  bool ok = true;
  const auto fixtures = std::vector<std::pair<std::string, Presentation>>{
      {"weyl", example("weyl")},
      {"quantum-weyl", example("quantum-weyl")},
  };
  for (const auto& [name, pres] : fixtures) {
    const Report lam = verify_lambda_context(pres, 100, 32, 5, 131);
    const Report c = verify_c_context(pres, 100, 32, 5, 131);
    if (!lam.pass() || !c.pass()) {
      ok = false;
      detail += " [" + name + " failed]";
    }
  }
  return ok;
}

bool criterion_root_count_oracle(std::string& detail) {
  for (const FieldMode m : {FieldMode::Rational, FieldMode::Generic}) {
    for (unsigned i = 0; i < 50; ++i) {
      Sampler s(derive_seed(137, i));
      const unsigned k = static_cast<unsigned>(s.range(1, 4));
      std::vector<Scalar> roots;
      std::set<std::string> seen;
      while (roots.size() < k) {
        const Scalar c = s.coefficient(m, 6);
        if (seen.insert(c.str()).second) roots.push_back(c);
      }
      Poly p = Poly::constant(Scalar::one(m));
      for (const auto& root : roots) {
        const Poly lin = Poly::h(m) - Poly::constant(root);
        p = p * lin.pow(static_cast<unsigned>(s.range(1, 3)));
      }
      if (distinct_root_count(p) != k) {
        detail += " [constructed-count mismatch]";
        return false;
      }
    }
  }
  return true;
}

bool criterion_cli_golden(std::string& detail) {
  const std::string golden_dir = GWA_GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"classify --example weyl --json", "weyl.json"},
      {"classify --example quantum-weyl --json", "quantum-weyl.json"},
      {"classify --example quantum-plane --json", "quantum-plane.json"},
      {"classify --example b-lambda --lambda 0 --json", "b-lambda-0.json"},
      {"classify --example b-lambda --lambda 1 --json", "b-lambda-1.json"},
      {"classify --example wpq --k 1 --l 2 --json", "wpq-1-2.json"},
      {"classify --q 1 --h0 -1 --poly 0 --json", "p-zero.json"},
      {"classify --q 1 --h0 -1 --poly 3 --json", "p-constant.json"},
      {"classify --q -1 --h0 0 --poly \"h(h-1)\" --json", "open-unity.json"},
      {"classify --q 1 --h0 0 --poly h --json", "open-commutative.json"},
  };
  bool ok = true;
  for (const auto& [args, file] : cases) {
    const CliResult r = run_cli(args);
    const std::string expect = read_file(golden_dir + "/" + file);
    if (expect.empty() || r.out != expect) {
      ok = false;
      detail += " [" + file + " mismatch]";
    }
  }

  const CliResult nf = run_cli("nf --example weyl --expr \"y*x\"");
  if (nf.out != "h\n  degree 0: h\n") {
    ok = false;
    detail += " [nf output mismatch: " + nf.out + "]";
  }

  const std::string verify_args =
      "--json --seed 7 verify all --cases 10 --truncation 20 --max-degree 3 "
      "--max-index 3";
  const CliResult v1 = run_cli(verify_args);
  const CliResult v2 = run_cli(verify_args);
  if (v1.exit_code != 0 || v1.out.empty() || v1.out != v2.out) {
    ok = false;
    detail += " [seeded verify all is not byte-reproducible]";
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"classification-table", 1.0, criterion_classification_table},
      {"k-theory-ranks", 1.0, criterion_k_theory_ranks},
      {"normal-form-engine", 10.0, criterion_normal_form_engine},
      {"representation-verification", 30.0, criterion_representation},
      {"toeplitz-model", 30.0, criterion_toeplitz},
      {"morita-identities", 60.0, criterion_morita},
      {"root-count-oracle", 5.0, criterion_root_count_oracle},
      {"cli-golden-files", 30.0, criterion_cli_golden},
  };

  bool all_ok = true;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs > c.budget_seconds) {
      ok = false;
      detail += " [over time budget " + std::to_string(c.budget_seconds) + "s]";
    }
    std::printf("[%s] %d. %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", index,
                c.name.c_str(), secs, detail.c_str());
    all_ok &= ok;
    ++index;
  }
  return all_ok ? 0 : 1;
}
