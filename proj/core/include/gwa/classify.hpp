#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gwa/algebra.hpp"

namespace gwa {

/// Formal sum of copies of the ground field C and its suspension SC.
struct KKClass {
  unsigned c_copies = 0;
  unsigned sc_copies = 0;

  bool operator==(const KKClass&) const = default;
  std::string str() const;  // "C", "C^2", "SC+C", ...
};

enum class ClassifyRule {
  NGradedZero,     // P = 0
  TameSmooth,      // P a nonzero constant
  MainClassical,   // P nonconstant, q = 1, h0 != 0
  MainQuantum,     // P nonconstant, q of infinite order, another root exists
  NGradedCase4,    // P nonconstant, q of infinite order, single fixed root
};

enum class OpenReason { RootOfUnity, Commutative };

const char* classify_rule_name(ClassifyRule r);
const char* open_reason_name(OpenReason r);
/// Self-contained statement of the decision rule's condition and conclusion.
std::string classify_rule_text(ClassifyRule r);
std::string open_reason_text(OpenReason r);

struct Verdict {
  bool classified = false;
  // classified
  KKClass cls;
  std::optional<unsigned> r;  // distinct-root count when it drives the rank
  ClassifyRule rule = ClassifyRule::NGradedZero;
  unsigned k0_rank = 0;
  unsigned k1_rank = 0;
  // open
  OpenReason reason = OpenReason::Commutative;

  std::string case_name() const;
  std::string citation() const;
};

/// Total decision procedure over all presentations.
Verdict classify(const Presentation& pres);

nlohmann::ordered_json verdict_to_json(const Verdict& v);

/// Verdict plus canonical form, root analysis and, for the graded rules, the
/// weight witness; everything needed to audit the decision.
struct Certificate {
  Verdict verdict;
  CanonicalForm canonical;
  std::optional<unsigned> distinct_roots;
  std::optional<bool> only_root_is_fixed_point;  // root h0/(1-q) analysis
  std::optional<std::vector<long>> grading_weights;  // (wh, wx, wy) witness
};

Certificate certificate(const Presentation& pres);
nlohmann::ordered_json certificate_to_json(const Certificate& c);

// ---------------------------------------------------------------------------
// Example registry

struct ExampleParams {
  std::optional<mpq_class> lambda;     // b-lambda
  std::optional<unsigned> k, l;        // wpq
  std::optional<std::string> q;        // quantum examples; parsed in `mode`
  std::optional<FieldMode> mode;
};

struct ExampleInfo {
  std::string name;
  std::string params;
  std::string description;
};

std::vector<ExampleInfo> example_registry();

/// weyl | quantum-weyl | quantum-plane | b-lambda | wpq, with parameters as
/// required; unknown names and invalid parameters are errors.
Presentation named_example(const std::string& name,
                           const ExampleParams& params = {});

}  // namespace gwa
