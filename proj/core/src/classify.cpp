#include "gwa/classify.hpp"

#include "gwa/expr.hpp"

namespace gwa {

std::string KKClass::str() const {
  std::string s;
  if (sc_copies > 0) {
    s += "SC";
    if (sc_copies > 1) s += "^" + std::to_string(sc_copies);
  }
  if (c_copies > 0) {
    if (!s.empty()) s += "+";
    s += "C";
    if (c_copies > 1) s += "^" + std::to_string(c_copies);
  }
  return s.empty() ? "0" : s;
}

const char* classify_rule_name(ClassifyRule r) {
  switch (r) {
    case ClassifyRule::NGradedZero: return "n-graded-zero";
    case ClassifyRule::TameSmooth: return "tame-smooth";
    case ClassifyRule::MainClassical: return "main-theorem-classical";
    case ClassifyRule::MainQuantum: return "main-theorem-quantum";
    case ClassifyRule::NGradedCase4: return "case4-n-graded";
  }
  return "?";
}

const char* open_reason_name(OpenReason r) {
  return r == OpenReason::RootOfUnity ? "root_of_unity" : "commutative";
}

std::string classify_rule_text(ClassifyRule r) {
  switch (r) {
    case ClassifyRule::NGradedZero:
      return "P = 0: the algebra is N-graded with weights (0,1,1) and "
             "retracts onto its degree-zero part; class C";
    case ClassifyRule::TameSmooth:
      return "P a nonzero constant: A_1A_{-1} = A_0, the degree-one frame "
             "splits the Toeplitz extension; class SC+C";
    case ClassifyRule::MainClassical:
      return "P nonconstant, q = 1, h0 != 0: the Toeplitz extension and the "
             "shift representation give class C^r, r = number of distinct "
             "roots of P";
    case ClassifyRule::MainQuantum:
      return "P nonconstant, q of infinite multiplicative order, P has a "
             "root besides h0/(1-q): class C^r, r = number of distinct roots "
             "of P";
    case ClassifyRule::NGradedCase4:
      return "P nonconstant with h0/(1-q) as its only root, q of infinite "
             "multiplicative order: the algebra is N-graded with weights "
             "(2,n,n); class C";
  }
  return "?";
}

std::string open_reason_text(OpenReason r) {
  if (r == OpenReason::RootOfUnity)
    return "q != 1 is a root of unity: no classification is available";
  return "sigma is the identity, the algebra is commutative: no "
         "classification is available";
}

std::string Verdict::case_name() const {
  return classified ? classify_rule_name(rule) : open_reason_name(reason);
}

std::string Verdict::citation() const {
  return classified ? classify_rule_text(rule) : open_reason_text(reason);
}

Verdict classify(const Presentation& pres) {
  Verdict v;
  const Scalar one = Scalar::one(pres.mode);
  if (pres.a.is_constant()) {
    v.classified = true;
    if (pres.a.is_zero()) {
      v.rule = ClassifyRule::NGradedZero;
      v.cls = KKClass{1, 0};
    } else {
      v.rule = ClassifyRule::TameSmooth;
      v.cls = KKClass{1, 1};
    }
    v.k0_rank = v.cls.c_copies;
    v.k1_rank = v.cls.sc_copies;
    return v;
  }
  // P nonconstant: branch on the automorphism parameter
  if (pres.sigma.q.is_one()) {
    if (pres.sigma.h0.is_zero()) {
      v.classified = false;
      v.reason = OpenReason::Commutative;
      return v;
    }
    v.classified = true;
    v.rule = ClassifyRule::MainClassical;
    v.r = distinct_root_count(pres.a);
    v.cls = KKClass{*v.r, 0};
    v.k0_rank = *v.r;
    v.k1_rank = 0;
    return v;
  }
  if (is_root_of_unity(pres.sigma.q)) {
    v.classified = false;
    v.reason = OpenReason::RootOfUnity;
    return v;
  }
  // q of infinite multiplicative order
  const Scalar fixed = pres.sigma.h0 / (one - pres.sigma.q);
  v.classified = true;
  v.r = distinct_root_count(pres.a);
  if (has_root_other_than(pres.a, fixed)) {
    v.rule = ClassifyRule::MainQuantum;
  } else {
    v.rule = ClassifyRule::NGradedCase4;  // r = 1 with the fixed point as root
  }
  v.cls = KKClass{*v.r, 0};
  v.k0_rank = *v.r;
  v.k1_rank = 0;
  return v;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = v.classified ? "classified" : "open";
  if (v.classified) {
    j["class"] = v.cls.str();
    if (v.r) j["r"] = *v.r;
    j["k0_rank"] = v.k0_rank;
    j["k1_rank"] = v.k1_rank;
    j["case"] = v.case_name();
  } else {
    j["reason"] = open_reason_name(v.reason);
    j["case"] = v.case_name();
  }
  j["citation"] = v.citation();
  return j;
}

Certificate certificate(const Presentation& pres) {
  Certificate c{classify(pres), canonicalize(pres), {}, {}, {}};
  if (!pres.a.is_constant()) {
    c.distinct_roots = distinct_root_count(pres.a);
    if (!pres.sigma.q.is_one()) {
      const Scalar fixed =
          pres.sigma.h0 / (Scalar::one(pres.mode) - pres.sigma.q);
      c.only_root_is_fixed_point = !has_root_other_than(pres.a, fixed);
    }
  }
  if (c.verdict.classified) {
    if (c.verdict.rule == ClassifyRule::NGradedZero) {
      c.grading_weights = std::vector<long>{0, 1, 1};
    } else if (c.verdict.rule == ClassifyRule::NGradedCase4 &&
               c.canonical.tag == CaseTag::Quantum) {
      const long n = c.canonical.presentation.a.degree();
      c.grading_weights = std::vector<long>{2, n, n};
    }
  }
  return c;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_to_json(c.verdict);
  nlohmann::ordered_json canon;
  canon["tag"] = case_tag_name(c.canonical.tag);
  canon["presentation"] = presentation_to_json(c.canonical.presentation);
  auto trace = nlohmann::ordered_json::array();
  for (const auto& t : c.canonical.trace) {
    nlohmann::ordered_json step;
    step["q"] = t.q.str();
    step["h0"] = t.h0.str();
    trace.push_back(step);
  }
  canon["trace"] = trace;
  j["canonical"] = canon;
  if (c.distinct_roots) j["distinct_roots"] = *c.distinct_roots;
  if (c.only_root_is_fixed_point)
    j["only_root_is_fixed_point"] = *c.only_root_is_fixed_point;
  if (c.grading_weights) {
    const auto& w = *c.grading_weights;
    nlohmann::ordered_json g;
    g["weights"] = w;
    // the witness is checkable: the defining relations are homogeneous
    g["homogeneous"] =
        is_graded_for_weights(c.canonical.presentation, w[0], w[1], w[2]);
    j["grading_witness"] = g;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Example registry

std::vector<ExampleInfo> example_registry() {
  return {
      {"weyl", "", "sigma(h) = h - 1, P = h (rational mode)"},
      {"quantum-weyl", "[--q Q]", "sigma(h) = q h, P = h - 1 (generic mode unless --q)"},
      {"quantum-plane", "[--q Q]", "sigma(h) = q h, P = h (generic mode unless --q)"},
      {"b-lambda", "--lambda L", "sigma(h) = h - 1, P = -h(h+1) - L/4 (rational mode)"},
      {"wpq", "--k K --l L", "sigma(h) = q^{2l} h, P = h^k prod(1 - q^{-2i} h) (generic mode)"},
  };
}

Presentation named_example(const std::string& name, const ExampleParams& params) {
  if (name == "weyl") {
    const FieldMode m = params.mode.value_or(FieldMode::Rational);
    return Presentation(
        AffineAuto(Scalar::one(m), Scalar::integer(-1, m)), Poly::h(m));
  }
  if (name == "quantum-weyl" || name == "quantum-plane") {
    Scalar q = Scalar::q();
    if (params.q) {
      const FieldMode pm = params.mode.value_or(
          params.q->find('q') != std::string::npos ? FieldMode::Generic
                                                   : FieldMode::Rational);
      q = parse_scalar(*params.q, pm);
    } else if (params.mode == FieldMode::Rational) {
      throw ArithmeticError("rational mode for this example requires --q");
    }
    const FieldMode m = q.mode();
    Poly p = Poly::h(m);
    if (name == "quantum-weyl") p = p - Poly::constant(Scalar::one(m));
    return Presentation(AffineAuto(q, Scalar::zero(m)), p);
  }
  if (name == "b-lambda") {
    if (!params.lambda)
      throw ArithmeticError("example b-lambda requires --lambda");
    const FieldMode m = params.mode.value_or(FieldMode::Rational);
    mpq_class quarter = *params.lambda;
    quarter /= 4;
    const Scalar c = m == FieldMode::Rational
                         ? Scalar::rational(quarter)
                         : Scalar::fraction(QPoly(quarter), QPoly(mpq_class(1)));
    const Poly h = Poly::h(m);
    const Poly p =
        -(h * (h + Poly::constant(Scalar::one(m)))) - Poly::constant(c);
    return Presentation(AffineAuto(Scalar::one(m), Scalar::integer(-1, m)), p);
  }
  if (name == "wpq") {
    if (!params.k || !params.l || *params.k < 1 || *params.l < 1)
      throw ArithmeticError("example wpq requires --k and --l, both >= 1");
    const FieldMode m = FieldMode::Generic;
    const Scalar q = Scalar::q();
    Poly p = Poly::h(m).pow(*params.k);
    for (unsigned i = 0; i < *params.l; ++i) {
      const Scalar c = q.pow(-2 * static_cast<long>(i));
      p = p * (Poly::constant(Scalar::one(m)) - Poly::h(m).scaled(c));
    }
    return Presentation(AffineAuto(q.pow(2 * static_cast<long>(*params.l)),
                                   Scalar::zero(m)),
                        p);
  }
  throw ArithmeticError("unknown example: " + name);
}

}  // namespace gwa
