#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

/// Affine automorphism of the coefficient ring: h -> q*h + h0, q != 0.
/// Acting on polynomials covariantly: apply(p) = p(q*h + h0).
struct AffineAuto {
  Scalar q, h0;

  AffineAuto(Scalar q_in, Scalar h0_in);
  static AffineAuto identity(FieldMode m);
  static AffineAuto shift(const Scalar& amount);  // h -> h + amount
  static AffineAuto scale(const Scalar& factor);  // h -> factor*h

  FieldMode mode() const { return q.mode(); }
  bool is_identity() const { return q.is_one() && h0.is_zero(); }
  AffineAuto inverse() const;

  /// Coefficients (A, B) with sigma^n(h) = A*h + B; n may be negative.
  std::pair<Scalar, Scalar> power_pair(long n) const;
  Poly apply(const Poly& p, long power = 1) const;

  bool operator==(const AffineAuto& o) const { return q == o.q && h0 == o.h0; }
};

/// As ring maps: (f o g)(p) = f(g(p)).
AffineAuto ring_compose(const AffineAuto& f, const AffineAuto& g);

/// A generalized Weyl algebra presentation over the polynomial ring in h:
/// generators x, y with x*d = sigma(d)*x, y*d = sigma^{-1}(d)*y, y*x = a,
/// x*y = sigma(a).
struct Presentation {
  FieldMode mode;
  AffineAuto sigma;
  Poly a;  // the defining polynomial P

  Presentation(AffineAuto s, Poly defining);
};

/// Normal form of an algebra element over the basis h^n, h^n y^m, h^n x^m:
/// a finite map degree -> nonzero polynomial, with degree d > 0 carrying
/// p(h)*y^d, d = 0 carrying p(h), and d < 0 carrying p(h)*x^{-d}.
class Element {
 public:
  explicit Element(FieldMode m = FieldMode::Rational) : mode_(m) {}

  static Element from_poly(Poly p);
  static Element monomial(int degree, Poly p);
  static Element one(FieldMode m);
  static Element h(FieldMode m) { return from_poly(Poly::h(m)); }
  static Element x(FieldMode m);
  static Element y(FieldMode m);

  FieldMode mode() const { return mode_; }
  bool is_zero() const { return comp_.empty(); }
  const std::map<int, Poly>& components() const { return comp_; }
  Poly component(int d) const;
  /// Largest |degree| in the support (0 for the zero element).
  int degree_span() const;
  /// Largest polynomial degree across components (-1 for zero element).
  int max_poly_degree() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  friend Element add(const Element&, const Element&);
  friend Element mul(const Element&, const Element&, const Presentation&);
  void set(int d, Poly p);  // drops zero polynomials
  FieldMode mode_;
  std::map<int, Poly> comp_;
};

/// Normal-form value of y^k x^k: product of sigma^{-i}(a) for 0 <= i < k.
Poly phi_k(const Presentation& pres, unsigned k);
/// Normal-form value of x^k y^k: product of sigma^{i}(a) for 1 <= i <= k.
Poly psi_k(const Presentation& pres, unsigned k);

Element add(const Element& u, const Element& v);
Element sub(const Element& u, const Element& v);
Element neg(const Element& u);
Element mul(const Element& u, const Element& v, const Presentation& pres);
Element pow(const Element& u, unsigned e, const Presentation& pres);
/// The involution fixing the coefficient ring with x -> y and y -> x; on
/// normal forms (d, p) -> (-d, sigma^d(p)).
Element star(const Element& u, const Presentation& pres);

/// Isomorphic presentation under conjugation by tau, together with the
/// element transport x -> x', y -> y', p(h) -> tau(p).
struct ConjugatedPresentation {
  Presentation presentation;
  AffineAuto tau;
  Element transport(const Element& u) const;
};
ConjugatedPresentation conjugate(const Presentation& pres, const AffineAuto& tau);

enum class CaseTag { Commutative, Classical, Quantum, NonCanonicalizable };
const char* case_tag_name(CaseTag t);

/// Result of canonicalization: sigma is normalized to the identity, to
/// h -> h - 1 (classical) or to h -> q*h (quantum); when possible a root of
/// the defining polynomial is then moved to 0 (classical) or scaled to 1
/// (quantum). The trace records every conjugation applied, in order.
struct CanonicalForm {
  Presentation presentation;
  CaseTag tag;
  std::vector<AffineAuto> trace;
  Element transport(const Element& u) const;
};
CanonicalForm canonicalize(const Presentation& pres);

/// Generator of the left module A_{i+1}A_{-(j+1)} over the coefficient ring:
/// the normal form of y^{i+1} x^{j+1} as (polynomial, word degree i-j).
std::pair<Poly, int> ideal_generator_lambda(const Presentation& pres,
                                            unsigned i, unsigned j);

/// True iff the four defining relations are homogeneous for the weights
/// deg h = wh, deg x = wx, deg y = wy.
bool is_graded_for_weights(const Presentation& pres, long wh, long wx, long wy);

}  // namespace gwa
