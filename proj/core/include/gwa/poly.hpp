#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwa/scalar.hpp"

namespace gwa {

/// Univariate polynomial in h over the base field. Stored densely by degree
/// with no trailing zero coefficients; all coefficients share one field mode.
class Poly {
 public:
  explicit Poly(FieldMode m = FieldMode::Rational) : mode_(m) {}
  Poly(FieldMode m, std::vector<Scalar> coeffs);

  static Poly constant(Scalar c);
  static Poly h(FieldMode m) { return monomial(Scalar::one(m), 1); }
  static Poly monomial(Scalar c, unsigned deg);
  /// Convenience: build from integer coefficients, index = degree.
  static Poly from_ints(FieldMode m, const std::vector<long>& coeffs);

  FieldMode mode() const { return mode_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar coeff(int i) const;
  const Scalar& leading() const;
  const std::vector<Scalar>& coefficients() const { return c_; }

  Scalar eval(const Scalar& at) const;
  /// Substitute h -> a*h + b.
  Poly compose_affine(const Scalar& a, const Scalar& b) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& s) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder over the coefficient field; divisor nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  std::string str(const char* var = "h") const;

 private:
  void trim();
  FieldMode mode_;
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor via the Euclidean algorithm, with monic
/// normalization of every remainder to control coefficient growth.
/// Errors when both arguments are zero.
Poly gcd(const Poly& p, const Poly& r);

/// p composed with sigma^power where sigma(h) = q*h + h0; power may be
/// negative (sigma^{-1}(h) = (h - h0)/q). Requires q != 0.
Poly apply_auto(const Poly& p, const Scalar& q, const Scalar& h0, long power);

/// Number of distinct roots in an algebraic closure, computed as
/// deg(p) - deg(gcd(p, p')). Errors on constant p.
unsigned distinct_root_count(const Poly& p);

/// True iff the squarefree part of p is not a scalar multiple of (h - lambda),
/// i.e. p is not of the form c*(h - lambda)^n. Errors on constant p.
bool has_root_other_than(const Poly& p, const Scalar& lambda);

/// True iff d divides p exactly. Errors on d = 0.
bool divides(const Poly& d, const Poly& p);

/// Monic product of the distinct linear-over-closure factors: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

/// Search for a root of p lying in the base field. Rational mode is complete
/// (rational root theorem). Generic mode finds roots of the form c*q^j
/// (plus anything exposed by a linear squarefree part); other algebraic roots
/// report nullopt. Candidates are ranked by height, smallest first.
std::optional<Scalar> find_root_in_field(const Poly& p, bool nonzero_only);

}  // namespace gwa
