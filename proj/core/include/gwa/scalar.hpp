#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gwa {

/// Base field selector: exact rationals, or rational functions in a generic
/// parameter q. In generic mode "q is not a root of unity" holds by
/// construction; in rational mode the only roots of unity are 1 and -1.
enum class FieldMode { Rational, Generic };

inline const char* field_mode_name(FieldMode m) {
  return m == FieldMode::Rational ? "rational" : "generic";
}

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense polynomial in the generic parameter q over arbitrary-precision
/// rationals. Internal building block of rational functions; the h-polynomials
/// of the algebra layer live in Poly instead.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const mpq_class& constant);
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly variable();  // the polynomial q
  static QPoly monomial(const mpq_class& c, unsigned deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monomial() const;
  mpq_class coeff(int i) const;
  const mpq_class& leading() const;
  /// Lowest index with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly scaled(const mpq_class& s) const;
  QPoly shifted_down(int k) const;  // divide by q^k; requires valuation >= k
  QPoly monic() const;
  QPoly pow(unsigned e) const;

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);
  /// Monic gcd (Euclid); gcd(0,0) is an error.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  /// lcm of the coefficient denominators (1 for the zero polynomial).
  mpz_class denominator_lcm() const;
  /// gcd of the coefficient numerators, nonnegative (0 for zero).
  mpz_class numerator_content() const;

  std::string str(const char* var = "q") const;

 private:
  void trim();
  std::vector<mpq_class> c_;  // c_[i] is the coefficient of q^i
};

/// An element of the base field. Rational mode holds a reduced fraction;
/// generic mode holds a rational function num/den in q with den monic,
/// num and den coprime, and zero stored as 0/1.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& value);
  static Scalar integer(long n, FieldMode m);
  static Scalar zero(FieldMode m) { return integer(0, m); }
  static Scalar one(FieldMode m) { return integer(1, m); }
  /// The generic parameter q itself.
  static Scalar q();
  /// Normalizes an arbitrary fraction of q-polynomials (generic mode).
  static Scalar fraction(QPoly num, QPoly den);

  FieldMode mode() const {
    return std::holds_alternative<mpq_class>(v_) ? FieldMode::Rational
                                                 : FieldMode::Generic;
  }
  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;
  /// True when the value lies in the prime field (a constant in generic mode).
  bool is_rational_constant() const;
  mpq_class rational_value() const;  // requires is_rational_constant()

  const QPoly& num() const;  // generic mode only
  const QPoly& den() const;  // generic mode only

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Height proxy used when ranking candidate roots: digit size of the
  /// entries involved.
  size_t height() const;

  std::string str() const;

 private:
  struct RatFunc {
    QPoly num, den;
    bool operator==(const RatFunc&) const = default;
  };
  explicit Scalar(RatFunc f) : v_(std::move(f)) {}
  static RatFunc normalized(QPoly num, QPoly den);
  const RatFunc& rf() const { return std::get<RatFunc>(v_); }

  std::variant<mpq_class, RatFunc> v_;
};

/// True iff a^n = 1 for some n >= 1. Rational mode: a in {1,-1}; generic
/// mode: a is the constant 1 or -1. Errors on a = 0.
bool is_root_of_unity(const Scalar& a);

void require_same_mode(FieldMode a, FieldMode b);

}  // namespace gwa
