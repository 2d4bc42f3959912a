#include "gwa/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gwa {

namespace {

const mpq_class kZero(0);

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

void require_same_mode(FieldMode a, FieldMode b) {
  if (a != b) throw ArithmeticError("mode mismatch");
}

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(const mpq_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::variable() { return monomial(mpq_class(1), 1); }

QPoly QPoly::monomial(const mpq_class& c, unsigned deg) {
  QPoly p;
  if (c != 0) {
    p.c_.assign(deg + 1, kZero);
    p.c_[deg] = c;
  }
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool QPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const mpq_class& QPoly::leading() const {
  if (c_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
  return c_.back();
}

int QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), kZero);
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& s) const {
  if (s == 0) return {};
  QPoly r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

QPoly QPoly::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (valuation() < k || is_zero())
    throw ArithmeticError("q-valuation too small for shift");
  QPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mpq_class(1) / leading());
}

QPoly QPoly::pow(unsigned e) const {
  QPoly r(mpq_class(1));
  QPoly base(*this);
  while (e != 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  QPoly rem = num;
  if (num.degree() < den.degree()) return {QPoly{}, rem};
  std::vector<mpq_class> q(num.degree() - den.degree() + 1, kZero);
  const mpq_class inv_lead = mpq_class(1) / den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const int shift = rem.degree() - den.degree();
    const mpq_class f = rem.leading() * inv_lead;
    q[shift] = f;
    rem = rem - (den * monomial(f, static_cast<unsigned>(shift)));
  }
  return {QPoly(std::move(q)), rem};
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw ArithmeticError("gcd of two zero polynomials");
  QPoly x = a.monic();
  QPoly y = b.monic();
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();  // keep remainders monic to control coefficient growth
  }
  return x;
}

mpz_class QPoly::denominator_lcm() const {
  mpz_class l(1);
  for (const auto& c : c_) {
    if (c == 0) continue;
    l = lcm_z(l, c.get_den());
  }
  return l;
}

mpz_class QPoly::numerator_content() const {
  mpz_class g(0);
  for (const auto& c : c_) {
    if (c == 0) continue;
    g = gcd_z(g, c.get_num());
  }
  return g;
}

std::string QPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ArithmeticError("division by zero");
  mpq_class v(num, den);
  v.canonicalize();
  return Scalar::rational(v);
}

Scalar Scalar::rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  Scalar s;
  s.v_ = std::move(v);
  return s;
}

Scalar Scalar::integer(long n, FieldMode m) {
  if (m == FieldMode::Rational) return rational(n, 1);
  return Scalar(RatFunc{QPoly(mpq_class(n)), QPoly(mpq_class(1))});
}

Scalar Scalar::q() { return Scalar(RatFunc{QPoly::variable(), QPoly(mpq_class(1))}); }

Scalar Scalar::fraction(QPoly num, QPoly den) {
  return Scalar(normalized(std::move(num), std::move(den)));
}

Scalar::RatFunc Scalar::normalized(QPoly num, QPoly den) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  if (num.is_zero()) return {QPoly{}, QPoly(mpq_class(1))};
  if (den.is_constant()) {
    return {num.scaled(mpq_class(1) / den.leading()), QPoly(mpq_class(1))};
  }
  if (den.is_monomial()) {
    // common q-power, then scale the monomial away to q^k
    const int v = std::min(num.valuation(), den.degree());
    num = num.shifted_down(v);
    const int k = den.degree() - v;
    const mpq_class lead = den.leading();
    return {num.scaled(mpq_class(1) / lead),
            QPoly::monomial(mpq_class(1), static_cast<unsigned>(k))};
  }
  QPoly g = QPoly::gcd(num, den);
  if (!g.is_one()) {
    num = QPoly::divmod(num, g).first;
    den = QPoly::divmod(den, g).first;
  }
  const mpq_class lead = den.leading();
  if (lead != 1) {
    const mpq_class inv = mpq_class(1) / lead;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return {std::move(num), std::move(den)};
}

bool Scalar::is_zero() const {
  if (mode() == FieldMode::Rational) return std::get<mpq_class>(v_) == 0;
  return rf().num.is_zero();
}

bool Scalar::is_one() const {
  if (mode() == FieldMode::Rational) return std::get<mpq_class>(v_) == 1;
  return rf().num.is_one() && rf().den.is_one();
}

bool Scalar::is_integer() const {
  return is_rational_constant() && rational_value().get_den() == 1;
}

bool Scalar::is_rational_constant() const {
  if (mode() == FieldMode::Rational) return true;
  return rf().num.is_constant() && rf().den.is_one();
}

mpq_class Scalar::rational_value() const {
  if (mode() == FieldMode::Rational) return std::get<mpq_class>(v_);
  if (!is_rational_constant())
    throw ArithmeticError("scalar is not a rational constant");
  return rf().num.coeff(0);
}

const QPoly& Scalar::num() const { return rf().num; }
const QPoly& Scalar::den() const { return rf().den; }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_mode(mode(), o.mode());
  if (mode() == FieldMode::Rational)
    return rational(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
  const RatFunc& a = rf();
  const RatFunc& b = o.rf();
  if (a.den == b.den) return Scalar(normalized(a.num + b.num, a.den));
  return Scalar(normalized(a.num * b.den + b.num * a.den, a.den * b.den));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (mode() == FieldMode::Rational)
    return rational(-std::get<mpq_class>(v_));
  return Scalar(RatFunc{-rf().num, rf().den});
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_mode(mode(), o.mode());
  if (mode() == FieldMode::Rational)
    return rational(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
  const RatFunc& a = rf();
  const RatFunc& b = o.rf();
  return Scalar(normalized(a.num * b.num, a.den * b.den));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_mode(mode(), o.mode());
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (mode() == FieldMode::Rational)
    return rational(std::get<mpq_class>(v_) / std::get<mpq_class>(o.v_));
  const RatFunc& a = rf();
  const RatFunc& b = o.rf();
  return Scalar(normalized(a.num * b.den, a.den * b.num));
}

Scalar Scalar::inverse() const { return one(mode()) / *this; }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(mode());
  Scalar base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1ul) r = r * base;
    base = base * base;
    k >>= 1ul;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode() != o.mode()) return false;
  return v_ == o.v_;
}

size_t Scalar::height() const {
  if (is_zero()) return 0;
  if (is_rational_constant()) {
    const mpq_class r = rational_value();
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
  }
  const RatFunc& f = rf();
  size_t bits = 0;
  const mpz_class cn = f.num.numerator_content();
  const mpz_class cd = f.num.denominator_lcm();
  if (cn != 0) bits += mpz_sizeinbase(cn.get_mpz_t(), 2);
  bits += mpz_sizeinbase(cd.get_mpz_t(), 2);
  return static_cast<size_t>(f.num.degree() + f.den.degree()) * 16 + bits;
}

std::string Scalar::str() const {
  if (mode() == FieldMode::Rational) return std::get<mpq_class>(v_).get_str();
  const RatFunc& f = rf();
  if (f.num.is_zero()) return "0";
  // print as a reduced fraction of integer polynomials with coprime contents
  const mpz_class l = lcm_z(f.num.denominator_lcm(), f.den.denominator_lcm());
  QPoly num_z = f.num.scaled(mpq_class(l));
  QPoly den_z = f.den.scaled(mpq_class(l));
  const mpz_class g = gcd_z(num_z.numerator_content(), den_z.numerator_content());
  if (g > 1) {
    mpq_class inv(mpz_class(1), g);
    inv.canonicalize();
    num_z = num_z.scaled(inv);
    den_z = den_z.scaled(inv);
  }
  if (den_z.is_one()) return num_z.str();
  return "(" + num_z.str() + ")/(" + den_z.str() + ")";
}

bool is_root_of_unity(const Scalar& a) {
  if (a.is_zero())
    throw ArithmeticError("automorphism parameter must be nonzero");
  if (!a.is_rational_constant()) return false;
  const mpq_class v = a.rational_value();
  return v == 1 || v == -1;
}

}  // namespace gwa
