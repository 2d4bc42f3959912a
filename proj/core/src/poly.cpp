#include "gwa/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gwa {

namespace {

// Divisors of |n| by trial division, capped for safety at desk scale.
std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  std::vector<mpz_class> out;
  mpz_class n = abs(n_in);
  if (n == 0) return out;
  const mpz_class cap(1000000);
  for (mpz_class d(1); d * d <= n && d <= cap; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  return out;
}

// Characters '+'/'-' occurring at parenthesis depth zero force a
// parenthesized factor when the string is reused inside a product.
bool needs_parens_as_factor(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

// Splits a coefficient into a printable sign and magnitude factor.
struct SignedFactor {
  char sign;        // '+' or '-'
  std::string mag;  // never starts with '-'; parenthesized when required
  bool is_unit;     // magnitude prints as "1"
};

SignedFactor signed_factor(const Scalar& c) {
  SignedFactor f{'+', "", false};
  if (c.is_rational_constant()) {
    mpq_class v = c.rational_value();
    if (v < 0) {
      f.sign = '-';
      v = -v;
    }
    f.is_unit = (v == 1);
    f.mag = v.get_str();
    return f;
  }
  std::string s = c.str();
  if (!s.empty() && s[0] == '-' && !needs_parens_as_factor(s.substr(1))) {
    f.sign = '-';
    s = s.substr(1);
  }
  if (needs_parens_as_factor(s)) s = "(" + s + ")";
  f.mag = s;
  return f;
}

}  // namespace

Poly::Poly(FieldMode m, std::vector<Scalar> coeffs) : mode_(m), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_mode(mode_, c.mode());
  trim();
}

Poly Poly::constant(Scalar c) {
  Poly p(c.mode());
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(Scalar c, unsigned deg) {
  Poly p(c.mode());
  if (!c.is_zero()) {
    p.c_.assign(deg + 1, Scalar::zero(p.mode_));
    p.c_[deg] = std::move(c);
  }
  return p;
}

Poly Poly::from_ints(FieldMode m, const std::vector<long>& coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(Scalar::integer(v, m));
  return Poly(m, std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(mode_);
  return c_[i];
}

const Scalar& Poly::leading() const {
  if (c_.empty())
    throw ArithmeticError("leading coefficient of zero polynomial");
  return c_.back();
}

Scalar Poly::eval(const Scalar& at) const {
  require_same_mode(mode_, at.mode());
  Scalar r = Scalar::zero(mode_);
  for (int i = degree(); i >= 0; --i) r = r * at + c_[i];
  return r;
}

Poly Poly::compose_affine(const Scalar& a, const Scalar& b) const {
  Poly lin(mode_, {b, a});
  Poly r(mode_);
  for (int i = degree(); i >= 0; --i) r = r * lin + Poly::constant(c_[i]);
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(mode_);
  std::vector<Scalar> d;
  d.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i] * Scalar::integer(static_cast<long>(i), mode_));
  return Poly(mode_, std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(Scalar::one(mode_));
  Poly base = *this;
  while (e != 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_mode(mode_, o.mode_);
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(mode_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(mode_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_mode(mode_, o.mode_);
  if (is_zero() || o.is_zero()) return Poly(mode_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(mode_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return Poly(mode_, std::move(r));
}

Poly Poly::scaled(const Scalar& s) const {
  require_same_mode(mode_, s.mode());
  if (s.is_zero()) return Poly(mode_);
  Poly r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return mode_ == o.mode_ && c_ == o.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  require_same_mode(num.mode(), den.mode());
  if (den.is_zero()) throw ArithmeticError("division by zero");
  const FieldMode m = num.mode();
  Poly rem = num;
  if (num.degree() < den.degree()) return {Poly(m), rem};
  std::vector<Scalar> q(num.degree() - den.degree() + 1, Scalar::zero(m));
  const Scalar inv_lead = den.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const int shift = rem.degree() - den.degree();
    const Scalar f = rem.leading() * inv_lead;
    q[shift] = f;
    rem = rem - den * monomial(f, static_cast<unsigned>(shift));
  }
  return {Poly(m, std::move(q)), rem};
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    const SignedFactor f = signed_factor(c_[i]);
    if (first) {
      if (f.sign == '-') out << "-";
      first = false;
    } else {
      out << " " << f.sign << " ";
    }
    if (i == 0) {
      out << f.mag;
    } else {
      if (!f.is_unit) out << f.mag << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

// Polynomials in h with coefficients in Q[q], used for the content-normalized
// remainder sequence in generic mode. Index = power of h.
using ZqPoly = std::vector<QPoly>;

void zq_trim(ZqPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly zq_content(const ZqPoly& p) {
  QPoly c;
  for (const auto& coeff : p) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff.monic() : QPoly::gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

void zq_divide_exact(ZqPoly& p, const QPoly& d) {
  if (d.is_one()) return;
  for (auto& coeff : p)
    if (!coeff.is_zero()) coeff = QPoly::divmod(coeff, d).first;
}

// Pseudo-remainder: a scalar multiple of (a mod b) computed without any
// division in the coefficient ring.
ZqPoly zq_prem(ZqPoly a, const ZqPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const QPoly& lcb = b.back();
  zq_trim(a);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const QPoly lca = a.back();
    ZqPoly next(a.size() - 1);
    for (int i = 0; i < static_cast<int>(a.size()) - 1; ++i) {
      QPoly v = a[static_cast<size_t>(i)] * lcb;
      const int j = i - shift;
      if (j >= 0 && j < db)
        v = v - b[static_cast<size_t>(j)] * lca;
      next[static_cast<size_t>(i)] = std::move(v);
    }
    a = std::move(next);
    zq_trim(a);
  }
  return a;
}

// Clears rational-function denominators and the content, producing a
// primitive representative of the same polynomial up to units.
ZqPoly zq_primitive(const Poly& p) {
  QPoly common(mpq_class(1));
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    const QPoly& d = c.den();
    if (d.is_one()) continue;
    const QPoly g = QPoly::gcd(common, d);
    common = common * QPoly::divmod(d, g).first;
  }
  ZqPoly z(p.coefficients().size());
  for (size_t i = 0; i < z.size(); ++i) {
    const Scalar& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    z[i] = c.num() * QPoly::divmod(common, c.den()).first;
  }
  zq_trim(z);
  zq_divide_exact(z, zq_content(z));
  return z;
}

Poly generic_gcd(const Poly& p, const Poly& r) {
  ZqPoly a = zq_primitive(p);
  ZqPoly b = zq_primitive(r);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZqPoly rem = zq_prem(a, b);
    zq_trim(rem);
    if (!rem.empty()) zq_divide_exact(rem, zq_content(rem));
    a = std::move(b);
    b = std::move(rem);
  }
  std::vector<Scalar> coeffs;
  coeffs.reserve(a.size());
  for (auto& c : a)
    coeffs.push_back(Scalar::fraction(std::move(c), QPoly(mpq_class(1))));
  return Poly(FieldMode::Generic, std::move(coeffs)).monic();
}

}  // namespace

Poly gcd(const Poly& p, const Poly& r) {
  if (p.is_zero() && r.is_zero())
    throw ArithmeticError("gcd of two zero polynomials");
  if (p.is_zero()) return r.monic();
  if (r.is_zero()) return p.monic();
  if (p.mode() == FieldMode::Generic) return generic_gcd(p, r);
  Poly x = p.monic();
  Poly y = r.monic();
  while (!y.is_zero()) {
    Poly rem = Poly::divmod(x, y).second;
    x = std::move(y);
    y = rem.monic();
  }
  return x;
}

Poly apply_auto(const Poly& p, const Scalar& q, const Scalar& h0, long power) {
  require_same_mode(p.mode(), q.mode());
  require_same_mode(p.mode(), h0.mode());
  if (q.is_zero())
    throw ArithmeticError("automorphism parameter must be nonzero");
  Scalar a = Scalar::one(p.mode());
  Scalar b = Scalar::zero(p.mode());
  if (power >= 0) {
    for (long i = 0; i < power; ++i) {
      a = q * a;
      b = q * b + h0;
    }
  } else {
    for (long i = 0; i < -power; ++i) {
      a = a / q;
      b = (b - h0) / q;
    }
  }
  return p.compose_affine(a, b);
}

unsigned distinct_root_count(const Poly& p) {
  if (p.is_constant())
    throw ArithmeticError("root count undefined for constants");
  const Poly g = gcd(p, p.derivative());
  return static_cast<unsigned>(p.degree() - g.degree());
}

Poly squarefree_part(const Poly& p) {
  if (p.is_constant())
    throw ArithmeticError("root count undefined for constants");
  const Poly g = gcd(p, p.derivative());
  return Poly::divmod(p, g).first.monic();
}

bool has_root_other_than(const Poly& p, const Scalar& lambda) {
  const Poly sf = squarefree_part(p);
  if (sf.degree() > 1) return true;
  const Scalar root = -sf.coeff(0);  // sf is monic linear
  return root != lambda;
}

bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) throw ArithmeticError("division by zero");
  return Poly::divmod(p, d).second.is_zero();
}

namespace {

std::vector<Scalar> rational_mode_candidates(const Poly& p) {
  // rational root theorem after clearing denominators
  mpz_class den_lcm(1);
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(),
            c.rational_value().get_den().get_mpz_t());
    den_lcm = l;
  }
  std::vector<mpz_class> z(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    mpq_class v = p.coeff(i).rational_value() * mpq_class(den_lcm);
    z[static_cast<size_t>(i)] = v.get_num();
  }
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  std::vector<Scalar> cands;
  if (low == z.size()) return cands;
  for (const auto& f : divisors_of(z[low])) {
    for (const auto& g : divisors_of(z.back())) {
      mpq_class c(f, g);
      c.canonicalize();
      cands.push_back(Scalar::rational(c));
      cands.push_back(Scalar::rational(mpq_class(-c)));
    }
  }
  return cands;
}

std::vector<Scalar> generic_mode_candidates(const Poly& p) {
  // clear rational-function denominators to land in Q[q] coefficients
  QPoly common(mpq_class(1));
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    const QPoly& d = c.den();
    if (d.is_one()) continue;
    const QPoly g = QPoly::gcd(common, d);
    common = common * QPoly::divmod(d, g).first;
  }
  std::vector<QPoly> b(static_cast<size_t>(p.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    const Scalar& c = p.coefficients()[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    b[static_cast<size_t>(i)] =
        c.num() * QPoly::divmod(common, c.den()).first;
  }
  size_t low = 0;
  while (low < b.size() && b[low].is_zero()) ++low;
  std::vector<Scalar> cands;
  if (low == b.size()) return cands;
  const QPoly& b0 = b[low];
  const QPoly& bn = b.back();
  // integer contents after clearing the rational denominators of each
  const mpz_class c0 = (b0.scaled(mpq_class(b0.denominator_lcm()))).numerator_content();
  const mpz_class cn = (bn.scaled(mpq_class(bn.denominator_lcm()))).numerator_content();
  const int v0 = b0.valuation();
  const int vn = bn.valuation();
  for (const auto& f : divisors_of(c0)) {
    for (const auto& g : divisors_of(cn)) {
      mpq_class c(f, g);
      c.canonicalize();
      for (int j = -vn; j <= v0; ++j) {
        for (int sign = 0; sign < 2; ++sign) {
          const mpq_class cv = sign ? mpq_class(-c) : c;
          if (j >= 0) {
            cands.push_back(Scalar::fraction(
                QPoly::monomial(cv, static_cast<unsigned>(j)),
                QPoly(mpq_class(1))));
          } else {
            cands.push_back(Scalar::fraction(
                QPoly(cv), QPoly::monomial(mpq_class(1),
                                           static_cast<unsigned>(-j))));
          }
        }
      }
    }
  }
  return cands;
}

}  // namespace

std::optional<Scalar> find_root_in_field(const Poly& p, bool nonzero_only) {
  if (p.is_zero()) throw ArithmeticError("root search on zero polynomial");
  if (p.is_constant()) return std::nullopt;
  std::vector<Scalar> cands;
  if (!nonzero_only) cands.push_back(Scalar::zero(p.mode()));
  const std::vector<Scalar> more = p.mode() == FieldMode::Rational
                                       ? rational_mode_candidates(p)
                                       : generic_mode_candidates(p);
  cands.insert(cands.end(), more.begin(), more.end());
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Scalar& a, const Scalar& b) {
                     return a.height() < b.height();
                   });
  std::set<std::string> seen;
  for (const auto& c : cands) {
    if (nonzero_only && c.is_zero()) continue;
    if (!seen.insert(c.str()).second) continue;
    if (p.eval(c).is_zero()) return c;
  }
  // a linear squarefree part exposes the remaining single root exactly
  const Poly sf = squarefree_part(p);
  if (sf.degree() == 1) {
    const Scalar root = -sf.coeff(0);
    if (!(nonzero_only && root.is_zero()) && p.eval(root).is_zero())
      return root;
  }
  return std::nullopt;
}

}  // namespace gwa
