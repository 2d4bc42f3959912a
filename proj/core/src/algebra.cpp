#include "gwa/algebra.hpp"

#include <algorithm>
#include <utility>

namespace gwa {

// ---------------------------------------------------------------------------
// AffineAuto

AffineAuto::AffineAuto(Scalar q_in, Scalar h0_in)
    : q(std::move(q_in)), h0(std::move(h0_in)) {
  require_same_mode(q.mode(), h0.mode());
  if (q.is_zero())
    throw ArithmeticError("automorphism parameter must be nonzero");
}

AffineAuto AffineAuto::identity(FieldMode m) {
  return AffineAuto(Scalar::one(m), Scalar::zero(m));
}

AffineAuto AffineAuto::shift(const Scalar& amount) {
  return AffineAuto(Scalar::one(amount.mode()), amount);
}

AffineAuto AffineAuto::scale(const Scalar& factor) {
  return AffineAuto(factor, Scalar::zero(factor.mode()));
}

AffineAuto AffineAuto::inverse() const {
  return AffineAuto(q.inverse(), -(h0 / q));
}

std::pair<Scalar, Scalar> AffineAuto::power_pair(long n) const {
  Scalar a = Scalar::one(mode());
  Scalar b = Scalar::zero(mode());
  if (n >= 0) {
    for (long i = 0; i < n; ++i) {
      a = q * a;
      b = q * b + h0;
    }
  } else {
    for (long i = 0; i < -n; ++i) {
      a = a / q;
      b = (b - h0) / q;
    }
  }
  return {a, b};
}

Poly AffineAuto::apply(const Poly& p, long power) const {
  if (power == 0 || p.is_constant()) return p;
  const auto [a, b] = power_pair(power);
  return p.compose_affine(a, b);
}

AffineAuto ring_compose(const AffineAuto& f, const AffineAuto& g) {
  // (f o g)(p) = f(g(p)); on the affine maps this applies f's map first.
  return AffineAuto(g.q * f.q, g.q * f.h0 + g.h0);
}

// ---------------------------------------------------------------------------
// Presentation and Element

Presentation::Presentation(AffineAuto s, Poly defining)
    : mode(s.mode()), sigma(std::move(s)), a(std::move(defining)) {
  require_same_mode(mode, a.mode());
}

Element Element::from_poly(Poly p) { return monomial(0, std::move(p)); }

Element Element::monomial(int degree, Poly p) {
  Element e(p.mode());
  e.set(degree, std::move(p));
  return e;
}

Element Element::one(FieldMode m) {
  return from_poly(Poly::constant(Scalar::one(m)));
}

Element Element::x(FieldMode m) {
  return monomial(-1, Poly::constant(Scalar::one(m)));
}

Element Element::y(FieldMode m) {
  return monomial(1, Poly::constant(Scalar::one(m)));
}

void Element::set(int d, Poly p) {
  require_same_mode(mode_, p.mode());
  if (p.is_zero())
    comp_.erase(d);
  else
    comp_.insert_or_assign(d, std::move(p));
}

Poly Element::component(int d) const {
  auto it = comp_.find(d);
  return it == comp_.end() ? Poly(mode_) : it->second;
}

int Element::degree_span() const {
  int span = 0;
  for (const auto& [d, p] : comp_) span = std::max(span, d < 0 ? -d : d);
  return span;
}

int Element::max_poly_degree() const {
  int m = -1;
  for (const auto& [d, p] : comp_) m = std::max(m, p.degree());
  return m;
}

bool Element::operator==(const Element& o) const {
  return mode_ == o.mode_ && comp_ == o.comp_;
}

Poly phi_k(const Presentation& pres, unsigned k) {
  Poly r = Poly::constant(Scalar::one(pres.mode));
  for (unsigned i = 0; i < k; ++i) r = r * pres.sigma.apply(pres.a, -static_cast<long>(i));
  return r;
}

Poly psi_k(const Presentation& pres, unsigned k) {
  Poly r = Poly::constant(Scalar::one(pres.mode));
  for (unsigned i = 1; i <= k; ++i) r = r * pres.sigma.apply(pres.a, static_cast<long>(i));
  return r;
}

Element add(const Element& u, const Element& v) {
  require_same_mode(u.mode(), v.mode());
  Element r = u;
  for (const auto& [d, p] : v.comp_) r.set(d, r.component(d) + p);
  return r;
}

Element neg(const Element& u) {
  Element r(u.mode());
  for (const auto& [d, p] : u.components()) r = add(r, Element::monomial(d, -p));
  return r;
}

Element sub(const Element& u, const Element& v) { return add(u, neg(v)); }

namespace {

// Commuting factor c(d1, d2) of the homogeneous product rule
// (p*w_{d1})(r*w_{d2}) = p * sigma^{-d1}(r) * c(d1,d2) * w_{d1+d2}.
Poly commuting_factor(const Presentation& pres, int d1, int d2) {
  if (d1 == 0 || d2 == 0 || (d1 > 0) == (d2 > 0))
    return Poly::constant(Scalar::one(pres.mode));
  if (d1 > 0) {                 // y-word times x-word
    const int m = -d2;
    if (d1 >= m) return pres.sigma.apply(phi_k(pres, static_cast<unsigned>(m)), -(d1 - m));
    return phi_k(pres, static_cast<unsigned>(d1));
  }
  const int m = -d1;            // x-word times y-word
  if (m >= d2) return pres.sigma.apply(psi_k(pres, static_cast<unsigned>(d2)), m - d2);
  return psi_k(pres, static_cast<unsigned>(m));
}

}  // namespace

Element mul(const Element& u, const Element& v, const Presentation& pres) {
  require_same_mode(u.mode(), v.mode());
  require_same_mode(u.mode(), pres.mode);
  Element r(pres.mode);
  for (const auto& [d1, p] : u.comp_) {
    for (const auto& [d2, q] : v.comp_) {
      Poly term = p * pres.sigma.apply(q, -d1) * commuting_factor(pres, d1, d2);
      r.set(d1 + d2, r.component(d1 + d2) + term);
    }
  }
  return r;
}

Element pow(const Element& u, unsigned e, const Presentation& pres) {
  Element r = Element::one(pres.mode);
  Element base = u;
  while (e != 0) {
    if (e & 1u) r = mul(r, base, pres);
    base = mul(base, base, pres);
    e >>= 1u;
  }
  return r;
}

Element star(const Element& u, const Presentation& pres) {
  Element r(u.mode());
  for (const auto& [d, p] : u.components())
    r = add(r, Element::monomial(-d, pres.sigma.apply(p, d)));
  return r;
}

// ---------------------------------------------------------------------------
// Conjugation and canonical forms

Element ConjugatedPresentation::transport(const Element& u) const {
  Element r(u.mode());
  for (const auto& [d, p] : u.components())
    r = add(r, Element::monomial(d, tau.apply(p)));
  return r;
}

ConjugatedPresentation conjugate(const Presentation& pres, const AffineAuto& tau) {
  const AffineAuto sigma1 =
      ring_compose(tau, ring_compose(pres.sigma, tau.inverse()));
  return ConjugatedPresentation{Presentation(sigma1, tau.apply(pres.a)), tau};
}

const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Commutative: return "commutative";
    case CaseTag::Classical: return "classical";
    case CaseTag::Quantum: return "quantum";
    case CaseTag::NonCanonicalizable: return "non-canonicalizable-over-field";
  }
  return "?";
}

Element CanonicalForm::transport(const Element& u) const {
  Element r = u;
  for (const auto& t : trace) {
    ConjugatedPresentation c{presentation, t};
    r = c.transport(r);
  }
  return r;
}

CanonicalForm canonicalize(const Presentation& pres) {
  const FieldMode m = pres.mode;
  const Scalar one = Scalar::one(m);
  if (pres.sigma.is_identity())
    return CanonicalForm{pres, CaseTag::Commutative, {}};

  std::vector<AffineAuto> trace;
  Presentation current = pres;

  if (pres.sigma.q.is_one()) {
    // q = 1, h0 != 0: conjugate to sigma(h) = h - 1 via tau(h) = -h0*h
    if (!(current.sigma.h0 == -one)) {
      const AffineAuto tau = AffineAuto::scale(-current.sigma.h0);
      auto conj = conjugate(current, tau);
      current = conj.presentation;
      trace.push_back(tau);
    }
    if (!current.a.is_constant() && !current.a.eval(Scalar::zero(m)).is_zero()) {
      const auto root = find_root_in_field(current.a, /*nonzero_only=*/false);
      if (!root)
        return CanonicalForm{current, CaseTag::NonCanonicalizable, trace};
      const AffineAuto tau = AffineAuto::shift(*root);
      auto conj = conjugate(current, tau);
      current = conj.presentation;
      trace.push_back(tau);
    }
    return CanonicalForm{current, CaseTag::Classical, trace};
  }

  // q != 1: remove the translation part via tau(h) = h + h0/(1-q)
  if (!current.sigma.h0.is_zero()) {
    const Scalar fixed = current.sigma.h0 / (one - current.sigma.q);
    const AffineAuto tau = AffineAuto::shift(fixed);
    auto conj = conjugate(current, tau);
    current = conj.presentation;
    trace.push_back(tau);
  }
  if (!current.a.is_zero() && !current.a.eval(one).is_zero()) {
    // scale a nonzero root to 1 when there is one
    Poly reduced = current.a;
    int valuation = 0;
    while (!reduced.is_zero() && reduced.coeff(0).is_zero()) {
      reduced = Poly::divmod(reduced, Poly::h(m)).first;
      ++valuation;
    }
    if (!reduced.is_constant()) {
      const auto root = find_root_in_field(reduced, /*nonzero_only=*/true);
      if (!root)
        return CanonicalForm{current, CaseTag::NonCanonicalizable, trace};
      const AffineAuto tau = AffineAuto::scale(*root);
      auto conj = conjugate(current, tau);
      current = conj.presentation;
      trace.push_back(tau);
    }
  }
  return CanonicalForm{current, CaseTag::Quantum, trace};
}

std::pair<Poly, int> ideal_generator_lambda(const Presentation& pres,
                                            unsigned i, unsigned j) {
  const Element w =
      mul(Element::monomial(static_cast<int>(i) + 1,
                            Poly::constant(Scalar::one(pres.mode))),
          Element::monomial(-(static_cast<int>(j) + 1),
                            Poly::constant(Scalar::one(pres.mode))),
          pres);
  const int d = static_cast<int>(i) - static_cast<int>(j);
  return {w.component(d), d};
}

namespace {

// a != 0 must sit in a single wh-weight matching wx + wy.
bool poly_weight_matches(const Poly& a, long wh, long target) {
  if (a.is_zero()) return true;
  if (wh == 0) return target == 0;
  int term = -1;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    if (term >= 0) return false;  // more than one monomial
    term = i;
  }
  return static_cast<long>(term) * wh == target;
}

}  // namespace

bool is_graded_for_weights(const Presentation& pres, long wh, long wx, long wy) {
  if (wh != 0 && !pres.sigma.h0.is_zero()) return false;
  if (!poly_weight_matches(pres.a, wh, wx + wy)) return false;
  return poly_weight_matches(pres.sigma.apply(pres.a), wh, wx + wy);
}

}  // namespace gwa
