#include "gwa/verify.hpp"

#include <string>

#include "gwa/expr.hpp"
#include "gwa/rng.hpp"

namespace gwa {

Report verify_normal_form(const Presentation& pres, unsigned cases,
                          std::uint64_t seed) {
  Report rep;
  rep.suite = "gwa";
  rep.seed = seed;
  rep.cases = cases;
  const FieldMode m = pres.mode;
  const Poly unit = Poly::constant(Scalar::one(m));

  {
    bool ok = true;
    for (unsigned k = 1; k <= 6 && ok; ++k) {
      const Element yk = Element::monomial(static_cast<int>(k), unit);
      const Element xk = Element::monomial(-static_cast<int>(k), unit);
      ok = mul(yk, xk, pres) == Element::from_poly(phi_k(pres, k)) &&
           mul(xk, yk, pres) == Element::from_poly(psi_k(pres, k));
    }
    rep.check("y^k x^k and x^k y^k closed forms (k <= 6)", ok);
  }

  unsigned assoc_fail = 0, grade_fail = 0, star_fail = 0, ideal_fail = 0,
           transport_fail = 0;
  for (unsigned i = 0; i < cases; ++i) {
    Sampler s(derive_seed(seed, i));
    const Element u = s.element(m, 4, 3, 10);
    const Element v = s.element(m, 4, 3, 10);
    const Element w = s.element(m, 4, 3, 10);

    if (mul(mul(u, v, pres), w, pres) != mul(u, mul(v, w, pres), pres)) {
      ++assoc_fail;
      rep.fail_case("associativity: u = " + element_str(u) +
                    ", v = " + element_str(v) + ", w = " + element_str(w));
    }

    // grading: products of homogeneous elements are homogeneous
    const int d1 = static_cast<int>(s.range(-4, 4));
    const int d2 = static_cast<int>(s.range(-4, 4));
    const Element hu = Element::monomial(d1, s.nonzero_poly(m, 3, 10));
    const Element hv = Element::monomial(d2, s.nonzero_poly(m, 3, 10));
    const Element hprod = mul(hu, hv, pres);
    for (const auto& [d, p] : hprod.components()) {
      if (d != d1 + d2) {
        ++grade_fail;
        rep.fail_case("grading: degree " + std::to_string(d) +
                      " in a product of degrees " + std::to_string(d1) +
                      " and " + std::to_string(d2));
      }
    }

    if (star(mul(u, v, pres), pres) !=
            mul(star(v, pres), star(u, pres), pres) ||
        star(star(u, pres), pres) != u) {
      ++star_fail;
      rep.fail_case("involution: u = " + element_str(u) +
                    ", v = " + element_str(v));
    }

    // A_1 A_{-1} = (P): degree-0 coefficient of (p y)(r x) divides by P
    const Poly p1 = s.nonzero_poly(m, 3, 10);
    const Poly r1 = s.nonzero_poly(m, 3, 10);
    const Element prod = mul(Element::monomial(1, p1),
                             Element::monomial(-1, r1), pres);
    const Poly deg0 = prod.component(0);
    const bool ideal_ok = pres.a.is_zero()
                              ? deg0.is_zero()
                              : (deg0.is_zero() || divides(pres.a, deg0));
    if (!ideal_ok) {
      ++ideal_fail;
      rep.fail_case("ideal: (" + p1.str() + ")y * (" + r1.str() + ")x");
    }

    // transported products under a random conjugation
    Scalar tq = s.coefficient(m, 5);
    if (tq.is_zero()) tq = Scalar::one(m);
    const AffineAuto tau(tq, s.coefficient(m, 5));
    const auto conj = conjugate(pres, tau);
    if (conj.transport(mul(u, v, pres)) !=
        mul(conj.transport(u), conj.transport(v), conj.presentation)) {
      ++transport_fail;
      rep.fail_case("transport: u = " + element_str(u) +
                    ", v = " + element_str(v));
    }
  }
  rep.check("associativity", assoc_fail == 0);
  rep.check("grading additivity", grade_fail == 0);
  rep.check("star anti-multiplicative and involutive", star_fail == 0);
  rep.check("A_1 A_{-1} inside (P)", ideal_fail == 0);
  rep.check("conjugation transports are multiplicative", transport_fail == 0);
  rep.check("x y generator check",
            mul(Element::x(m), Element::y(m), pres) ==
                Element::from_poly(pres.sigma.apply(pres.a)));
  return rep;
}

}  // namespace gwa
