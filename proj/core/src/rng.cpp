#include "gwa/rng.hpp"

namespace gwa {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x51d342bca0b6f1e5ull + index * 0x2545f4914f6cdd1dull));
  return g.next();
}

long Sampler::range(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_.next() % span);
}

bool Sampler::chance(unsigned percent) {
  return rng_.next() % 100 < percent;
}

Scalar Sampler::nonzero_rational(long height, FieldMode m) {
  long num = 0;
  while (num == 0) num = range(-height, height);
  const long den = range(1, height);
  if (m == FieldMode::Rational)
    return Scalar::rational(num, den);
  mpq_class v(num, den);
  v.canonicalize();
  return Scalar::fraction(QPoly(v), QPoly(mpq_class(1)));
}

Scalar Sampler::coefficient(FieldMode m, long height, int q_span) {
  if (m == FieldMode::Rational) {
    const long num = range(-height, height);
    const long den = range(1, height);
    return Scalar::rational(num, den);
  }
  const long num = range(-height, height);
  if (num == 0) return Scalar::zero(m);
  const int j = static_cast<int>(range(-q_span, q_span));
  mpq_class c(num, range(1, height));
  c.canonicalize();
  if (j >= 0)
    return Scalar::fraction(QPoly::monomial(c, static_cast<unsigned>(j)),
                            QPoly(mpq_class(1)));
  return Scalar::fraction(QPoly(c),
                          QPoly::monomial(mpq_class(1), static_cast<unsigned>(-j)));
}

Poly Sampler::poly(FieldMode m, int max_deg, long height) {
  const int deg = static_cast<int>(range(0, max_deg));
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) c.push_back(coefficient(m, height));
  return Poly(m, std::move(c));
}

Poly Sampler::nonzero_poly(FieldMode m, int max_deg, long height) {
  for (;;) {
    Poly p = poly(m, max_deg, height);
    if (!p.is_zero()) return p;
  }
}

Element Sampler::element(FieldMode m, int max_abs_deg, int max_poly_deg,
                         long height) {
  Element e(m);
  const int terms = static_cast<int>(range(1, 3));
  for (int t = 0; t < terms; ++t) {
    const int d = static_cast<int>(range(-max_abs_deg, max_abs_deg));
    e = add(e, Element::monomial(d, poly(m, max_poly_deg, height)));
  }
  return e;
}

Element Sampler::nonzero_element(FieldMode m, int max_abs_deg, int max_poly_deg,
                                 long height) {
  for (;;) {
    Element e = element(m, max_abs_deg, max_poly_deg, height);
    if (!e.is_zero()) return e;
  }
}

}  // namespace gwa
