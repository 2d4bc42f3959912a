#include <doctest.h>

#include <set>

#include "gwa/rng.hpp"
#include "test_helpers.hpp"

using namespace gwa;
using namespace gwa::testing;

namespace {

constexpr FieldMode kRat = FieldMode::Rational;
constexpr FieldMode kGen = FieldMode::Generic;

// Builds prod (h - roots[i])^mults[i]; the number of distinct constructed
// roots is an independent oracle for distinct_root_count.
Poly from_roots(FieldMode m, const std::vector<Scalar>& roots,
                const std::vector<unsigned>& mults) {
  Poly p = Poly::constant(Scalar::one(m));
  for (size_t i = 0; i < roots.size(); ++i) {
    const Poly lin = Poly::h(m) - Poly::constant(roots[i]);
    p = p * lin.pow(mults[i]);
  }
  return p;
}

// gcd oracle for split polynomials: trial division by every candidate
// linear factor, with multiplicity.
Poly gcd_by_trial_division(const Poly& a, const Poly& b,
                           const std::vector<Scalar>& candidates) {
  Poly g = Poly::constant(Scalar::one(a.mode()));
  Poly x = a, y = b;
  for (const auto& c : candidates) {
    const Poly lin = Poly::h(a.mode()) - Poly::constant(c);
    while (divides(lin, x) && divides(lin, y)) {
      x = Poly::divmod(x, lin).first;
      y = Poly::divmod(y, lin).first;
      g = g * lin;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const Poly h = Poly::h(kRat);
  CHECK(h * (h + Poly::constant(R(1))) == P(kRat, "h^2 + h"));
  CHECK(P(kRat, "h^2 - 1") + P(kRat, "1 - h^2") == Poly(kRat));
  CHECK(P(kRat, "h^2 + 3") * Poly(kRat) == Poly(kRat));
  CHECK_THROWS_AS(P(kRat, "h") + P(kGen, "h"), ArithmeticError);
}

TEST_CASE("affine substitution") {
  // sigma(h) = h - 1 applied to h^2
  CHECK(apply_auto(P(kRat, "h^2"), R(1), R(-1), 1) == P(kRat, "h^2 - 2h + 1"));
  // inverse of sigma(h) = q h
  CHECK(apply_auto(P(kGen, "h"), Q(), G(0), -1) ==
        Poly::h(kGen).scaled(Q(-1)));
  CHECK_THROWS_AS(apply_auto(P(kRat, "h"), R(0), R(1), 1), ArithmeticError);

  // power = 3 equals three single applications
  Poly once = P(kRat, "h");
  for (int i = 0; i < 3; ++i) once = apply_auto(once, R(1), R(-1), 1);
  CHECK(apply_auto(P(kRat, "h"), R(1), R(-1), 3) == once);
  CHECK(once == P(kRat, "h - 3"));

  // round trip property
  for (unsigned i = 0; i < 40; ++i) {
    Sampler s(derive_seed(31, i));
    for (const FieldMode m : {kRat, kGen}) {
      const Poly p = s.poly(m, 4, 8);
      Scalar q = s.coefficient(m, 5);
      if (q.is_zero()) q = Scalar::one(m);
      const Scalar h0 = s.coefficient(m, 5);
      const long n = s.range(-5, 5);
      CHECK(apply_auto(apply_auto(p, q, h0, n), q, h0, -n) == p);
    }
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(P(kRat, "h^3"), P(kRat, "3h^2")) == P(kRat, "h^2"));
  CHECK(gcd(P(kRat, "h - 1"), P(kRat, "h + 1")) == P(kRat, "1"));
  CHECK_THROWS_AS(gcd(Poly(kRat), Poly(kRat)), ArithmeticError);

  const Poly a = P(kRat, "h^2 - 2h + 1");
  const Poly b = P(kRat, "h^2 - 1");
  const Poly g = gcd(a, b);
  CHECK(g == P(kRat, "h - 1"));
  std::vector<Scalar> candidates;
  for (long c = -3; c <= 3; ++c) candidates.push_back(R(c));
  CHECK(g == gcd_by_trial_division(a, b, candidates));
}

TEST_CASE("distinct root count") {
  CHECK(distinct_root_count(P(kRat, "h^2*(h-1)")) == 2);
  CHECK_THROWS_AS(distinct_root_count(P(kRat, "5")), ArithmeticError);

  // -(h + 1/2)^2, built from its single root
  const Poly b1 = P(kRat, "-h^2 - h - 1/4");
  CHECK(b1 == from_roots(kRat, {R(-1, 2)}, {2}).scaled(R(-1)));
  CHECK(distinct_root_count(b1) == 1);

  // h (1 - h)(1 - q^-2 h) has the three roots 0, 1, q^2
  const Poly w = wpq(1, 2).a;
  CHECK(distinct_root_count(w) == 3);
  CHECK(w.eval(G(0)).is_zero());
  CHECK(w.eval(G(1)).is_zero());
  CHECK(w.eval(Q(2)).is_zero());
}

TEST_CASE("root count against constructed factorizations") {
  // acceptance-style oracle: 1..4 distinct linear factors, multiplicity <= 3
  for (unsigned i = 0; i < 50; ++i) {
    Sampler s(derive_seed(37, i));
    for (const FieldMode m : {kRat, kGen}) {
      const unsigned k = static_cast<unsigned>(s.range(1, 4));
      std::vector<Scalar> roots;
      std::set<std::string> seen;
      while (roots.size() < k) {
        Scalar c = s.coefficient(m, 6);
        if (seen.insert(c.str()).second) roots.push_back(c);
      }
      std::vector<unsigned> mults;
      for (unsigned t = 0; t < k; ++t)
        mults.push_back(static_cast<unsigned>(s.range(1, 3)));
      const Poly p = from_roots(m, roots, mults);
      CHECK(distinct_root_count(p) == k);
      CHECK(distinct_root_count(p * p) == k);
    }
  }

  // additivity over coprime products
  for (unsigned i = 0; i < 25; ++i) {
    Sampler s(derive_seed(41, i));
    std::set<std::string> seen;
    std::vector<Scalar> roots;
    while (roots.size() < 4) {
      Scalar c = s.coefficient(kRat, 10);
      if (seen.insert(c.str()).second) roots.push_back(c);
    }
    const Poly p = from_roots(kRat, {roots[0], roots[1]}, {2, 1});
    const Poly r = from_roots(kRat, {roots[2], roots[3]}, {1, 3});
    CHECK(gcd(p, r) == P(kRat, "1"));
    CHECK(distinct_root_count(p * r) ==
          distinct_root_count(p) + distinct_root_count(r));
  }
}

TEST_CASE("has_root_other_than") {
  CHECK_FALSE(has_root_other_than(P(kRat, "h^2"), R(0)));
  CHECK(has_root_other_than(P(kRat, "h - 1"), R(0)));
  CHECK(has_root_other_than(P(kRat, "h(h-1)"), R(0)));
  CHECK(has_root_other_than(from_roots(kRat, {R(2)}, {3}), R(1)));
  CHECK_FALSE(has_root_other_than(from_roots(kRat, {R(2)}, {3}), R(2)));
}

TEST_CASE("divisibility") {
  CHECK(divides(P(kRat, "h"), P(kRat, "h^3 + h")));
  CHECK_FALSE(divides(P(kRat, "h - 1"), P(kRat, "h")));
  CHECK(divides(P(kRat, "h(h+1)"), P(kRat, "(h+2)h(h+1)")));
  CHECK_THROWS_AS(divides(Poly(kRat), P(kRat, "h")), ArithmeticError);
}

TEST_CASE("root search in the base field") {
  auto root = find_root_in_field(P(kRat, "(2h - 3)(h^2 + 1)"), false);
  REQUIRE(root.has_value());
  CHECK(*root == R(3, 2));
  CHECK_FALSE(find_root_in_field(P(kRat, "h^2 + 1"), false).has_value());

  // generic mode: monomial roots c q^j
  const Poly w = wpq(1, 2).a;
  auto groot = find_root_in_field(w, true);
  REQUIRE(groot.has_value());
  CHECK(w.eval(*groot).is_zero());
  CHECK_FALSE(groot->is_zero());

  const Poly hard = P(kGen, "h^2 - q");  // root sqrt(q) is not in the field
  CHECK_FALSE(find_root_in_field(hard, false).has_value());
}

TEST_CASE("polynomial printing round trips") {
  for (const char* text :
       {"-h^2 - h - 1/4", "h", "0", "3/2*h^3 - h + 7", "h^4 - 2/3"}) {
    const Poly p = P(kRat, text);
    CHECK(P(kRat, p.str()) == p);
  }
  CHECK(P(kRat, "-h^2 - h - 1/4").str() == "-h^2 - h - 1/4");
  for (unsigned i = 0; i < 50; ++i) {
    Sampler s(derive_seed(43, i));
    for (const FieldMode m : {kRat, kGen}) {
      const Poly p = s.poly(m, 5, 9);
      CHECK(P(m, p.str()) == p);
    }
  }
  const Poly g = wpq(1, 2).a;
  CHECK(P(kGen, g.str()) == g);
}
