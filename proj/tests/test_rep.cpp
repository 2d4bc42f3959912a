#include <doctest.h>

#include "gwa/matrix_rep.hpp"
#include "gwa/rng.hpp"
#include "test_helpers.hpp"

using namespace gwa;
using namespace gwa::testing;

namespace {
constexpr FieldMode kRat = FieldMode::Rational;
constexpr FieldMode kGen = FieldMode::Generic;
}  // namespace

TEST_CASE("basis matrices") {
  const auto n = basis_matrix(3, BasisKind::ClassicalDiagonal, kRat);
  CHECK(n == TruncatedMatrix::diagonal(kRat, {R(0), R(-1), R(-2)}));

  const auto g = basis_matrix(3, BasisKind::QuantumDiagonal, kGen, Q());
  CHECK(g == TruncatedMatrix::diagonal(kGen, {G(1), Q(), Q(2)}));
  CHECK_THROWS_AS(basis_matrix(3, BasisKind::QuantumDiagonal, kGen),
                  ArithmeticError);

  const auto u1 = basis_matrix(3, BasisKind::ShiftRight, kRat);
  const auto um1 = basis_matrix(3, BasisKind::ShiftLeft, kRat);
  CHECK(um1 * u1 == TruncatedMatrix::identity(kRat, 3) -
                        TruncatedMatrix::unit(kRat, 3, 2, 2));
  CHECK(u1 * um1 == TruncatedMatrix::identity(kRat, 3) -
                        TruncatedMatrix::unit(kRat, 3, 0, 0));
}

TEST_CASE("window equality") {
  const auto u1 = basis_matrix(5, BasisKind::ShiftRight, kRat);
  const auto um1 = basis_matrix(5, BasisKind::ShiftLeft, kRat);
  const auto id = TruncatedMatrix::identity(kRat, 5);
  CHECK(window_equal(um1 * u1, id, 4));
  CHECK_FALSE(window_equal(um1 * u1, id, 5));
  CHECK(window_equal(id, id, 5));
  CHECK_THROWS_AS(window_equal(id, id, 6), ArithmeticError);
}

TEST_CASE("representation of basic elements") {
  const Presentation w = weyl();
  CHECK(represent(Element::h(kRat), w, 3) ==
        TruncatedMatrix::diagonal(kRat, {R(0), R(-1), R(-2)}));

  // y maps to N*U1: entries -(i+1) at (i+1, i)
  const auto ym = represent(Element::y(kRat), w, 4);
  TruncatedMatrix expect(kRat, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i)
    expect.set(i + 1, i, R(-static_cast<long>(i) - 1));
  CHECK(ym == expect);

  CHECK(represent(Element(kRat), w, 3).is_zero());

  // not representable: quantum plane has P(1) != 0
  CHECK_THROWS_AS(represent(Element::h(kGen), quantum_plane(), 3),
                  ArithmeticError);
}

TEST_CASE("faithfulness probes") {
  const Presentation w = weyl();
  CHECK(faithfulness_probe(Element::h(kRat), w, 3));
  CHECK_FALSE(faithfulness_probe(Element(kRat), w, 2));
  CHECK(faithfulness_probe(Element::monomial(1, w.a), w, 6));
  CHECK_THROWS_AS(faithfulness_probe(Element::monomial(2, P(kRat, "h^3")), w, 5),
                  ArithmeticError);

  for (const Presentation& pres :
       {weyl(), b_lambda(0), quantum_weyl(), wpq(1, 1)}) {
    for (unsigned i = 0; i < 25; ++i) {
      Sampler s(derive_seed(53, i));
      const Element u = s.nonzero_element(pres.mode, 3, 2, 5);
      const std::size_t M = static_cast<std::size_t>(
          u.degree_span() + std::max(0, u.max_poly_degree()) + 2);
      CHECK(faithfulness_probe(u, pres, M));
    }
  }
}

TEST_CASE("shift and diagonal relations at small sizes") {
  // classical and quantum relation families, exact at every truncation
  for (std::size_t M = 2; M <= 8; ++M) {
    const auto u1r = basis_matrix(M, BasisKind::ShiftRight, kRat);
    const auto um1r = basis_matrix(M, BasisKind::ShiftLeft, kRat);
    const auto n = basis_matrix(M, BasisKind::ClassicalDiagonal, kRat);
    const auto idr = TruncatedMatrix::identity(kRat, M);
    CHECK(u1r * n == (n + idr) * u1r);
    CHECK(um1r * n == (n - idr) * um1r);

    const auto u1g = basis_matrix(M, BasisKind::ShiftRight, kGen);
    const auto um1g = basis_matrix(M, BasisKind::ShiftLeft, kGen);
    const auto g = basis_matrix(M, BasisKind::QuantumDiagonal, kGen, Q());
    CHECK(u1g * g == g.scaled(Q(-1)) * u1g);
    CHECK(um1g * g == g.scaled(Q()) * um1g);
  }
}

TEST_CASE("verify_representation suites") {
  // windowed homomorphism checks at speed-friendly sizes
  const Report r1 = verify_representation(weyl(), 40, 16, 3, 5);
  if (!r1.pass())
    for (const auto& f : r1.failures) MESSAGE(f);
  CHECK(r1.pass());

  const Report r2 =
      verify_representation(quantum_weyl_rational(2, 3), 40, 16, 3, 5);
  CHECK(r2.pass());

  // generic q coverage at a smaller truncation
  const Report r3 = verify_representation(quantum_weyl(), 10, 12, 2, 5);
  if (!r3.pass())
    for (const auto& f : r3.failures) MESSAGE(f);
  CHECK(r3.pass());

  const Report r4 = verify_representation(wpq(1, 1), 10, 12, 2, 5);
  CHECK(r4.pass());

  CHECK_THROWS_AS(verify_representation(quantum_plane(), 5, 12, 2, 5),
                  ArithmeticError);
}
