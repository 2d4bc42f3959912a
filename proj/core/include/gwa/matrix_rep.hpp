#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gwa/algebra.hpp"
#include "gwa/report.hpp"

namespace gwa {

/// Square matrix of scalars: the top-left M x M corner of an operator on
/// the sequence space, with "apply the infinite operator, then cut"
/// semantics. All identities are exact up to explicitly accounted border
/// defects from truncated shifts.
class TruncatedMatrix {
 public:
  TruncatedMatrix(FieldMode m, std::size_t n);

  static TruncatedMatrix identity(FieldMode m, std::size_t n);
  static TruncatedMatrix unit(FieldMode m, std::size_t n, std::size_t i,
                              std::size_t j);
  static TruncatedMatrix diagonal(FieldMode m, std::vector<Scalar> entries);

  std::size_t size() const { return n_; }
  FieldMode mode() const { return mode_; }
  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Scalar v);

  TruncatedMatrix operator+(const TruncatedMatrix& o) const;
  TruncatedMatrix operator-(const TruncatedMatrix& o) const;
  TruncatedMatrix operator*(const TruncatedMatrix& o) const;
  TruncatedMatrix operator-() const;
  TruncatedMatrix scaled(const Scalar& s) const;

  bool operator==(const TruncatedMatrix& o) const;
  bool operator!=(const TruncatedMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  std::size_t n_;
  FieldMode mode_;
  std::vector<Scalar> e_;  // row-major
};

/// Exact equality of the top-left w x w blocks; errors when w exceeds the
/// matrix size.
bool window_equal(const TruncatedMatrix& a, const TruncatedMatrix& b,
                  std::size_t w);

enum class BasisKind { ShiftRight, ShiftLeft, ClassicalDiagonal, QuantumDiagonal };

/// ShiftRight: subdiagonal ones. ShiftLeft: superdiagonal ones.
/// ClassicalDiagonal: diag(0,-1,...,-(M-1)). QuantumDiagonal:
/// diag(1,q,...,q^{M-1}), q required and nonzero.
TruncatedMatrix basis_matrix(std::size_t M, BasisKind kind, FieldMode mode,
                             const std::optional<Scalar>& q = std::nullopt);

enum class RepCase { Classical, Quantum };

/// Detects whether the presentation admits the faithful shift representation:
/// classical canonical form (sigma(h) = h-1, P(0) = 0) or quantum canonical
/// form (sigma(h) = q*h, q not a root of unity, P(1) = 0).
std::optional<RepCase> representable_case(const Presentation& pres);

/// Truncated representation: h acts by the diagonal (N or G), x by the left
/// shift, y by P(D) times the right shift; extended componentwise to normal
/// forms. Errors when the presentation is not representable.
TruncatedMatrix represent(const Element& u, const Presentation& pres,
                          std::size_t M);

/// represent(u, M) != 0; errors when M is below the faithfulness threshold
/// degree_span(u) + max_poly_degree(u) + 2.
bool faithfulness_probe(const Element& u, const Presentation& pres,
                        std::size_t M);

/// Relation checks plus windowed homomorphism checks on random pairs.
Report verify_representation(const Presentation& pres, unsigned cases,
                             std::size_t M, unsigned max_deg,
                             std::uint64_t seed);

}  // namespace gwa
