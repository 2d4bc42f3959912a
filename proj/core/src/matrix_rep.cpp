#include "gwa/matrix_rep.hpp"

#include <algorithm>

#include "gwa/expr.hpp"
#include "gwa/rng.hpp"

namespace gwa {

TruncatedMatrix::TruncatedMatrix(FieldMode m, std::size_t n)
    : n_(n), mode_(m), e_(n * n, Scalar::zero(m)) {}

TruncatedMatrix TruncatedMatrix::identity(FieldMode m, std::size_t n) {
  TruncatedMatrix r(m, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i, Scalar::one(m));
  return r;
}

TruncatedMatrix TruncatedMatrix::unit(FieldMode m, std::size_t n, std::size_t i,
                                      std::size_t j) {
  TruncatedMatrix r(m, n);
  r.set(i, j, Scalar::one(m));
  return r;
}

TruncatedMatrix TruncatedMatrix::diagonal(FieldMode m, std::vector<Scalar> d) {
  TruncatedMatrix r(m, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r.set(i, i, std::move(d[i]));
  return r;
}

const Scalar& TruncatedMatrix::at(std::size_t i, std::size_t j) const {
  return e_[i * n_ + j];
}

void TruncatedMatrix::set(std::size_t i, std::size_t j, Scalar v) {
  require_same_mode(mode_, v.mode());
  e_[i * n_ + j] = std::move(v);
}

TruncatedMatrix TruncatedMatrix::operator+(const TruncatedMatrix& o) const {
  if (n_ != o.n_) throw ArithmeticError("matrix size mismatch");
  TruncatedMatrix r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

TruncatedMatrix TruncatedMatrix::operator-(const TruncatedMatrix& o) const {
  return *this + (-o);
}

TruncatedMatrix TruncatedMatrix::operator-() const {
  TruncatedMatrix r(*this);
  for (auto& v : r.e_) v = -v;
  return r;
}

TruncatedMatrix TruncatedMatrix::operator*(const TruncatedMatrix& o) const {
  if (n_ != o.n_) throw ArithmeticError("matrix size mismatch");
  require_same_mode(mode_, o.mode_);
  TruncatedMatrix r(mode_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.e_[i * n_ + j] += a * b;
      }
    }
  }
  return r;
}

TruncatedMatrix TruncatedMatrix::scaled(const Scalar& s) const {
  TruncatedMatrix r(*this);
  for (auto& v : r.e_) v *= s;
  return r;
}

bool TruncatedMatrix::operator==(const TruncatedMatrix& o) const {
  return n_ == o.n_ && mode_ == o.mode_ && e_ == o.e_;
}

bool TruncatedMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool window_equal(const TruncatedMatrix& a, const TruncatedMatrix& b,
                  std::size_t w) {
  if (w > a.size() || w > b.size())
    throw ArithmeticError("window exceeds truncation size");
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

TruncatedMatrix basis_matrix(std::size_t M, BasisKind kind, FieldMode mode,
                             const std::optional<Scalar>& q) {
  TruncatedMatrix r(mode, M);
  switch (kind) {
    case BasisKind::ShiftRight:
      for (std::size_t i = 0; i + 1 < M; ++i)
        r.set(i + 1, i, Scalar::one(mode));
      break;
    case BasisKind::ShiftLeft:
      for (std::size_t i = 0; i + 1 < M; ++i)
        r.set(i, i + 1, Scalar::one(mode));
      break;
    case BasisKind::ClassicalDiagonal:
      for (std::size_t i = 0; i < M; ++i)
        r.set(i, i, Scalar::integer(-static_cast<long>(i), mode));
      break;
    case BasisKind::QuantumDiagonal: {
      if (!q || q->is_zero())
        throw ArithmeticError("automorphism parameter must be nonzero");
      require_same_mode(mode, q->mode());
      Scalar p = Scalar::one(mode);
      for (std::size_t i = 0; i < M; ++i) {
        r.set(i, i, p);
        p = p * *q;
      }
      break;
    }
  }
  return r;
}

std::optional<RepCase> representable_case(const Presentation& pres) {
  const Scalar one = Scalar::one(pres.mode);
  if (pres.sigma.q.is_one() && pres.sigma.h0 == -one) {
    if (pres.a.eval(Scalar::zero(pres.mode)).is_zero()) return RepCase::Classical;
    return std::nullopt;
  }
  if (pres.sigma.h0.is_zero() && !is_root_of_unity(pres.sigma.q)) {
    if (pres.a.eval(one).is_zero()) return RepCase::Quantum;
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::vector<Scalar> rep_diagonal(const Presentation& pres, RepCase rc,
                                 std::size_t M) {
  std::vector<Scalar> d;
  d.reserve(M);
  Scalar g = Scalar::one(pres.mode);
  for (std::size_t i = 0; i < M; ++i) {
    if (rc == RepCase::Classical) {
      d.push_back(Scalar::integer(-static_cast<long>(i), pres.mode));
    } else {
      d.push_back(g);
      g = g * pres.sigma.q;
    }
  }
  return d;
}

TruncatedMatrix eval_on_diagonal(const Poly& p, const std::vector<Scalar>& diag,
                                 FieldMode mode) {
  std::vector<Scalar> d;
  d.reserve(diag.size());
  for (const auto& v : diag) d.push_back(p.eval(v));
  TruncatedMatrix r = TruncatedMatrix::diagonal(mode, std::move(d));
  return r;
}

}  // namespace

TruncatedMatrix represent(const Element& u, const Presentation& pres,
                          std::size_t M) {
  const auto rc = representable_case(pres);
  if (!rc)
    throw ArithmeticError(
        "no faithful representation available for this presentation");
  const FieldMode m = pres.mode;
  const std::vector<Scalar> diag = rep_diagonal(pres, *rc, M);
  const TruncatedMatrix u1 = basis_matrix(M, BasisKind::ShiftRight, m);
  const TruncatedMatrix um1 = basis_matrix(M, BasisKind::ShiftLeft, m);
  const TruncatedMatrix y_rep = eval_on_diagonal(pres.a, diag, m) * u1;

  TruncatedMatrix r(m, M);
  for (const auto& [d, p] : u.components()) {
    TruncatedMatrix t = eval_on_diagonal(p, diag, m);
    for (int k = 0; k < (d > 0 ? d : -d); ++k) t = t * (d > 0 ? y_rep : um1);
    r = r + t;
  }
  return r;
}

bool faithfulness_probe(const Element& u, const Presentation& pres,
                        std::size_t M) {
  const int needed = u.degree_span() + std::max(0, u.max_poly_degree()) + 2;
  if (M < static_cast<std::size_t>(needed))
    throw ArithmeticError("truncation below faithfulness threshold");
  return !represent(u, pres, M).is_zero();
}

Report verify_representation(const Presentation& pres, unsigned cases,
                             std::size_t M, unsigned max_deg,
                             std::uint64_t seed) {
  Report rep;
  rep.suite = "rep";
  rep.seed = seed;
  rep.cases = cases;
  const auto rc = representable_case(pres);
  if (!rc)
    throw ArithmeticError(
        "no faithful representation available for this presentation");
  const FieldMode m = pres.mode;

  // shift/diagonal relations, exact at every truncation size
  std::vector<std::size_t> sizes;
  for (std::size_t s = 2; s <= 8; ++s) sizes.push_back(s);
  if (M > 8) sizes.push_back(M);
  for (const std::size_t size : sizes) {
    const TruncatedMatrix u1 = basis_matrix(size, BasisKind::ShiftRight, m);
    const TruncatedMatrix um1 = basis_matrix(size, BasisKind::ShiftLeft, m);
    const TruncatedMatrix id = TruncatedMatrix::identity(m, size);
    const std::string tag = "M=" + std::to_string(size);
    if (*rc == RepCase::Classical) {
      const TruncatedMatrix n = basis_matrix(size, BasisKind::ClassicalDiagonal, m);
      rep.check("U1*N == (N+1)*U1 [" + tag + "]", u1 * n == (n + id) * u1);
      rep.check("Um1*N == (N-1)*Um1 [" + tag + "]", um1 * n == (n - id) * um1);
    } else {
      const TruncatedMatrix g =
          basis_matrix(size, BasisKind::QuantumDiagonal, m, pres.sigma.q);
      rep.check("U1*G == (1/q)G*U1 [" + tag + "]",
                u1 * g == g.scaled(pres.sigma.q.inverse()) * u1);
      rep.check("Um1*G == qG*Um1 [" + tag + "]",
                um1 * g == g.scaled(pres.sigma.q) * um1);
    }
    rep.check("U1*Um1 == 1 - e00 [" + tag + "]",
              u1 * um1 == id - TruncatedMatrix::unit(m, size, 0, 0));
    rep.check("Um1*U1 == 1 - e(M-1,M-1) [" + tag + "]",
              um1 * u1 == id - TruncatedMatrix::unit(m, size, size - 1, size - 1));
  }

  // windowed homomorphism property: truncated shifts only corrupt a border
  // of width bounded by the total degree span
  if (M <= 2 * static_cast<std::size_t>(max_deg))
    throw ArithmeticError("truncation below window budget");
  const std::size_t window = M - 2 * static_cast<std::size_t>(max_deg);
  rep.meta["truncation"] = M;
  rep.meta["window"] = window;
  unsigned window_checks = 0;
  for (unsigned i = 0; i < cases; ++i) {
    Sampler s(derive_seed(seed, i));
    const Element u = s.element(m, static_cast<int>(max_deg), 3, 5);
    const Element v = s.element(m, static_cast<int>(max_deg), 3, 5);
    const TruncatedMatrix lhs = represent(mul(u, v, pres), pres, M);
    const TruncatedMatrix rhs = represent(u, pres, M) * represent(v, pres, M);
    ++window_checks;
    if (!window_equal(lhs, rhs, window)) {
      rep.fail_case("homomorphism window failed: u = " + element_str(u) +
                    ", v = " + element_str(v));
    }
    // linearity comes along for free on the same samples
    if (represent(add(u, v), pres, M) !=
        represent(u, pres, M) + represent(v, pres, M)) {
      rep.fail_case("linearity failed: u = " + element_str(u) +
                    ", v = " + element_str(v));
    }
  }
  rep.meta["window_checks"] = window_checks;
  rep.check("homomorphism windows", rep.failures.empty());
  return rep;
}

}  // namespace gwa
