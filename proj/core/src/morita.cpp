#include "gwa/morita.hpp"

#include <map>
#include <string>

#include "gwa/rng.hpp"

namespace gwa {

namespace {

TruncatedMatrix shift_power(BasisKind kind, std::size_t M, FieldMode m,
                            unsigned p) {
  TruncatedMatrix r = TruncatedMatrix::identity(m, M);
  const TruncatedMatrix s = basis_matrix(M, kind, m);
  for (unsigned i = 0; i < p; ++i) r = r * s;
  return r;
}

// Symbolic element of the coupled ideal: (i, j) -> middle polynomial, the
// element being sum e_ij (x) y^{i+off} p_ij(h) x^{j+off} with off = 1 for the
// kernel ideal and off = 0 for the degree-zero coupling.
using Middle = std::map<std::pair<unsigned, unsigned>, Poly>;

ToeplitzElement<TruncatedMatrix> rho_of(const Middle& w, unsigned off,
                                        const Presentation& pres,
                                        std::size_t M) {
  ToeplitzElement<TruncatedMatrix> r;
  for (const auto& [ij, p] : w) {
    const Element e =
        mul(mul(Element::monomial(static_cast<int>(ij.first + off),
                                  Poly::constant(Scalar::one(pres.mode))),
                Element::from_poly(p), pres),
            Element::monomial(-static_cast<int>(ij.second + off),
                              Poly::constant(Scalar::one(pres.mode))),
            pres);
    TruncatedMatrix m = represent(e, pres, M);
    if (!m.is_zero())
      r.K.emplace(std::make_pair(static_cast<long>(ij.first),
                                 static_cast<long>(ij.second)),
                  std::move(m));
  }
  return r;
}

// Product of sigma^t(a) for t in [from, to]; the empty range gives 1.
Poly sigma_product(const Presentation& pres, unsigned from, unsigned to) {
  Poly r = Poly::constant(Scalar::one(pres.mode));
  for (unsigned t = from; t <= to; ++t)
    r = r * pres.sigma.apply(pres.a, static_cast<long>(t));
  return r;
}

Middle random_middle(Sampler& s, FieldMode m, unsigned max_index) {
  Middle w;
  const long entries = s.range(1, 3);
  for (long t = 0; t < entries; ++t) {
    const unsigned i = static_cast<unsigned>(s.range(0, static_cast<long>(max_index)));
    const unsigned j = static_cast<unsigned>(s.range(0, static_cast<long>(max_index)));
    w[{i, j}] = s.nonzero_poly(m, 2, 5);
  }
  return w;
}

bool window_equal_te(const ToeplitzElement<TruncatedMatrix>& a,
                     const ToeplitzElement<TruncatedMatrix>& b, FieldMode mode,
                     std::size_t M, std::size_t w) {
  if (!a.L.empty() || !b.L.empty()) return false;
  const TruncatedMatrix zero(mode, M);
  auto coeff = [&](const ToeplitzElement<TruncatedMatrix>& t,
                   const std::pair<long, long>& key) -> const TruncatedMatrix& {
    auto it = t.K.find(key);
    return it == t.K.end() ? zero : it->second;
  };
  for (const auto& [key, v] : a.K)
    if (!window_equal(v, coeff(b, key), w)) return false;
  for (const auto& [key, v] : b.K)
    if (!window_equal(coeff(a, key), v, w)) return false;
  return true;
}

Report verify_context_impl(const Presentation& pres, unsigned cases,
                           std::size_t M, unsigned max_index,
                           std::uint64_t seed, unsigned off) {
  Report rep;
  rep.suite = off == 1 ? "morita-lambda" : "morita-c";
  rep.seed = seed;
  rep.cases = cases;
  const std::size_t budget = 2 * static_cast<std::size_t>(max_index) + 2 + 2;
  if (M <= budget) throw ArithmeticError("truncation below window budget");
  const std::size_t window = M - budget;
  rep.meta["truncation"] = M;
  rep.meta["max_index"] = max_index;
  rep.meta["window"] = window;

  const MoritaContext ctx = build_context(M, max_index, pres);
  const MatrixRing ring{pres.mode, M};
  ToeplitzElement<TruncatedMatrix> sum_xi_eta;
  for (unsigned i = 0; i <= max_index; ++i)
    sum_xi_eta = t_add(sum_xi_eta, t_mul(ctx.xi[i], ctx.eta[i], ring), ring);

  for (unsigned c = 0; c < cases; ++c) {
    Sampler s(derive_seed(seed, c));
    const Middle w = random_middle(s, pres.mode, max_index);
    const auto rho_w = rho_of(w, off, pres, M);

    // corner products eta_j rho(w) xi_i land on the constructed preimage
    for (const auto& [ij, p] : w) {
      const auto [k, l] = ij;  // picks out the entry at (k, l)
      const auto corner =
          t_mul(t_mul(ctx.eta[k], rho_w, ring), ctx.xi[l], ring);
      bool shape_ok = corner.L.empty();
      for (const auto& [key, v] : corner.K)
        shape_ok = shape_ok && key == std::make_pair(0L, 0L);
      if (!shape_ok) {
        rep.fail_case("corner product is not supported on e00 (case " +
                      std::to_string(c) + ")");
        continue;
      }
      Element candidate(pres.mode);
      if (off == 1) {
        // y * R'_{k+1}(h) * p(h) * x with R_{k+1} = sigma(a) * R'_{k+1}
        const Poly rprime = sigma_product(pres, 2, k + 1);
        candidate = mul(mul(Element::y(pres.mode),
                            Element::from_poly(rprime * p), pres),
                        Element::x(pres.mode), pres);
      } else {
        candidate = Element::from_poly(sigma_product(pres, 1, k) * p);
      }
      const TruncatedMatrix expect = represent(candidate, pres, M);
      const TruncatedMatrix zero(pres.mode, M);
      const TruncatedMatrix& got =
          corner.K.empty() ? zero : corner.K.begin()->second;
      if (!window_equal(got, expect, window)) {
        rep.fail_case("corner product missed its preimage at entry (" +
                      std::to_string(k) + "," + std::to_string(l) + "), case " +
                      std::to_string(c));
      }
    }

    // entries outside the support couple to zero
    {
      const unsigned k = static_cast<unsigned>(s.range(0, max_index));
      const unsigned l = static_cast<unsigned>(s.range(0, max_index));
      if (!w.count({k, l})) {
        const auto corner =
            t_mul(t_mul(ctx.eta[k], rho_w, ring), ctx.xi[l], ring);
        if (!corner.is_zero())
          rep.fail_case("coupling outside the support is nonzero (case " +
                        std::to_string(c) + ")");
      }
    }

    // (sum xi_i eta_i) rho(w) = rho(w) on the window
    if (!window_equal_te(t_mul(sum_xi_eta, rho_w, ring), rho_w, pres.mode, M,
                         window)) {
      rep.fail_case("sum xi_i eta_i does not act as the identity (case " +
                    std::to_string(c) + ")");
    }

    // right multiplication by xi_k xi'_0 stays inside the represented ideal
    if (off == 1) {
      const unsigned k = static_cast<unsigned>(s.range(0, max_index));
      const auto moved =
          t_mul(t_mul(rho_w, ctx.xi[k], ring), ctx.xi[0], ring);
      ToeplitzElement<TruncatedMatrix> expect;
      for (const auto& [ij, p] : w) {
        if (ij.second != k) continue;
        const Element cand = mul(
            mul(Element::monomial(static_cast<int>(ij.first + 1),
                                  Poly::constant(Scalar::one(pres.mode))),
                Element::from_poly(p), pres),
            Element::x(pres.mode), pres);
        TruncatedMatrix m = represent(cand, pres, M);
        if (!m.is_zero())
          expect.K.emplace(std::make_pair(static_cast<long>(ij.first), 0L),
                           std::move(m));
      }
      if (!window_equal_te(moved, expect, pres.mode, M, window)) {
        rep.fail_case("ideal is not stable under the coupling (case " +
                      std::to_string(c) + ")");
      }
    }
  }
  rep.check("corner products, identity sum and stability", rep.failures.empty());
  return rep;
}

}  // namespace

MoritaContext build_context(std::size_t M, unsigned max_index,
                            const Presentation& pres) {
  if (!representable_case(pres))
    throw ArithmeticError(
        "no faithful representation available for this presentation");
  MoritaContext ctx;
  ctx.truncation = M;
  ctx.max_index = max_index;
  for (unsigned i = 0; i <= max_index; ++i) {
    ToeplitzElement<TruncatedMatrix> xi, eta;
    xi.K.emplace(std::make_pair(static_cast<long>(i), 0L),
                 shift_power(BasisKind::ShiftRight, M, pres.mode, i));
    eta.K.emplace(std::make_pair(0L, static_cast<long>(i)),
                  shift_power(BasisKind::ShiftLeft, M, pres.mode, i));
    ctx.xi.push_back(std::move(xi));
    ctx.eta.push_back(std::move(eta));
  }
  return ctx;
}

Report verify_lambda_context(const Presentation& pres, unsigned cases,
                             std::size_t M, unsigned max_index,
                             std::uint64_t seed) {
  return verify_context_impl(pres, cases, M, max_index, seed, 1);
}

Report verify_c_context(const Presentation& pres, unsigned cases, std::size_t M,
                        unsigned max_index, std::uint64_t seed) {
  return verify_context_impl(pres, cases, M, max_index, seed, 0);
}

}  // namespace gwa
