#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gwa/algebra.hpp"
#include "gwa/matrix_rep.hpp"
#include "gwa/report.hpp"

namespace gwa {

/// Element of the (algebraic) Toeplitz model over a coefficient ring R:
/// a finitely supported matrix part K (coefficients of e_ij, i, j >= 0) plus
/// a Laurent part L (coefficients of the symbols v_k). The unit is v_0;
/// S = v_1 and S* = v_{-1} with S*S = 1 and SS* = 1 - e00.
template <typename R>
struct ToeplitzElement {
  std::map<std::pair<long, long>, R> K;
  std::map<long, R> L;

  bool is_zero() const { return K.empty() && L.empty(); }
  bool operator==(const ToeplitzElement&) const = default;
};

// Coefficient rings. Each ring object supplies the operations so that one
// multiplication routine serves plain integers, normal-form algebra
// elements, truncated matrices and nested Toeplitz coefficients alike.

struct IntRing {
  using value_type = long long;
  value_type add(value_type a, value_type b) const { return a + b; }
  value_type mul(value_type a, value_type b) const { return a * b; }
  value_type neg(value_type a) const { return -a; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type one() const { return 1; }
};

struct GwaRing {
  const Presentation* pres;
  using value_type = Element;
  value_type add(const value_type& a, const value_type& b) const {
    return gwa::add(a, b);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return gwa::mul(a, b, *pres);
  }
  value_type neg(const value_type& a) const { return gwa::neg(a); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type one() const { return Element::one(pres->mode); }
};

struct MatrixRing {
  FieldMode mode;
  std::size_t size;
  using value_type = TruncatedMatrix;
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type one() const { return TruncatedMatrix::identity(mode, size); }
};

template <typename Inner>
struct ToeplitzRing {
  Inner inner;
  using value_type = ToeplitzElement<typename Inner::value_type>;
  value_type add(const value_type& a, const value_type& b) const {
    return t_add(a, b, inner);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return t_mul(a, b, inner);
  }
  value_type neg(const value_type& a) const { return t_neg(a, inner); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type one() const {
    value_type r;
    r.L.emplace(0, inner.one());
    return r;
  }
};

namespace detail {

template <typename Map, typename Key, typename Ring>
void accumulate(Map& m, const Key& key, const typename Ring::value_type& v,
                const Ring& ring) {
  if (ring.is_zero(v)) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, v);
    return;
  }
  it->second = ring.add(it->second, v);
  if (ring.is_zero(it->second)) m.erase(it);
}

}  // namespace detail

template <typename R, typename Ring>
ToeplitzElement<R> t_add(const ToeplitzElement<R>& a, const ToeplitzElement<R>& b,
                         const Ring& ring) {
  ToeplitzElement<R> r = a;
  for (const auto& [k, v] : b.K) detail::accumulate(r.K, k, v, ring);
  for (const auto& [k, v] : b.L) detail::accumulate(r.L, k, v, ring);
  return r;
}

template <typename R, typename Ring>
ToeplitzElement<R> t_neg(const ToeplitzElement<R>& a, const Ring& ring) {
  ToeplitzElement<R> r;
  for (const auto& [k, v] : a.K) r.K.emplace(k, ring.neg(v));
  for (const auto& [k, v] : a.L) r.L.emplace(k, ring.neg(v));
  return r;
}

template <typename R, typename Ring>
ToeplitzElement<R> t_sub(const ToeplitzElement<R>& a, const ToeplitzElement<R>& b,
                         const Ring& ring) {
  return t_add(a, t_neg(b, ring), ring);
}

/// Bilinear product over the structure rules
///   e_ij e_kl = delta_jk e_il,  v_k e_ij = e_(i+k),j,  e_ij v_k = e_i,(j-k),
///   v_k v_(-l) = v_(k-l)(1 - e00 - ... - e_(l-1,l-1)) for l > 0, else v_(k-l);
/// matrix units with a negative index vanish. The structure constants are
/// central integers, so coefficients multiply left-to-right.
template <typename R, typename Ring>
ToeplitzElement<R> t_mul(const ToeplitzElement<R>& a, const ToeplitzElement<R>& b,
                         const Ring& ring) {
  ToeplitzElement<R> r;
  for (const auto& [ij, ca] : a.K) {
    const auto [i, j] = ij;
    for (const auto& [kl, cb] : b.K) {  // e_ij e_kl
      if (j != kl.first) continue;
      detail::accumulate(r.K, std::make_pair(i, kl.second), ring.mul(ca, cb),
                         ring);
    }
    for (const auto& [k, cb] : b.L) {  // e_ij v_k
      if (j - k < 0) continue;
      detail::accumulate(r.K, std::make_pair(i, j - k), ring.mul(ca, cb), ring);
    }
  }
  for (const auto& [k, ca] : a.L) {
    for (const auto& [ij, cb] : b.K) {  // v_k e_ij
      if (ij.first + k < 0) continue;
      detail::accumulate(r.K, std::make_pair(ij.first + k, ij.second),
                         ring.mul(ca, cb), ring);
    }
    for (const auto& [m, cb] : b.L) {  // v_k v_m
      const auto c = ring.mul(ca, cb);
      detail::accumulate(r.L, k + m, c, ring);
      if (m < 0) {
        for (long t = 0; t < -m; ++t) {
          if (t + k + m < 0) continue;
          detail::accumulate(r.K, std::make_pair(t + k + m, t), ring.neg(c),
                             ring);
        }
      }
    }
  }
  return r;
}

template <typename Ring>
typename ToeplitzRing<Ring>::value_type te_v(long k, const Ring& ring) {
  typename ToeplitzRing<Ring>::value_type r;
  r.L.emplace(k, ring.one());
  return r;
}

template <typename Ring>
typename ToeplitzRing<Ring>::value_type te_e(long i, long j, const Ring& ring) {
  typename ToeplitzRing<Ring>::value_type r;
  r.K.emplace(std::make_pair(i, j), ring.one());
  return r;
}

template <typename Ring>
typename ToeplitzRing<Ring>::value_type te_one(const Ring& ring) {
  return te_v(0, ring);
}

// ---------------------------------------------------------------------------
// The Toeplitz algebra of a presentation: subalgebra generated by 1 (x) A_0,
// S (x) A_1 and S* (x) A_{-1}, with the Laurent index of v_k pairing with
// grade k.

enum class TAKind { Deg0, Deg1, DegM1 };

struct TAPick {
  TAKind kind;
  Poly p;
};

ToeplitzElement<Element> ta_generator(const TAPick& pick, const Presentation& pres);
ToeplitzElement<Element> build_ta_word(const Presentation& pres,
                                       const std::vector<TAPick>& word);

/// Evaluation onto the algebra: drops the matrix part and sums the Laurent
/// coefficients.
Element pbar(const ToeplitzElement<Element>& w, FieldMode mode);

/// Linear section of pbar: the degree-n component rides on v_n.
ToeplitzElement<Element> ta_section(const Element& u);

/// Membership in the kernel ideal: matrix part only, with the (i, j) entry
/// concentrated in degree i-j and divisible by the normal form of
/// y^{i+1} x^{j+1}.
bool lambda_membership(const ToeplitzElement<Element>& w, const Presentation& pres);

/// pbar multiplicativity and section-difference kernel membership on random
/// generated words.
Report verify_extension(const Presentation& pres, unsigned cases,
                        std::uint64_t seed);

/// Exhaustive structure relations, associativity and the endpoint maps of the
/// standard diffotopy into the tensor square.
Report verify_toeplitz_structure(unsigned cases, std::uint64_t seed);

/// {"K": [[i, j, coeff], ...], "L": [[k, coeff], ...]} with algebra-element
/// coefficients in display form.
nlohmann::ordered_json toeplitz_to_json(const ToeplitzElement<Element>& w);

// ---------------------------------------------------------------------------
// Endpoint diffotopy into the tensor-square model (coefficients of the outer
// Toeplitz element are themselves Toeplitz elements):
//   phi_0(S) = S (x) 1,   phi_1(S) = S^2 S* (x) 1 + e00 (x) S.

using IntToeplitz = ToeplitzElement<long long>;
using TensorSquare = ToeplitzElement<IntToeplitz>;

TensorSquare endpoint_diffotopy_S(int t);
TensorSquare endpoint_diffotopy_Sstar(int t);
/// Multiplicative extension to the whole algebra via e_ij = S^i(1 - SS*)S*^j.
TensorSquare apply_endpoint_diffotopy(const IntToeplitz& w, int t);

}  // namespace gwa
