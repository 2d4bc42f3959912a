#include "gwa/toeplitz.hpp"

#include <string>

#include "gwa/expr.hpp"
#include "gwa/rng.hpp"

namespace gwa {

ToeplitzElement<Element> ta_generator(const TAPick& pick, const Presentation& pres) {
  ToeplitzElement<Element> r;
  Element coeff(pres.mode);
  long index = 0;
  switch (pick.kind) {
    case TAKind::Deg0:
      coeff = Element::from_poly(pick.p);
      break;
    case TAKind::Deg1:
      coeff = Element::monomial(1, pick.p);
      index = 1;
      break;
    case TAKind::DegM1:
      coeff = Element::monomial(-1, pick.p);
      index = -1;
      break;
  }
  if (!coeff.is_zero()) r.L.emplace(index, std::move(coeff));
  return r;
}

ToeplitzElement<Element> build_ta_word(const Presentation& pres,
                                       const std::vector<TAPick>& word) {
  const GwaRing ring{&pres};
  ToeplitzElement<Element> r = ToeplitzRing<GwaRing>{ring}.one();
  for (const auto& pick : word) r = t_mul(r, ta_generator(pick, pres), ring);
  return r;
}

Element pbar(const ToeplitzElement<Element>& w, FieldMode mode) {
  Element r(mode);
  for (const auto& [k, f] : w.L) r = add(r, f);
  return r;
}

ToeplitzElement<Element> ta_section(const Element& u) {
  ToeplitzElement<Element> r;
  for (const auto& [d, p] : u.components())
    r.L.emplace(static_cast<long>(d), Element::monomial(d, p));
  return r;
}

bool lambda_membership(const ToeplitzElement<Element>& w, const Presentation& pres) {
  if (!w.L.empty()) return false;
  for (const auto& [ij, coeff] : w.K) {
    const auto [i, j] = ij;
    const int d = static_cast<int>(i - j);
    if (coeff.components().size() != 1) return false;
    if (coeff.components().begin()->first != d) return false;
    const auto [gen, gen_deg] = ideal_generator_lambda(
        pres, static_cast<unsigned>(i), static_cast<unsigned>(j));
    if (gen_deg != d) return false;  // cannot happen; defensive only
    if (gen.is_zero()) return false;
    if (!divides(gen, coeff.component(d))) return false;
  }
  return true;
}

Report verify_extension(const Presentation& pres, unsigned cases,
                        std::uint64_t seed) {
  Report rep;
  rep.suite = "toeplitz-extension";
  rep.seed = seed;
  rep.cases = cases;
  const GwaRing ring{&pres};

  const auto random_word = [&](Sampler& s) {
    std::vector<TAPick> word;
    const long len = s.range(1, 3);
    for (long i = 0; i < len; ++i) {
      const long kind = s.range(0, 2);
      TAPick pick{kind == 0   ? TAKind::Deg0
                  : kind == 1 ? TAKind::Deg1
                              : TAKind::DegM1,
                  s.nonzero_poly(pres.mode, 2, 5)};
      word.push_back(std::move(pick));
    }
    return build_ta_word(pres, word);
  };

  for (unsigned i = 0; i < cases; ++i) {
    Sampler s(derive_seed(seed, i));
    const auto w1 = random_word(s);
    const auto w2 = random_word(s);
    const auto prod = t_mul(w1, w2, ring);
    if (pbar(prod, pres.mode) !=
        mul(pbar(w1, pres.mode), pbar(w2, pres.mode), pres)) {
      rep.fail_case("pbar not multiplicative on case " + std::to_string(i) +
                    ": pbar(w1) = " + element_str(pbar(w1, pres.mode)) +
                    ", pbar(w2) = " + element_str(pbar(w2, pres.mode)));
    }
    for (const auto* w : {&w1, &w2, &prod}) {
      const auto diff = t_sub(*w, ta_section(pbar(*w, pres.mode)), ring);
      if (!pbar(diff, pres.mode).is_zero() || !lambda_membership(diff, pres)) {
        rep.fail_case("section difference left the kernel ideal on case " +
                      std::to_string(i));
      }
    }
  }
  rep.check("pbar multiplicative + kernel membership", rep.failures.empty());
  return rep;
}

nlohmann::ordered_json toeplitz_to_json(const ToeplitzElement<Element>& w) {
  nlohmann::ordered_json j;
  auto karr = nlohmann::ordered_json::array();
  for (const auto& [ij, coeff] : w.K)
    karr.push_back({ij.first, ij.second, element_str(coeff)});
  auto larr = nlohmann::ordered_json::array();
  for (const auto& [k, coeff] : w.L) larr.push_back({k, element_str(coeff)});
  j["K"] = karr;
  j["L"] = larr;
  return j;
}

// ---------------------------------------------------------------------------
// Structure suite and endpoint diffotopy

namespace {

IntToeplitz int_e(long i, long j, long long c = 1) {
  IntToeplitz r;
  if (c != 0) r.K.emplace(std::make_pair(i, j), c);
  return r;
}

IntToeplitz int_v(long k, long long c = 1) {
  IntToeplitz r;
  if (c != 0) r.L.emplace(k, c);
  return r;
}

TensorSquare lift_left(const IntToeplitz& w) {
  TensorSquare r;
  for (const auto& [ij, c] : w.K) r.K.emplace(ij, int_v(0, c));
  for (const auto& [k, c] : w.L) r.L.emplace(k, int_v(0, c));
  return r;
}

IntToeplitz random_int_toeplitz(Sampler& s) {
  const IntRing ring;
  IntToeplitz r;
  const long terms = s.range(1, 4);
  for (long t = 0; t < terms; ++t) {
    const long long c = s.range(-3, 3);
    if (c == 0) continue;
    if (s.chance(50)) {
      detail::accumulate(r.K, std::make_pair(s.range(0, 4), s.range(0, 4)), c,
                         ring);
    } else {
      detail::accumulate(r.L, s.range(-3, 3), c, ring);
    }
  }
  return r;
}

}  // namespace

TensorSquare endpoint_diffotopy_S(int t) {
  if (t != 0 && t != 1)
    throw ArithmeticError("diffotopy is only computed at the endpoints 0 and 1");
  const IntRing ir;
  const IntToeplitz s = int_v(1);
  const IntToeplitz sstar = int_v(-1);
  const IntToeplitz s2sstar = t_mul(t_mul(s, s, ir), sstar, ir);
  if (t == 0) {
    // f(0) = 0, g(0) = 1: S^2 S* (x) 1 + S e00 (x) 1, which collapses to S (x) 1
    return lift_left(t_add(s2sstar, t_mul(s, int_e(0, 0), ir), ir));
  }
  // f(1) = 1, g(1) = 0
  TensorSquare r = lift_left(s2sstar);
  r.K.emplace(std::make_pair(0L, 0L), s);
  return r;
}

TensorSquare endpoint_diffotopy_Sstar(int t) {
  if (t != 0 && t != 1)
    throw ArithmeticError("diffotopy is only computed at the endpoints 0 and 1");
  const IntRing ir;
  const IntToeplitz s = int_v(1);
  const IntToeplitz sstar = int_v(-1);
  const IntToeplitz ssstar2 = t_mul(s, t_mul(sstar, sstar, ir), ir);
  if (t == 0) {
    return lift_left(t_add(ssstar2, t_mul(int_e(0, 0), sstar, ir), ir));
  }
  TensorSquare r = lift_left(ssstar2);
  r.K.emplace(std::make_pair(0L, 0L), sstar);
  return r;
}

TensorSquare apply_endpoint_diffotopy(const IntToeplitz& w, int t) {
  const ToeplitzRing<IntRing> ring{IntRing{}};
  const TensorSquare phi_s = endpoint_diffotopy_S(t);
  const TensorSquare phi_sstar = endpoint_diffotopy_Sstar(t);
  const TensorSquare unit = te_one(ring);
  const TensorSquare e00 =
      t_sub(unit, t_mul(phi_s, phi_sstar, ring), ring);  // phi(1 - SS*)

  const auto power = [&](const TensorSquare& base, long n) {
    TensorSquare r = unit;
    for (long i = 0; i < n; ++i) r = t_mul(r, base, ring);
    return r;
  };
  const auto scaled = [&](TensorSquare v, long long c) {
    const IntRing ir;
    IntToeplitz factor = int_v(0, c);
    TensorSquare r;
    for (const auto& [ij, x] : v.K) r.K.emplace(ij, t_mul(factor, x, ir));
    for (const auto& [k, x] : v.L) r.L.emplace(k, t_mul(factor, x, ir));
    return r;
  };

  TensorSquare out;
  for (const auto& [ij, c] : w.K) {
    // e_ij = S^i (1 - SS*) S*^j
    TensorSquare term = t_mul(power(phi_s, ij.first), e00, ring);
    term = t_mul(term, power(phi_sstar, ij.second), ring);
    out = t_add(out, scaled(term, c), ring);
  }
  for (const auto& [k, c] : w.L) {
    const TensorSquare term = k >= 0 ? power(phi_s, k) : power(phi_sstar, -k);
    out = t_add(out, scaled(term, c), ring);
  }
  return out;
}

Report verify_toeplitz_structure(unsigned cases, std::uint64_t seed) {
  Report rep;
  rep.suite = "toeplitz-structure";
  rep.seed = seed;
  rep.cases = cases;
  const IntRing ring;

  // e_ij e_kl = delta_jk e_il, exhaustively for indices <= 6
  {
    bool ok = true;
    for (long i = 0; i <= 6 && ok; ++i)
      for (long j = 0; j <= 6 && ok; ++j)
        for (long k = 0; k <= 6 && ok; ++k)
          for (long l = 0; l <= 6 && ok; ++l) {
            const IntToeplitz expect = (j == k) ? int_e(i, l) : IntToeplitz{};
            ok = t_mul(int_e(i, j), int_e(k, l), ring) == expect;
          }
    rep.check("e_ij * e_kl = delta_jk e_il (i,j,k,l <= 6)", ok);
  }
  // v_k e_ij = e_(i+k),j and e_ij v_k = e_i,(j-k)
  {
    bool ok = true;
    for (long k = -6; k <= 6 && ok; ++k)
      for (long i = 0; i <= 6 && ok; ++i)
        for (long j = 0; j <= 6 && ok; ++j) {
          const IntToeplitz left_expect =
              (i + k >= 0) ? int_e(i + k, j) : IntToeplitz{};
          const IntToeplitz right_expect =
              (j - k >= 0) ? int_e(i, j - k) : IntToeplitz{};
          ok = t_mul(int_v(k), int_e(i, j), ring) == left_expect &&
               t_mul(int_e(i, j), int_v(k), ring) == right_expect;
        }
    rep.check("v_k e_ij and e_ij v_k shifts (|k|, i, j <= 6)", ok);
  }
  // v_k v_(-l) = v_(k-l) (1 - e00 - ... - e_(l-1,l-1)) for l > 0
  {
    bool ok = true;
    for (long k = -6; k <= 6 && ok; ++k)
      for (long l = -6; l <= 6 && ok; ++l) {
        IntToeplitz expect = int_v(k - l);
        if (l > 0) {
          for (long tt = 0; tt < l; ++tt) {
            if (tt + k - l < 0) continue;
            expect = t_add(expect, int_e(tt + k - l, tt, -1), ring);
          }
        }
        ok = t_mul(int_v(k), int_v(-l), ring) == expect;
      }
    rep.check("v_k v_(-l) corner rule (|k|, |l| <= 6)", ok);
  }
  rep.check("S*S = 1", t_mul(int_v(-1), int_v(1), ring) == int_v(0));
  rep.check("SS* = 1 - e00",
            t_mul(int_v(1), int_v(-1), ring) ==
                t_add(int_v(0), int_e(0, 0, -1), ring));

  // associativity on random triples of small support
  {
    bool ok = true;
    for (unsigned i = 0; i < cases && ok; ++i) {
      Sampler s(derive_seed(seed, i));
      const IntToeplitz a = random_int_toeplitz(s);
      const IntToeplitz b = random_int_toeplitz(s);
      const IntToeplitz c = random_int_toeplitz(s);
      ok = t_mul(t_mul(a, b, ring), c, ring) == t_mul(a, t_mul(b, c, ring), ring);
    }
    rep.check("associativity on random triples", ok);
  }

  // endpoint maps of the diffotopy into the tensor square
  const ToeplitzRing<IntRing> tring{IntRing{}};
  rep.check("phi_0(S) = S (x) 1", endpoint_diffotopy_S(0) == lift_left(int_v(1)));
  rep.check("phi_0(S*) = S* (x) 1",
            endpoint_diffotopy_Sstar(0) == lift_left(int_v(-1)));
  {
    TensorSquare expect = lift_left(t_add(int_v(1), int_e(1, 0, -1), ring));
    expect.K.emplace(std::make_pair(0L, 0L), int_v(1));
    rep.check("phi_1(S) = S^2S* (x) 1 + e (x) S", endpoint_diffotopy_S(1) == expect);
  }
  for (int t : {0, 1}) {
    const auto tag = std::to_string(t);
    rep.check("phi_" + tag + "(S*) phi_" + tag + "(S) = 1 (x) 1",
              t_mul(endpoint_diffotopy_Sstar(t), endpoint_diffotopy_S(t), tring) ==
                  te_one(tring));
    rep.check("phi_" + tag + "(S) phi_" + tag + "(S*) = phi_" + tag + "(1 - e00)",
              t_mul(endpoint_diffotopy_S(t), endpoint_diffotopy_Sstar(t), tring) ==
                  apply_endpoint_diffotopy(
                      t_add(int_v(0), int_e(0, 0, -1), IntRing{}), t));
    // multiplicative extension on random words in S and S*
    bool ok = true;
    for (unsigned i = 0; i < cases && ok; ++i) {
      Sampler s(derive_seed(seed ^ 0xABCDu, i));
      const auto word = [&]() {
        IntToeplitz w = int_v(0);
        const long len = s.range(1, 4);
        for (long j = 0; j < len; ++j)
          w = t_mul(w, int_v(s.chance(50) ? 1 : -1), ring);
        return w;
      };
      const IntToeplitz w1 = word();
      const IntToeplitz w2 = word();
      ok = apply_endpoint_diffotopy(t_mul(w1, w2, ring), t) ==
           t_mul(apply_endpoint_diffotopy(w1, t),
                 apply_endpoint_diffotopy(w2, t), tring);
    }
    rep.check("phi_" + tag + " multiplicative on random words", ok);
  }
  return rep;
}

}  // namespace gwa
