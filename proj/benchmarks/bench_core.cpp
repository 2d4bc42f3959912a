#include <benchmark/benchmark.h>

#include "gwa/classify.hpp"
#include "gwa/matrix_rep.hpp"
#include "gwa/rng.hpp"
#include "gwa/toeplitz.hpp"

namespace {

using namespace gwa;

Presentation weyl() { return named_example("weyl"); }

Presentation quantum_weyl() { return named_example("quantum-weyl"); }

void BM_NormalFormMul(benchmark::State& state) {
  const Presentation pres = weyl();
  Sampler s(42);
  const Element u = s.nonzero_element(pres.mode, 4, 3, 10);
  const Element v = s.nonzero_element(pres.mode, 4, 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(mul(u, v, pres));
}
BENCHMARK(BM_NormalFormMul);

void BM_NormalFormMulGeneric(benchmark::State& state) {
  const Presentation pres = quantum_weyl();
  Sampler s(42);
  const Element u = s.nonzero_element(pres.mode, 4, 3, 10);
  const Element v = s.nonzero_element(pres.mode, 4, 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(mul(u, v, pres));
}
BENCHMARK(BM_NormalFormMulGeneric);

void BM_Classify(benchmark::State& state) {
  ExampleParams p;
  p.k = 2;
  p.l = 3;
  const Presentation pres = named_example("wpq", p);
  for (auto _ : state) benchmark::DoNotOptimize(classify(pres));
}
BENCHMARK(BM_Classify);

void BM_Represent(benchmark::State& state) {
  const Presentation pres = weyl();
  Sampler s(7);
  const Element u = s.nonzero_element(pres.mode, 4, 3, 10);
  const std::size_t M = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(represent(u, pres, M));
}
BENCHMARK(BM_Represent)->Arg(16)->Arg(32);

void BM_ToeplitzWordProduct(benchmark::State& state) {
  const Presentation pres = weyl();
  const GwaRing ring{&pres};
  Sampler s(63);
  const auto w1 = build_ta_word(
      pres, {{TAKind::Deg1, s.nonzero_poly(pres.mode, 2, 5)},
             {TAKind::DegM1, s.nonzero_poly(pres.mode, 2, 5)},
             {TAKind::Deg0, s.nonzero_poly(pres.mode, 2, 5)}});
  const auto w2 = build_ta_word(
      pres, {{TAKind::DegM1, s.nonzero_poly(pres.mode, 2, 5)},
             {TAKind::Deg1, s.nonzero_poly(pres.mode, 2, 5)}});
  for (auto _ : state) benchmark::DoNotOptimize(t_mul(w1, w2, ring));
}
BENCHMARK(BM_ToeplitzWordProduct);

}  // namespace

BENCHMARK_MAIN();
