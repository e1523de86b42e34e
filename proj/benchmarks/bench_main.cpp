#include <benchmark/benchmark.h>

#include "apolar/families.hpp"
#include "apolar/parse.hpp"
#include "apolar/strassen.hpp"

using namespace apolar;

namespace {

void BM_Perp(benchmark::State& state) {
  Poly F = xa_sum_b_form(1, static_cast<unsigned>(state.range(0)), 3);
  const auto D = static_cast<unsigned>(F.degree() + 1);
  for (auto _ : state) benchmark::DoNotOptimize(perp(F, D));
}
BENCHMARK(BM_Perp)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MonomialLowerBound(benchmark::State& state) {
  Poly F = parse_poly("x0*x1^4*x2^5");
  ParseOptions o;
  o.vars = F.vars();
  o.role = Role::T;
  Poly t = parse_poly("X0", o);
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(F, {t}, t));
}
BENCHMARK(BM_MonomialLowerBound)->Unit(benchmark::kMillisecond);

void BM_MonomialCertificate(benchmark::State& state) {
  Poly F = parse_poly("x0*x1^4*x2^5");
  for (auto _ : state) benchmark::DoNotOptimize(monomial_rank(F));
}
BENCHMARK(BM_MonomialCertificate)->Unit(benchmark::kMillisecond);

void BM_Vandermonde(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vandermonde(n));
}
BENCHMARK(BM_Vandermonde)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Sylvester(benchmark::State& state) {
  Poly F = parse_poly("x0^4*x1^6 + x0^10 - 3*x1^10");
  for (auto _ : state) benchmark::DoNotOptimize(sylvester(F));
}
BENCHMARK(BM_Sylvester)->Unit(benchmark::kMillisecond);

void BM_Strassen(benchmark::State& state) {
  Poly F = parse_poly("x0^2*x1 + y0*y1*y2");
  for (auto _ : state) benchmark::DoNotOptimize(strassen_rank(F));
}
BENCHMARK(BM_Strassen)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
