#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "ordisc/analyzer.hpp"
#include "ordisc/exprparse.hpp"
#include "ordisc/local.hpp"
#include "ordisc/resultant.hpp"
#include "ordisc/universal.hpp"

using namespace ordisc;

namespace {

void BM_DiscriminantRandomMonic(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  const MonicInY f = random_monic(Field::prime(101), 2, d, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_y(f));
}
BENCHMARK(BM_DiscriminantRandomMonic)->DenseRange(2, 6);

void BM_DiscriminantOverQ(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  std::string text = "Y^" + std::to_string(d);
  for (unsigned k = 0; k < d; ++k)
    text += " + (" + std::to_string(k + 1) + "*X1^2 - X1 + " + std::to_string(k + 2) + "/3)*Y^" +
            std::to_string(k);
  const MonicInY f = MonicInY::from_poly(parse_poly(text, Field::rationals(), 1));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_y(f));
}
BENCHMARK(BM_DiscriminantOverQ)->DenseRange(2, 6);

// Uncached: builds the symbolic discriminant from scratch each time.
void BM_UniversalSymbolic(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  const Field q = Field::rationals();
  std::vector<MultiPoly> a;
  for (unsigned i = 0; i < d; ++i) {
    Monomial m(d, 0);
    m[i] = 1;
    MultiPoly v(q, d);
    v.add_term(m, q.one());
    a.push_back(v);
  }
  const MonicInY f(a);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_y(f));
}
BENCHMARK(BM_UniversalSymbolic)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_HenselSplit(benchmark::State& state) {
  const Field q = Field::rationals();
  const MonicInY f = MonicInY::from_poly(parse_poly("(Y^2 - X1)*(Y - 1)*(Y + 2) + X1^3", q, 1));
  const PointAffine p{{q.zero()}};
  const unsigned cap = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hensel_split(f, p, cap));
}
BENCHMARK(BM_HenselSplit)->RangeMultiplier(2)->Range(4, 16);

void BM_ScanF5(benchmark::State& state) {
  const MonicInY f = MonicInY::from_poly(parse_poly("Y^3 + X1*Y^2 + X1^2 + 1", Field::prime(5), 1));
  ScanOptions opt;
  opt.max_ext_degree = 2;
  for (auto _ : state) benchmark::DoNotOptimize(scan_exhaustive(f, opt));
}
BENCHMARK(BM_ScanF5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
