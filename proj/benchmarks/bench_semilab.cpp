#include <benchmark/benchmark.h>

#include "semilab/corpus.hpp"
#include "semilab/exp_monoid.hpp"
#include "semilab/factor_lab.hpp"
#include "semilab/parse.hpp"
#include "semilab/zx_factor.hpp"

namespace {

using namespace semilab;

void BM_KroneckerQuartic(benchmark::State& state) {
  auto f = parse_poly("x^4 + 4", Ring::Int, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_factor(f));
}
BENCHMARK(BM_KroneckerQuartic);

void BM_KroneckerSextic(benchmark::State& state) {
  auto f = parse_poly("x^6 - 3x^5 + 2x^3 + 7x - 6", Ring::Int, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_factor(f));
}
BENCHMARK(BM_KroneckerSextic);

void BM_MonoidContains(benchmark::State& state) {
  std::vector<long> primes{2, 3, 5, 7, 11, 13};
  primes.resize(static_cast<std::size_t>(state.range(0)));
  auto m = MonoidSpec::recip_primes(primes);
  long total = 1;
  for (long p : primes) total *= p;
  long n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monoid_contains(m, Exp{Rat(n % (3 * total), total)}));
    ++n;
  }
}
BENCHMARK(BM_MonoidContains)->DenseRange(1, 6);

void BM_MonoidLengthsOfOne(benchmark::State& state) {
  std::vector<long> primes{2, 3, 5, 7, 11};
  primes.resize(static_cast<std::size_t>(state.range(0)));
  auto m = MonoidSpec::recip_primes(primes);
  Bounds b;
  b.max_length = 16;
  for (auto _ : state) benchmark::DoNotOptimize(monoid_length_set(m, Exp{Rat(1)}, b));
}
BENCHMARK(BM_MonoidLengthsOfOne)->DenseRange(1, 5);

void BM_FactorizationsSignC0C1(benchmark::State& state) {
  auto s = SemidomainInstance::sign_c0c1();
  auto g = parse_element("x^6 - x^4", s);
  for (auto _ : state) benchmark::DoNotOptimize(factorizations_in_S(s, g, Bounds{}));
}
BENCHMARK(BM_FactorizationsSignC0C1);

void BM_MemberCorpus(benchmark::State& state) {
  auto s = SemidomainInstance::natz();
  Bounds b;
  b.max_candidates = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(member_corpus(s, b));
}
BENCHMARK(BM_MemberCorpus)->Arg(500)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
