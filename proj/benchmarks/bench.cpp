#include <braidthom/braid.hpp>
#include <braidthom/element.hpp>
#include <braidthom/random.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace braidthom;

// u against u * w r w^-1 with r = s1 s2 s1 (s2 s1 s2)^-1, equal but not freely.
static void BM_BraidEqual(benchmark::State& state) {
  const int strands = static_cast<int>(state.range(0));
  const int len = static_cast<int>(state.range(1));
  Rng rng(1, static_cast<std::uint64_t>(strands * 1000 + len));
  const BraidWord u = random_braid(rng, strands, len);
  const BraidWord w = random_braid(rng, strands, len);
  const BraidWord r = BraidWord(strands, {{1, 1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}, {2, -1}});
  const BraidWord v = u * w * r * w.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(braid_equal(u, v));
}
BENCHMARK(BM_BraidEqual)->Args({4, 8})->Args({4, 32})->Args({8, 16})->Args({12, 24});

static std::vector<Element> sample(int leaves, int count) {
  GenConfig cfg;
  cfg.seed = 5;
  cfg.max_leaves = leaves;
  Rng rng(cfg.seed, 0);
  std::vector<Element> out;
  for (int i = 0; i < count; ++i) out.push_back(random_element(cfg, rng));
  return out;
}

static void BM_Normalize(benchmark::State& state) {
  const auto xs = sample(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Normalize)->Arg(6)->Arg(12)->Arg(20);

static void BM_Mul(benchmark::State& state) {
  const auto xs = sample(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(xs[i % xs.size()], xs[(i + 1) % xs.size()]));
    ++i;
  }
}
BENCHMARK(BM_Mul)->Arg(6)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
