#include <benchmark/benchmark.h>

#include <random>

#include "wqo/barrier.hpp"
#include "wqo/bridge.hpp"
#include "wqo/hierarchy.hpp"
#include "wqo/sequence.hpp"

using namespace wqo;

namespace {

SeqTerm random_word(std::mt19937_64& rng, std::size_t len, unsigned letters) {
  std::vector<SeqTerm> parts;
  for (std::size_t i = 0; i < len; ++i) parts.push_back(SeqTerm::atom(Element::named(static_cast<std::uint32_t>(rng() % letters))));
  return SeqTerm::cat(std::move(parts));
}

// Nested Reps of the given depth, each with two blocks.
SeqTerm nested(unsigned depth, std::uint32_t a, std::uint32_t b) {
  SeqTerm x = SeqTerm::atom(Element::named(a)), y = SeqTerm::atom(Element::named(b));
  for (unsigned d = 0; d < depth; ++d) {
    SeqTerm r = SeqTerm::rep({x, y});
    y = SeqTerm::cat({x, r});
    x = r;
  }
  return x;
}

}  // namespace

static void BM_EmbedWords(benchmark::State& state) {
  auto qo = antichain_qo(3);
  std::mt19937_64 rng(1);
  std::vector<SeqTerm> ws;
  for (int i = 0; i < 256; ++i) ws.push_back(random_word(rng, static_cast<std::size_t>(state.range(0)), 3));
  std::size_t i = 0, hits = 0;
  for (auto _ : state) {
    hits += embeds(qo, ws[i % 256], ws[(i * 7 + 3) % 256], false);
    ++i;
  }
  benchmark::DoNotOptimize(hits);
}
BENCHMARK(BM_EmbedWords)->Arg(4)->Arg(8)->Arg(32)->Arg(128);

static void BM_EmbedWitnessWords(benchmark::State& state) {
  auto qo = chain_qo(3);
  std::mt19937_64 rng(2);
  std::vector<SeqTerm> ws;
  for (int i = 0; i < 256; ++i) ws.push_back(random_word(rng, static_cast<std::size_t>(state.range(0)), 3));
  std::size_t i = 0;
  for (auto _ : state) {
    auto w = embed_witness(qo, ws[i % 256], ws[(i * 7 + 3) % 256], true);
    benchmark::DoNotOptimize(w);
    ++i;
  }
}
BENCHMARK(BM_EmbedWitnessWords)->Arg(8)->Arg(32);

static void BM_EmbedNestedReps(benchmark::State& state) {
  auto qo = chain_qo(2);
  auto u = nested(static_cast<unsigned>(state.range(0)), 0, 1);
  auto v = nested(static_cast<unsigned>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(embeds(qo, u, v, false));
}
BENCHMARK(BM_EmbedNestedReps)->DenseRange(1, 4);

static void BM_LesssimUniverse(benchmark::State& state) {
  auto qo = antichain_qo(3);
  std::vector<Element> urs{Element::named(0), Element::named(1), Element::named(2)};
  auto terms = vterm_universe(urs, 2, 3);
  std::size_t i = 0, hits = 0;
  for (auto _ : state) {
    hits += lesssim(qo, terms[i % terms.size()], terms[(i * 31 + 5) % terms.size()], state.range(0) != 0);
    ++i;
  }
  benchmark::DoNotOptimize(hits);
}
BENCHMARK(BM_LesssimUniverse)->Arg(0)->Arg(1);

static void BM_IotaEta(benchmark::State& state) {
  auto qo = antichain_qo(2);
  std::vector<Element> urs{Element::named(0), Element::named(1)};
  auto terms = vterm_universe(urs, 2, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    auto x = eta(qo, iota(qo, terms[i % terms.size()]), false);
    benchmark::DoNotOptimize(x);
    ++i;
  }
}
BENCHMARK(BM_IotaEta);

static void BM_RamseyK2(benchmark::State& state) {
  std::mt19937_64 rng(18);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::vector<std::vector<int>> col(n, std::vector<int>(n));
  for (auto& row : col)
    for (auto& c : row) c = static_cast<int>(rng() & 1);
  for (auto _ : state) {
    auto h = ramsey_homogeneous(2, [&](const Tuple& s) { return col[s[0]][s[1]]; }, 4, n);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_RamseyK2)->Arg(18)->Arg(30);

static void BM_IsBadRado(benchmark::State& state) {
  auto g = rado_array();
  for (auto _ : state) benchmark::DoNotOptimize(is_bad_on(g, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_IsBadRado)->Arg(10)->Arg(20);

static void BM_UnwindRadoPrefix(benchmark::State& state) {
  auto rado = rado_qo();
  std::vector<VTerm> prefix;
  for (std::uint64_t i = 0; i < 4; ++i) prefix.push_back(truncate_downset(rado_bad_downset(i), rado_count_upto(12)));
  for (auto _ : state) benchmark::DoNotOptimize(unwind(rado, prefix, 2, false));
}
BENCHMARK(BM_UnwindRadoPrefix);

BENCHMARK_MAIN();
