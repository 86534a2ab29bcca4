#include <benchmark/benchmark.h>

#include "weaklink/format.hpp"
#include "weaklink/keyspace.hpp"
#include "weaklink/oracle.hpp"
#include "weaklink/report.hpp"

namespace {

using namespace weaklink;

void BM_PassphraseKeyspace(benchmark::State& state) {
  const auto length = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(passphrase_keyspace(62, length));
}
BENCHMARK(BM_PassphraseKeyspace)->Arg(8)->Arg(16)->Arg(63);

void BM_CrackDuration256(benchmark::State& state) {
  const AttackModel attack = AttackModel::asic_farm();
  const BigCount ks = cipher_keyspace(256);
  for (auto _ : state) benchmark::DoNotOptimize(crack_duration(ks, attack));
}
BENCHMARK(BM_CrackDuration256);

void BM_FormatDuration(benchmark::State& state) {
  const ExactSeconds d = crack_duration(passphrase_keyspace(62, 63), AttackModel::asic_farm());
  for (auto _ : state) benchmark::DoNotOptimize(format_duration(d));
}
BENCHMARK(BM_FormatDuration);

void BM_MinCharsetSize(benchmark::State& state) {
  const auto budget = LifetimeBudget::life_expectancy();
  const auto attack = AttackModel::asic_farm();
  for (auto _ : state) benchmark::DoNotOptimize(min_charset_size(state.range(0), budget, attack));
}
BENCHMARK(BM_MinCharsetSize)->Arg(5)->Arg(63);

void BM_ExactMinCharsetSize(benchmark::State& state) {
  const auto budget = LifetimeBudget::life_expectancy();
  const auto attack = AttackModel::asic_farm();
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_charset_size(state.range(0), budget, attack));
}
BENCHMARK(BM_ExactMinCharsetSize)->Arg(1)->Arg(5)->Arg(63);

// Candidates per second of the odometer; feeds the local extrapolation.
void BM_EnumerateDigits(benchmark::State& state) {
  const CharacterSet digits = *find_charset("digits");
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_keyspace(digits, state.range(0)));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(passphrase_keyspace(10, state.range(0)).to_double()));
}
BENCHMARK(BM_EnumerateDigits)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RenderAllTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(render_tables({1, 2, 3}, OutputFormat::text));
}
BENCHMARK(BM_RenderAllTables)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
