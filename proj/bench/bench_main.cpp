#include "hsd/catalog.hpp"
#include "hsd/constructions.hpp"
#include "hsd/development.hpp"
#include "hsd/finite_field.hpp"
#include "hsd/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

const hsd::StarterSet& d_table()
{
    return std::get<hsd::StarterSet>(hsd::Catalog::embedded().get("D/4^22 34^1").content);
}

void BM_Verify(benchmark::State& state)
{
    auto d = hsd::develop(d_table());
    for (auto _ : state) benchmark::DoNotOptimize(hsd::verify_design(d).pass);
}
BENCHMARK(BM_Verify);

void BM_VerifySerial(benchmark::State& state)
{
    auto d = hsd::develop(d_table());
    for (auto _ : state) benchmark::DoNotOptimize(hsd::serial::verify_design(d).pass);
}
BENCHMARK(BM_VerifySerial);

void BM_Develop(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(hsd::develop(d_table()).blocks.size());
}
BENCHMARK(BM_Develop);

void BM_DevelopSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(hsd::serial::develop(d_table()).blocks.size());
}
BENCHMARK(BM_DevelopSerial);

void BM_Multiply(benchmark::State& state)
{
    auto d = hsd::Catalog::embedded().get("Ex2.2").design();
    auto ms = hsd::mols_prime_power(hsd::gf(static_cast<std::uint32_t>(state.range(0))), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hsd::multiply(d, ms.squares[0], ms.squares[1]).blocks.size());
}
BENCHMARK(BM_Multiply)->Arg(3)->Arg(8);

void BM_MultiplySerial(benchmark::State& state)
{
    auto d = hsd::Catalog::embedded().get("Ex2.2").design();
    auto ms = hsd::mols_prime_power(hsd::gf(static_cast<std::uint32_t>(state.range(0))), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hsd::serial::multiply(d, ms.squares[0], ms.squares[1]).blocks.size());
}
BENCHMARK(BM_MultiplySerial)->Arg(3)->Arg(8);

} // namespace

BENCHMARK_MAIN();
