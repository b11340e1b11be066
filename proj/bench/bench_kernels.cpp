// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "cohfun/matrix.hpp"
#include "cohfun/parallel.hpp"
#include "cohfun/random.hpp"
#include "cohfun/verify.hpp"

using namespace cohfun;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(BaseRing::integers(), r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Int(static_cast<long>(rng.uniform(-1000, 1000))));
    return m;
}

template <Matrix (*Kernel)(const Matrix&, const Matrix&)>
void BM_multiply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

void BM_check(benchmark::State& state, Execution mode) {
    VerifyOptions o;
    o.cases = static_cast<std::size_t>(state.range(0));
    o.execution = mode;
    const TheoremCheck& c = find_check("four-term");
    for (auto _ : state) benchmark::DoNotOptimize(run_check(c, o).pass);
}

}  // namespace

BENCHMARK(BM_multiply<kernels::multiply_serial>)->Name("multiply_serial")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_multiply<kernels::multiply_parallel>)->Name("multiply_parallel")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK_CAPTURE(BM_check, serial, Execution::Serial)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_check, parallel, Execution::Parallel)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
