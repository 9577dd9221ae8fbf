// Serial reference against the OpenMP kernels: quadrature panel sums and the
// oracle's sparse matrix-vector product.

#include <benchmark/benchmark.h>

#include "cqed/oracle.hpp"
#include "cqed/quadrature.hpp"
#include "cqed/two_qubit_single.hpp"

namespace {

using namespace cqed;

SystemParams bench_params() {
    SystemParams p;
    p.g12 = 5.0;
    p.gamma2 = 10.0;
    return p;
}

std::vector<Panel> bench_panels(int level) {
    const auto p = bench_params();
    const auto spec = single_spec(p, 10.0, {});
    return make_panels(spec, auto_half_width(spec), level);
}

void panel_sum_bench(benchmark::State& st, Reduction mode) {
    const auto p = bench_params();
    const auto panels = bench_panels(static_cast<int>(st.range(0)));
    const Integrand1D f = [&](double w) { return p_se_resolved(p, 10.0, w); };
    for (auto _ : st) benchmark::DoNotOptimize(panel_sum(f, panels, mode));
    st.counters["nodes"] = static_cast<double>(16 * panels.size());
}

void BM_panel_sum_serial(benchmark::State& st) { panel_sum_bench(st, Reduction::serial); }
void BM_panel_sum_parallel(benchmark::State& st) { panel_sum_bench(st, Reduction::parallel); }

void matvec_bench(benchmark::State& st, MatvecMode mode) {
    OracleConfig cfg;
    cfg.window_scale = static_cast<double>(st.range(0));
    const auto sys = build_oracle_system(build_network(NetworkKind::two_qubit_1ex), bench_params(), cfg);
    std::vector<cplx> x(sys.h.n, cplx(1.0, 0.5)), y;
    for (auto _ : st) {
        csr_matvec(sys.h, x, y, mode);
        benchmark::DoNotOptimize(y.data());
    }
    st.counters["rows"] = static_cast<double>(sys.h.n);
}

void BM_matvec_serial(benchmark::State& st) { matvec_bench(st, MatvecMode::serial); }
void BM_matvec_parallel(benchmark::State& st) { matvec_bench(st, MatvecMode::parallel); }

} // namespace

BENCHMARK(BM_panel_sum_serial)->Arg(0)->Arg(2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_panel_sum_parallel)->Arg(0)->Arg(2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matvec_serial)->Arg(25)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matvec_parallel)->Arg(25)->Arg(100)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
