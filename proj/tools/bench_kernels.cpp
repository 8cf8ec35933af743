// Times the data-parallel kernels under the serial reference policy and the
// OpenMP policy and reports the speedup. Also asserts the two agree bitwise,
// which the counter-based draws and fixed-order merges guarantee.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "screenlab/design.hpp"
#include "screenlab/sim.hpp"
#include "screenlab/valuation.hpp"

using namespace screenlab;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-22s serial %9.1f ms   omp %9.1f ms   speedup %5.2fx   bitwise %s\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "equal" : "DIFFERENT");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP with %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both policies run serially\n");
#endif

    const ModelParams params(0.24, 0.24);
    const auto uniform = TypeDistribution::uniform();
    const auto eq = solve_equilibrium(params, SignalNoise(0.25, 0.25));

    {
        std::vector<SignMapCell> a, b;
        const double ts = time_ms([&] { a = sign_map(params, uniform, 40, Exec::serial); });
        const double tp = time_ms([&] { b = sign_map(params, uniform, 40, Exec::parallel); });
        bool same = a.size() == b.size() &&
                    std::memcmp(a.data(), b.data(), a.size() * sizeof(SignMapCell)) == 0;
        report("sign_map 40x40", ts, tp, same);
    }
    {
        SimConfig config;
        config.trials = 2000000;
        config.seed = 42;
        config.theta_grid_n = 200;
        SimOutcome a, b;
        const double ts = time_ms([&] { a = simulate_rents(eq, uniform, config, Exec::serial); });
        const double tp = time_ms([&] { b = simulate_rents(eq, uniform, config, Exec::parallel); });
        report("simulate_rents 2e6", ts, tp, a.empirical_rent == b.empirical_rent &&
                                                 a.rent_se == b.rent_se);
    }
    {
        SimConfig config;
        config.trials = 2000000;
        config.seed = 42;
        SimOutcome a, b;
        const double ts = time_ms([&] { a = simulate_value(eq, uniform, config, Exec::serial); });
        const double tp = time_ms([&] { b = simulate_value(eq, uniform, config, Exec::parallel); });
        report("simulate_value 2e6", ts, tp, a.empirical_value == b.empirical_value &&
                                                 a.value_se == b.value_se);
    }
    {
        SimConfig config;
        config.theta_grid_n = 2048;
        config.report_grid_n = 2048;
        SimOutcome a, b;
        const double ts = time_ms([&] { a = best_response_check(eq, config, Exec::serial); });
        const double tp = time_ms([&] { b = best_response_check(eq, config, Exec::parallel); });
        report("best_response 2048^2", ts, tp, a.empirical_rent == b.empirical_rent &&
                                                   a.ic_violation == b.ic_violation);
    }
    {
        DesignProblem problem(ModelParams(0.15, 0.15), TypeDistribution::beta(3.0, 1.0), 0.01);
        std::vector<ProfilePoint> a, b;
        const double ts = time_ms([&] { a = value_profile(problem, 400, Exec::serial); });
        const double tp = time_ms([&] { b = value_profile(problem, 400, Exec::parallel); });
        bool same = a.size() == b.size() &&
                    std::memcmp(a.data(), b.data(), a.size() * sizeof(ProfilePoint)) == 0;
        report("value_profile 400", ts, tp, same);
    }
    return 0;
}
