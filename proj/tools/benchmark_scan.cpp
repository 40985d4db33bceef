// SPDX-License-Identifier: Apache-2.0
//
// Times the serial scan kernel against its OpenMP twin on the shipped
// one-robot-per-flow scenario and verifies the surfaces are bit-identical.
// Usage: benchmark_scan [samples_per_axis] [repeats]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "minsinr/scan.hpp"
#include "minsinr/scenario.hpp"

namespace {

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const int samples = argc > 1 ? std::atoi(argv[1]) : 401;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (samples < 1 || repeats < 1) {
        std::cerr << "usage: benchmark_scan [samples_per_axis >= 1] [repeats >= 1]\n";
        return 2;
    }

    const minsinr::Scenario scenario = minsinr::builtin_scenario("two_flow_scan");
    const minsinr::Topology topo = minsinr::make_topology(scenario);
    const minsinr::NetworkState base = minsinr::initial_state(scenario);
    const minsinr::NodeId robot_a = topo.flows()[0].robots.front();
    const minsinr::NodeId robot_b = topo.flows()[1].robots.front();

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << '\n';
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "grid: " << samples << "x" << samples << ", best of " << repeats
              << " runs\n";

    minsinr::ScanResult serial;
    minsinr::ScanResult parallel;
    const double t_serial = time_best_of(repeats, [&] {
        serial = minsinr::scan_surface_serial(base, scenario.channel, topo, robot_a,
                                              robot_b, samples);
    });
    const double t_parallel = time_best_of(repeats, [&] {
        parallel = minsinr::scan_surface_parallel(base, scenario.channel, topo, robot_a,
                                                  robot_b, samples);
    });

    const bool identical =
        serial.cost.size() == parallel.cost.size() &&
        std::memcmp(serial.cost.data(), parallel.cost.data(),
                    serial.cost.size() * sizeof(double)) == 0;

    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s\n";
    std::cout << "speedup:  " << t_serial / t_parallel << "x\n";
    std::cout << "surfaces bit-identical: " << (identical ? "yes" : "NO") << '\n';
    return identical ? 0 : 1;
}
