// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Each numbered check prints one [PASS]/[FAIL] line with
// the measured values next to the pinned tolerance; the process exits
// nonzero if any check fails. Everything runs from the shipped built-in
// scenarios, so this binary needs no input files.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "minsinr/annealer.hpp"
#include "minsinr/controller.hpp"
#include "minsinr/network.hpp"
#include "minsinr/runner.hpp"
#include "minsinr/scan.hpp"
#include "minsinr/scenario.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace minsinr;

namespace {

// pinned acceptance tolerances
constexpr double kLinkTargetTol = 0.10;     // per-link error against the published optima
constexpr double kLinkSpreadTol = 0.02;     // pairwise spread of the six final links
constexpr double kInitIndependenceTol = 0.05;
constexpr double kCentralizedDistributedTol = 0.02;
constexpr double kPeakHeightGap = 1e-3;     // relative height separating distinct maxima
constexpr double kSymmetryTol = 0.05;
constexpr double kOracleRelTol = 1e-12;
constexpr double kMetropolisTol = 0.01;

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", number, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++failures;
    }
}

std::string pct(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g%%", 100.0 * x);
    return buffer;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path work_dir(const std::string& leaf) {
    const fs::path dir = fs::temp_directory_path() / "minsinr_acceptance" / leaf;
    fs::create_directories(dir);
    return dir;
}

double spread(const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return (*hi - *lo) / *lo;
}

// 1. published-optimum reproduction: six link SINRs per noise row within
//    10% of the target and pairwise equal within 2%
std::vector<Table3Row> criterion_table3(const fs::path& out_dir) {
    Table3Options options;
    options.out_dir = out_dir;
    const std::vector<Table3Row> rows = run_table3(options);

    bool pass = rows.size() == 6;
    double worst_err = 0.0;
    double worst_spread = 0.0;
    for (const Table3Row& row : rows) {
        worst_err = std::max(worst_err, row.max_rel_error);
        worst_spread = std::max(worst_spread, row.pairwise_spread);
        pass = pass && row.max_rel_error <= kLinkTargetTol &&
               row.pairwise_spread <= kLinkSpreadTol;
    }
    report(1, "published-optimum reproduction", pass,
           "worst link error " + pct(worst_err) + " (tol " + pct(kLinkTargetTol) +
               "), worst pairwise spread " + pct(worst_spread) + " (tol " +
               pct(kLinkSpreadTol) + ")");
    return rows;
}

// 2. the solver lands on the same score from every standard starting layout
void criterion_init_independence() {
    const Scenario reference = builtin_scenario("two_flow_table3_noise1");
    std::vector<double> finals;
    for (const std::string& name : builtin_scenario_names()) {
        if (name.rfind("two_flow_table3_", 0) != 0) {
            continue;
        }
        Scenario s = builtin_scenario(name);
        s.channel = reference.channel; // same problem, six different starts
        const auto topo = make_topology(s);
        const auto result =
            anneal(initial_state(s), s.annealing, s.channel, topo, s.seed);
        finals.push_back(result.best_cost);
    }
    const bool pass = finals.size() == 6 && spread(finals) <= kInitIndependenceTol;
    report(2, "initial-condition independence", pass,
           "6 starts, final costs spread " + pct(spread(finals)) + " (tol " +
               pct(kInitIndependenceTol) + ")");
}

// 3. the distributed controller converges to the centralized score
void criterion_centralized_vs_distributed() {
    const Scenario s = builtin_scenario("two_flow_table3_noise1");
    const auto topo = make_topology(s);
    const auto initial = initial_state(s);

    const auto central = anneal(initial, s.annealing, s.channel, topo, s.seed);
    const auto dist =
        run_distributed(initial, s.channel, s.controller, make_mobility(s), topo, s.seed);
    const double gap =
        std::fabs(dist.trace.back().global - central.best_cost) / central.best_cost;
    const bool pass = dist.converged && gap <= kCentralizedDistributedTol;
    report(3, "centralized/distributed agreement", pass,
           std::string(dist.converged ? "converged" : "did not converge") + " in " +
               std::to_string(dist.iterations) + " iterations, gap " + pct(gap) +
               " (tol " + pct(kCentralizedDistributedTol) + ")");
}

// 4. the placement surface is genuinely multi-peaked
void criterion_multipeak_surface() {
    const Scenario s = builtin_scenario("two_flow_scan");
    const auto topo = make_topology(s);
    const auto surface =
        scan_surface_parallel(initial_state(s), s.channel, topo, 2, 5, 101);
    const auto maxima = strict_interior_maxima(surface);

    double lo = 0.0;
    double hi = 0.0;
    if (!maxima.empty()) {
        lo = surface.cost[maxima[0]];
        hi = lo;
        for (size_t idx : maxima) {
            lo = std::min(lo, surface.cost[idx]);
            hi = std::max(hi, surface.cost[idx]);
        }
    }
    const bool distinct = !maxima.empty() && (hi - lo) / hi > kPeakHeightGap;
    const bool pass = maxima.size() >= 2 && distinct;
    report(4, "multi-peaked cost surface", pass,
           std::to_string(maxima.size()) + " strict interior maxima on a 101x101 grid, " +
               "height range " + pct(maxima.empty() ? 0.0 : (hi - lo) / hi) +
               " (needs >= 2 maxima differing by > " + pct(kPeakHeightGap) + ")");
}

// 5. symmetric four-flow layout settles into symmetric per-flow costs
void criterion_four_flow_symmetry() {
    const Scenario s = builtin_scenario("four_flow_static");
    const auto topo = make_topology(s);
    const auto result = run_distributed(initial_state(s), s.channel, s.controller,
                                        make_mobility(s), topo, s.seed);
    bool pass = result.converged;
    double gap12 = 1.0;
    double gap34 = 1.0;
    if (result.converged) {
        const auto& costs = result.trace.back().flow_costs;
        gap12 = std::fabs(costs[0] - costs[1]) / std::max(costs[0], costs[1]);
        gap34 = std::fabs(costs[2] - costs[3]) / std::max(costs[2], costs[3]);
        pass = gap12 <= kSymmetryTol && gap34 <= kSymmetryTol;
    }
    report(5, "four-flow symmetry", pass,
           std::string(result.converged ? "converged" : "did not converge") + " in " +
               std::to_string(result.iterations) + " iterations, flow1/flow2 gap " +
               pct(gap12) + ", flow3/flow4 gap " + pct(gap34) + " (tol " +
               pct(kSymmetryTol) + ")");
}

// 6. walking endpoints re-arm the controller after it has settled
void criterion_mobility_tracking() {
    const Scenario s = builtin_scenario("four_flow_mobile");
    const auto topo = make_topology(s);
    const auto result = run_distributed(initial_state(s), s.channel, s.controller,
                                        make_mobility(s), topo, s.seed);

    // find a settled iteration (no robot moved) that a later iteration undoes
    long pause = -1;
    long resume = -1;
    for (size_t k = 0; k < result.trace.size(); ++k) {
        if (pause < 0 && !result.trace[k].robot_moved &&
            result.trace[k].endpoint_displacement > s.controller.change_threshold) {
            pause = static_cast<long>(k);
        } else if (pause >= 0 && result.trace[k].robot_moved) {
            resume = static_cast<long>(k);
            break;
        }
    }
    bool costs_change = false;
    if (resume > 0) {
        for (size_t k = static_cast<size_t>(resume); k < result.trace.size(); ++k) {
            costs_change =
                costs_change || result.trace[k].flow_costs != result.trace[k - 1].flow_costs;
        }
    }
    const bool pass = pause >= 0 && resume > pause && costs_change;
    report(6, "mobility tracking", pass,
           pass ? "robots paused at iteration " + std::to_string(pause + 1) +
                      ", endpoint motion re-armed them at iteration " +
                      std::to_string(resume + 1) + ", flow costs moved afterwards"
                : "no pause/resume cycle found in " +
                      std::to_string(result.trace.size()) + " iterations");
}

// 7. the SINR pipeline agrees with an independent brute-force evaluation
void criterion_oracle_equivalence() {
    Rng rng(424242);
    double worst = 0.0;
    long links_checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = testutil::random_case(rng);
        const Topology topo(c.flows);
        const auto eval = evaluate_network(c.state, c.params, topo);
        for (size_t f = 0; f < c.oracle_flows.size(); ++f) {
            const auto [first, last] = topo.flow_link_range(static_cast<int>(f) + 1);
            for (size_t ordinal = first; ordinal < last; ++ordinal) {
                const int j = static_cast<int>(ordinal - first) + 1;
                const double want =
                    oracle::link_sinr(c.oracle_flows, c.oracle_positions, f, j, c.oracle_params);
                worst = std::max(worst, std::fabs(eval.link_sinrs[ordinal] - want) / want);
                ++links_checked;
            }
        }
    }

    // interference membership on the standard two-flow sample, exact
    const auto topo = testutil::two_flow_topology();
    const std::vector<std::vector<NodeId>> expected = {
        {3, 5, 6, 7}, {1, 5, 6, 7}, {1, 2, 5, 6, 7},
        {1, 2, 3, 7}, {1, 2, 3, 5}, {1, 2, 3, 5, 6},
    };
    bool sets_match = true;
    for (size_t i = 0; i < expected.size(); ++i) {
        sets_match = sets_match && topo.link_interferers(i) == expected[i];
    }

    const bool pass = worst <= kOracleRelTol && sets_match && links_checked > 2000;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%ld links over 1000 random networks, worst relative error %.3g "
                  "(tol %.0e), interferer sets %s",
                  links_checked, worst, kOracleRelTol, sets_match ? "exact" : "WRONG");
    report(7, "independent oracle equivalence", pass, detail);
}

// 8. acceptance of a one-temperature worsening happens at rate 1/e
void criterion_metropolis_statistics() {
    Rng rng(20260816);
    const int trials = 100000;
    int accepted = 0;
    for (int i = 0; i < trials; ++i) {
        if (metropolis_accept(2.0, 1.0, 1.0, rng)) {
            ++accepted;
        }
    }
    const double freq = static_cast<double>(accepted) / trials;
    const double gap = std::fabs(freq - std::exp(-1.0));
    const bool pass = gap <= kMetropolisTol;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "frequency %.4f vs 1/e = %.4f, gap %.4f (tol %.2f) over %d trials",
                  freq, std::exp(-1.0), gap, kMetropolisTol, trials);
    report(8, "acceptance-rule statistics", pass, detail);
}

// 9. every command, re-run with its seed, emits byte-identical data files
void criterion_determinism(const fs::path& table3_a) {
    const fs::path dir_a = work_dir("determinism_a");
    const fs::path dir_b = work_dir("determinism_b");

    const Scenario central = builtin_scenario("two_flow_table3_noise1");
    SimulateOptions copt;
    copt.mode = RunMode::Centralized;
    copt.iterations = 4000;
    copt.out_dir = dir_a;
    (void)run_simulate(central, copt);
    copt.out_dir = dir_b;
    (void)run_simulate(central, copt);
    const bool central_same =
        slurp(dir_a / "two_flow_table3_noise1_centralized_trace.csv") ==
        slurp(dir_b / "two_flow_table3_noise1_centralized_trace.csv");

    const Scenario mobile = builtin_scenario("four_flow_mobile");
    SimulateOptions dopt;
    dopt.mode = RunMode::Distributed;
    dopt.iterations = 120;
    dopt.out_dir = dir_a;
    (void)run_simulate(mobile, dopt);
    dopt.out_dir = dir_b;
    (void)run_simulate(mobile, dopt);
    const bool distributed_same =
        slurp(dir_a / "four_flow_mobile_distributed_trace.csv") ==
        slurp(dir_b / "four_flow_mobile_distributed_trace.csv");

    const Scenario scan = builtin_scenario("two_flow_scan");
    ScanOptions sopt;
    sopt.robot_a = 2;
    sopt.robot_b = 5;
    sopt.samples = 101;
    sopt.out_dir = dir_a;
    (void)run_scan(scan, sopt);
    sopt.out_dir = dir_b;
    (void)run_scan(scan, sopt);
    const bool scan_same =
        slurp(dir_a / "two_flow_scan_scan.csv") == slurp(dir_b / "two_flow_scan_scan.csv");

    Table3Options topt;
    topt.out_dir = dir_b;
    (void)run_table3(topt);
    const bool table_same = slurp(table3_a / "table3.txt") == slurp(dir_b / "table3.txt");

    const bool pass = central_same && distributed_same && scan_same && table_same;
    report(9, "byte-identical reruns", pass,
           std::string("centralized trace ") + (central_same ? "ok" : "DIFFERS") +
               ", distributed trace " + (distributed_same ? "ok" : "DIFFERS") +
               ", scan surface " + (scan_same ? "ok" : "DIFFERS") + ", summary table " +
               (table_same ? "ok" : "DIFFERS"));
}

} // namespace

int main() {
    const fs::path table3_dir = work_dir("table3");

    const auto rows = criterion_table3(table3_dir);
    (void)rows;
    criterion_init_independence();
    criterion_centralized_vs_distributed();
    criterion_multipeak_surface();
    criterion_four_flow_symmetry();
    criterion_mobility_tracking();
    criterion_oracle_equivalence();
    criterion_metropolis_statistics();
    criterion_determinism(table3_dir);

    std::error_code ec;
    fs::remove_all(fs::temp_directory_path() / "minsinr_acceptance", ec);

    if (failures == 0) {
        std::printf("all 9 acceptance checks passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", failures);
    return 1;
}
