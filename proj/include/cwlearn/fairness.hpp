#ifndef CWLEARN_FAIRNESS_HPP
#define CWLEARN_FAIRNESS_HPP

#include <functional>
#include <vector>

#include "cwlearn/analytic.hpp"

namespace cwlearn {

// Proportional-fair optimum for a set of saturated stations.
struct FairSolution {
    std::vector<double> log_y;      // optimal per-station log-odds variable
    std::vector<double> cw;         // same point as a real-valued CW
    std::vector<double> airtime;    // airtime share at the optimum
    std::vector<double> throughput_bps;
    double utility = 0.0;           // sum of log throughputs
    double stationarity_residual = 0.0;  // sup-norm of the projected gradient step
    bool converged = false;
};

struct SolverOptions {
    double cw_min = 15.0;
    double cw_max = 1023.0;
    double fd_step = 1e-5;          // central-difference step in log-odds
    double tolerance = 1e-6;
    int max_iterations = 10000;
    int starts = 6;
};

// Sum of natural-log throughputs. Non-positive entries are clamped to
// floor_bps (and reported through *clamped) instead of producing -inf.
double utility(const std::vector<double>& throughputs_bps, double floor_bps = 1000.0,
               bool* clamped = nullptr);

// Projected gradient ascent over the per-station log-odds variables with the
// model as objective. Runs from several deterministic starts and returns the
// best; a result that never met the tolerance comes back with
// converged = false.
FairSolution solve_proportional_fair(const std::vector<StationParams>& stations,
                                     const MacTiming& timing,
                                     const SolverOptions& options = {});

struct GridResult {
    std::vector<int> cw;
    double utility = 0.0;
    std::vector<double> airtime;
};

// Exhaustive utility maximization over the product grid cw_grid^N. Ties keep
// the lexicographically smallest CW vector. The default evaluator scores a
// point with the analytic model; multi-domain setups pass a simulation-backed
// evaluator instead. Refuses grids above one million points.
GridResult grid_oracle(
    const std::vector<StationParams>& stations, const MacTiming& timing,
    const std::vector<int>& cw_grid,
    const std::function<double(const std::vector<int>&)>& evaluator = {},
    const std::function<std::vector<double>(const std::vector<int>&)>& airtime_eval = {});

}  // namespace cwlearn

#endif
