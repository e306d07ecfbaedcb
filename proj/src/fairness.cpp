#include "cwlearn/fairness.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "cwlearn/kw.hpp"

namespace cwlearn {

double utility(const std::vector<double>& throughputs_bps, double floor_bps,
               bool* clamped) {
    if (clamped) *clamped = false;
    double sum = 0.0;
    for (double s : throughputs_bps) {
        if (s < floor_bps) {
            s = floor_bps;
            if (clamped) *clamped = true;
        }
        sum += std::log(s);
    }
    return sum;
}

namespace {

struct Objective {
    const std::vector<StationParams>& stations;
    const MacTiming& timing;

    double operator()(const std::vector<double>& log_y) const {
        AttemptVector attempts;
        attempts.lambda.resize(log_y.size());
        for (size_t i = 0; i < log_y.size(); ++i) {
            const double odds = std::exp(log_y[i]);
            attempts.lambda[i] = odds / (1.0 + odds);
        }
        const auto out = evaluate_eq2(stations, attempts, timing);
        double sum = 0.0;
        for (double s : out.throughput_bps) sum += std::log(s);
        return sum;
    }
};

struct AscentResult {
    std::vector<double> x;
    double value = 0.0;
    double residual = 0.0;
    bool converged = false;
};

AscentResult projected_ascent(const Objective& f, std::vector<double> x, double lo,
                              double hi, const SolverOptions& opt) {
    const size_t n = x.size();
    std::vector<double> grad(n);
    double fx = f(x);

    AscentResult res;
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        for (size_t i = 0; i < n; ++i) {
            const double save = x[i];
            x[i] = project(save + opt.fd_step, lo, hi);
            const double fp = f(x);
            x[i] = project(save - opt.fd_step, lo, hi);
            const double fm = f(x);
            x[i] = save;
            // Denominator follows the actual probe spread so the estimate
            // stays central even when a bound truncates one side.
            const double spread = (project(save + opt.fd_step, lo, hi) -
                                   project(save - opt.fd_step, lo, hi));
            grad[i] = spread > 0.0 ? (fp - fm) / spread : 0.0;
        }

        // Residual of a unit projected-gradient step; zero at a boundary
        // optimum where the raw gradient points outward.
        double residual = 0.0;
        for (size_t i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(project(x[i] + grad[i], lo, hi) - x[i]));
        }
        res.residual = residual;
        if (residual < opt.tolerance) {
            res.converged = true;
            break;
        }

        // Backtracking line search on the projected step.
        double step = 1.0;
        bool moved = false;
        while (step > 1e-14) {
            std::vector<double> trial(n);
            double dir_dot = 0.0;
            for (size_t i = 0; i < n; ++i) {
                trial[i] = project(x[i] + step * grad[i], lo, hi);
                dir_dot += grad[i] * (trial[i] - x[i]);
            }
            const double ft = f(trial);
            if (ft >= fx + 1e-4 * dir_dot) {
                x = std::move(trial);
                fx = ft;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;  // no ascent direction left at this scale
    }
    res.x = std::move(x);
    res.value = fx;
    return res;
}

}  // namespace

FairSolution solve_proportional_fair(const std::vector<StationParams>& stations,
                                     const MacTiming& timing,
                                     const SolverOptions& options) {
    if (stations.empty()) {
        throw std::invalid_argument("solve_proportional_fair: empty station list");
    }
    const size_t n = stations.size();
    const double lo = cw_to_logy(options.cw_max);
    const double hi = cw_to_logy(options.cw_min);

    Objective f{stations, timing};

    // Deterministic multi-start: box fractions, a staggered spread, and two
    // seeded pseudo-random points.
    std::vector<std::vector<double>> starts;
    for (double frac : {0.5, 0.25, 0.75}) {
        starts.emplace_back(n, lo + frac * (hi - lo));
    }
    {
        std::vector<double> spread(n);
        for (size_t i = 0; i < n; ++i) {
            spread[i] = lo + (hi - lo) * (static_cast<double>(i) + 1.0) /
                                 (static_cast<double>(n) + 1.0);
        }
        starts.push_back(std::move(spread));
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    while (starts.size() < static_cast<size_t>(std::max(options.starts, 1))) {
        std::vector<double> r(n);
        for (size_t i = 0; i < n; ++i) r[i] = lo + unit(rng) * (hi - lo);
        starts.push_back(std::move(r));
    }

    AscentResult best;
    bool have_best = false;
    for (auto& start : starts) {
        auto res = projected_ascent(f, start, lo, hi, options);
        if (!have_best || res.value > best.value) {
            best = std::move(res);
            have_best = true;
        }
    }

    FairSolution sol;
    sol.log_y = best.x;
    sol.utility = best.value;
    sol.stationarity_residual = best.residual;
    sol.converged = best.converged;
    sol.cw.resize(n);
    AttemptVector attempts;
    attempts.lambda.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const double odds = std::exp(best.x[i]);
        attempts.lambda[i] = odds / (1.0 + odds);
        sol.cw[i] = cw_from_lambda(attempts.lambda[i]);
    }
    const auto out = evaluate_eq2(stations, attempts, timing);
    sol.airtime = out.airtime_share;
    sol.throughput_bps = out.throughput_bps;
    return sol;
}

GridResult grid_oracle(
    const std::vector<StationParams>& stations, const MacTiming& timing,
    const std::vector<int>& cw_grid,
    const std::function<double(const std::vector<int>&)>& evaluator,
    const std::function<std::vector<double>(const std::vector<int>&)>& airtime_eval) {
    const size_t n = stations.size();
    if (n == 0 || n > 4) {
        throw std::invalid_argument("grid_oracle: supports 1 to 4 stations");
    }
    if (cw_grid.empty()) {
        throw std::invalid_argument("grid_oracle: empty grid");
    }
    std::vector<int> grid = cw_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    double points = 1.0;
    for (size_t i = 0; i < n; ++i) points *= static_cast<double>(grid.size());
    if (points > 1e6) {
        throw std::invalid_argument("grid_oracle: grid exceeds 1e6 points");
    }

    auto model_utility = [&](const std::vector<int>& cw) {
        AttemptVector attempts;
        attempts.lambda.resize(n);
        for (size_t i = 0; i < n; ++i) attempts.lambda[i] = lambda_from_cw(cw[i]);
        const auto out = evaluate_eq2(stations, attempts, timing);
        return utility(out.throughput_bps);
    };
    auto model_airtime = [&](const std::vector<int>& cw) {
        AttemptVector attempts;
        attempts.lambda.resize(n);
        for (size_t i = 0; i < n; ++i) attempts.lambda[i] = lambda_from_cw(cw[i]);
        return airtime_shares(stations, attempts, timing);
    };

    const auto& score = evaluator ? evaluator
                                  : std::function<double(const std::vector<int>&)>(model_utility);

    GridResult best;
    bool have_best = false;
    std::vector<size_t> idx(n, 0);
    std::vector<int> cw(n);
    while (true) {
        for (size_t i = 0; i < n; ++i) cw[i] = grid[idx[i]];
        const double u = score(cw);
        if (!have_best || u > best.utility) {
            best.cw = cw;
            best.utility = u;
            have_best = true;
        }
        // lexicographic advance; first-seen wins ties
        size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < grid.size()) break;
            idx[pos] = 0;
            if (pos == 0) {
                best.airtime = airtime_eval ? airtime_eval(best.cw) : model_airtime(best.cw);
                return best;
            }
        }
    }
}

}  // namespace cwlearn
