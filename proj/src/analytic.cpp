#include "cwlearn/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cwlearn {

StationParams StationParams::make(int id, const FrameSpec& frame, double p_error,
                                  const MacTiming& timing) {
    StationParams p;
    p.id = id;
    p.frame = frame;
    p.p_error = p_error;
    p.t_success = success_duration(frame, timing);
    p.t_failure = failure_duration(frame, timing);
    p.validate();
    return p;
}

void StationParams::validate() const {
    frame.validate();
    if (p_error < 0.0 || p_error > 1.0) {
        throw std::invalid_argument("StationParams: p_error must lie in [0,1]");
    }
    if (t_success <= 0.0 || t_failure <= 0.0) {
        throw std::invalid_argument("StationParams: durations must be positive");
    }
}

double lambda_from_cw(double cw) {
    if (cw < 1.0) {
        throw std::invalid_argument("lambda_from_cw: cw must be >= 1");
    }
    return 2.0 / (cw + 1.0);
}

double cw_from_lambda(double lambda) {
    if (lambda <= 0.0 || lambda > 1.0) {
        throw std::invalid_argument("cw_from_lambda: lambda must lie in (0,1]");
    }
    return (2.0 - lambda) / lambda;
}

double transform_y(double lambda) {
    if (lambda <= 0.0 || lambda >= 1.0) {
        throw std::invalid_argument("transform_y: lambda must lie strictly in (0,1)");
    }
    return lambda / (1.0 - lambda);
}

double inverse_transform_y(double y) {
    if (y <= 0.0) {
        throw std::invalid_argument("inverse_transform_y: y must be positive");
    }
    return y / (1.0 + y);
}

namespace {

void check_inputs(const std::vector<StationParams>& stations,
                  const AttemptVector& attempts, const MacTiming& timing) {
    timing.validate();
    if (stations.empty()) {
        throw std::invalid_argument("model: station list must not be empty");
    }
    if (attempts.lambda.size() != stations.size()) {
        throw std::invalid_argument("model: attempt vector length mismatch");
    }
    for (const auto& s : stations) s.validate();
    for (double l : attempts.lambda) {
        if (!(l > 0.0 && l < 1.0)) {
            throw std::invalid_argument("model: every lambda must lie strictly in (0,1)");
        }
    }
}

// Stations ordered by ascending successful-transmission duration, ties keeping
// input order. The last transmitter in this order inside any busy slot is the
// one with the longest frame, so charging the slot to the highest-ranked
// participant counts each collision exactly once at its dominant duration.
std::vector<size_t> duration_order(const std::vector<StationParams>& stations) {
    std::vector<size_t> order(stations.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return stations[a].t_success < stations[b].t_success;
    });
    return order;
}

struct EventProbs {
    std::vector<double> p_collision;
    std::vector<double> p_fail;
    std::vector<double> p_success;
    std::vector<double> p_unsuccess;
    double idle = 1.0;
    double success_total = 0.0;
    double unsuccess_total = 0.0;
};

EventProbs event_probabilities(const std::vector<StationParams>& stations,
                               const AttemptVector& attempts,
                               const std::vector<size_t>& order) {
    const size_t n = stations.size();
    const auto& lam = attempts.lambda;
    EventProbs e;
    e.p_collision.resize(n);
    e.p_fail.resize(n);
    e.p_success.resize(n);
    e.p_unsuccess.resize(n);

    for (size_t i = 0; i < n; ++i) {
        double others_quiet = 1.0;
        for (size_t j = 0; j < n; ++j) {
            if (j != i) others_quiet *= 1.0 - lam[j];
        }
        e.p_collision[i] = 1.0 - others_quiet;
        e.p_fail[i] = 1.0 - (1.0 - stations[i].p_error) * (1.0 - e.p_collision[i]);
        e.p_success[i] = lam[i] * (1.0 - e.p_fail[i]);
        e.idle *= 1.0 - lam[i];
        e.success_total += e.p_success[i];
    }

    // Unsuccessful-slot probability charged to the duration-dominant
    // participant: either a lone transmission hit by a channel error, or a
    // collision in which no longer-framed station takes part.
    for (size_t k = 0; k < n; ++k) {
        const size_t s = order[k];
        double shorter_quiet = 1.0;  // stations ranked before s stay silent
        for (size_t m = 0; m < k; ++m) shorter_quiet *= 1.0 - lam[order[m]];
        double longer_quiet = 1.0;   // stations ranked after s stay silent
        for (size_t m = k + 1; m < n; ++m) longer_quiet *= 1.0 - lam[order[m]];
        double others_quiet = shorter_quiet * longer_quiet;
        e.p_unsuccess[s] = lam[s] * stations[s].p_error * others_quiet +
                           lam[s] * (1.0 - shorter_quiet) * longer_quiet;
    }

    e.unsuccess_total = std::max(0.0, 1.0 - e.idle - e.success_total);
    return e;
}

ModelOutput assemble(const std::vector<StationParams>& stations,
                     const AttemptVector& attempts, const MacTiming& timing,
                     const EventProbs& e, const std::vector<size_t>& order,
                     double expected_slot) {
    const size_t n = stations.size();
    const auto& lam = attempts.lambda;
    ModelOutput out;
    out.p_collision = e.p_collision;
    out.p_fail = e.p_fail;
    out.p_success = e.p_success;
    out.p_unsuccess = e.p_unsuccess;
    out.idle_prob = e.idle;
    out.success_prob = e.success_total;
    out.unsuccess_prob = e.unsuccess_total;
    out.scaled_cycle_time = expected_slot / e.idle;

    out.airtime_share.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.airtime_share[i] = lam[i] *
                               ((1.0 - e.p_fail[i]) * stations[i].t_success +
                                e.p_fail[i] * stations[i].t_failure) /
                               expected_slot;
    }

    double ts_mean = 0.0;
    double tu_mean = 0.0;
    for (size_t k = 0; k < n; ++k) {
        const size_t s = order[k];
        ts_mean += e.p_success[s] * stations[s].t_success;
        tu_mean += e.p_unsuccess[s] * stations[s].t_success;
    }
    out.t_success_mean = e.success_total > 0.0 ? ts_mean / e.success_total : 0.0;
    out.t_unsuccess_mean = e.unsuccess_total > 1e-15 ? tu_mean / e.unsuccess_total : 0.0;
    (void)timing;
    return out;
}

}  // namespace

ModelOutput evaluate_eq1(const std::vector<StationParams>& stations,
                         const AttemptVector& attempts, const MacTiming& timing) {
    check_inputs(stations, attempts, timing);
    const size_t n = stations.size();
    const auto order = duration_order(stations);
    const auto e = event_probabilities(stations, attempts, order);

    // Expected slot length from event probabilities: idle slots, then every
    // busy slot charged once at its dominant participant's full duration.
    double expected_slot = e.idle * timing.slot_time;
    for (size_t i = 0; i < n; ++i) {
        expected_slot += (e.p_success[i] + e.p_unsuccess[i]) * stations[i].t_success;
    }

    ModelOutput out = assemble(stations, attempts, timing, e, order, expected_slot);
    out.throughput_bps.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.throughput_bps[i] = e.p_success[i] * stations[i].frame.payload_bits / expected_slot;
    }
    return out;
}

ModelOutput evaluate_eq2(const std::vector<StationParams>& stations,
                         const AttemptVector& attempts, const MacTiming& timing) {
    check_inputs(stations, attempts, timing);
    const size_t n = stations.size();
    const auto order = duration_order(stations);
    const auto e = event_probabilities(stations, attempts, order);

    std::vector<double> odds(n);
    for (size_t i = 0; i < n; ++i) odds[i] = transform_y(attempts.lambda[i]);

    double cycle = timing.slot_time;  // the Y quantity
    double prefix = 1.0;              // product of (1 + y) over shorter frames
    for (size_t k = 0; k < n; ++k) {
        const size_t s = order[k];
        cycle += odds[s] * stations[s].t_success * prefix;
        prefix *= 1.0 + odds[s];
    }

    ModelOutput out = assemble(stations, attempts, timing, e, order, e.idle * cycle);
    out.scaled_cycle_time = cycle;
    out.throughput_bps.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.throughput_bps[i] =
            (1.0 - stations[i].p_error) * odds[i] * stations[i].frame.payload_bits / cycle;
    }
    return out;
}

std::vector<double> airtime_shares(const std::vector<StationParams>& stations,
                                   const AttemptVector& attempts,
                                   const MacTiming& timing) {
    return evaluate_eq2(stations, attempts, timing).airtime_share;
}

}  // namespace cwlearn
