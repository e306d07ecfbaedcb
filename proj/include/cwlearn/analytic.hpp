#ifndef CWLEARN_ANALYTIC_HPP
#define CWLEARN_ANALYTIC_HPP

#include <vector>

#include "cwlearn/timing.hpp"

namespace cwlearn {

// Transmission parameters of one saturated station as the closed-form model
// sees it.
struct StationParams {
    int id = 0;
    FrameSpec frame;
    double p_error = 0.0;       // per-frame channel error probability
    double t_success = 0.0;     // seconds
    double t_failure = 0.0;     // seconds

    static StationParams make(int id, const FrameSpec& frame, double p_error,
                              const MacTiming& timing);
    void validate() const;
};

// Per-slot transmission probabilities, one per station, each strictly in (0,1).
struct AttemptVector {
    std::vector<double> lambda;
};

// Everything the saturation model produces for one attempt vector. Per-station
// vectors are in the caller's station order.
//
// Busy-slot accounting: every busy slot, successful or not, is charged at the
// full slot duration of its longest participant (data, SIFS, ACK slot, DIFS).
// A failed exchange costs the same wall-clock time as a successful one because
// the transmitter runs down its ACK timeout while overhearers defer for EIFS,
// both of which span exactly the missing SIFS+ACK. t_unsuccess_mean reports
// the expected length of an unsuccessful busy slot under that convention.
struct ModelOutput {
    std::vector<double> throughput_bps;
    std::vector<double> airtime_share;
    std::vector<double> p_collision;     // some other station overlaps
    std::vector<double> p_fail;          // collision or channel error
    std::vector<double> p_success;       // station transmits and delivers
    std::vector<double> p_unsuccess;     // station is charged a failed slot
    double idle_prob = 0.0;              // slot is empty
    double success_prob = 0.0;           // slot carries one delivered frame
    double unsuccess_prob = 0.0;         // slot is busy but wasted
    double t_success_mean = 0.0;         // expected successful-slot length
    double t_unsuccess_mean = 0.0;       // expected unsuccessful-slot length
    double scaled_cycle_time = 0.0;      // expected slot length / idle_prob
};

// Mean per-slot attempt probability of a station that redraws its back-off
// counter uniformly from {0,...,cw-1} after every transmission.
double lambda_from_cw(double cw);

// Real-valued contention window reproducing a given attempt probability.
double cw_from_lambda(double lambda);

// Odds transform used throughout the model: y = lambda / (1 - lambda).
double transform_y(double lambda);
double inverse_transform_y(double y);

// Throughput model evaluated in the probability domain: the expected slot
// length is assembled from per-event probabilities and durations.
ModelOutput evaluate_eq1(const std::vector<StationParams>& stations,
                         const AttemptVector& attempts, const MacTiming& timing);

// The same model evaluated through the odds transform: throughputs come out
// as z_i * y_i * D_i / Y with Y built from ordered products of (1 + y). The
// two evaluations are algebraic rewrites and must agree to near machine
// precision; keeping both routes gives a built-in cross-check.
ModelOutput evaluate_eq2(const std::vector<StationParams>& stations,
                         const AttemptVector& attempts, const MacTiming& timing);

// Expected fraction of time each station spends transmitting (successes and
// failures both counted, at the station's own frame durations).
std::vector<double> airtime_shares(const std::vector<StationParams>& stations,
                                   const AttemptVector& attempts,
                                   const MacTiming& timing);

}  // namespace cwlearn

#endif
