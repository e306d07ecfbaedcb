#ifndef CWLEARN_KW_HPP
#define CWLEARN_KW_HPP

#include <cstdint>
#include <random>
#include <utility>

namespace cwlearn {

// Two-point gradient learner configuration. The variable lives in the
// log-odds domain: y = ln(lambda / (1 - lambda)) with lambda = 2/(CW+1).
// Exploration and step size are constants; the learner never terminates, it
// tracks the optimum's neighborhood so it can follow a changing environment.
struct KwConfig {
    double delta = 0.3;        // probe offset, log-odds units
    double eta = 0.1;          // step size
    double tau = 0.2;          // measurement interval, seconds
    double phase = 0.0;        // schedule offset in [0, tau]
    double lower = -6.2363695902037044;   // log-odds of CW = 1023
    double upper = -1.9459101490553133;   // log-odds of CW = 15
    double alpha = 0.3;        // shrink margin; iterates stay in [lower+alpha, upper-alpha]

    void validate() const;     // throws std::invalid_argument
};

enum class KwStage { AwaitPlus, AwaitMinus };

// Per-agent learner state. Owned by exactly one agent; all operations are
// pure given (state, rng).
struct KwState {
    double y = 0.0;
    int epsilon = 1;           // +1 or -1
    std::int64_t iteration = 0;
    KwStage stage = KwStage::AwaitPlus;
    double g_plus = 0.0;
    double g_minus = 0.0;
};

// Draws a fresh +/-1 perturbation sign for the iteration about to start.
void draw_perturbation(KwState& state, std::mt19937_64& rng);

// The two probe points for the current iteration: first the +epsilon*delta
// probe, then the -epsilon*delta probe.
std::pair<double, double> probe_points(const KwState& state, const KwConfig& config);

// Two-point gradient estimate (g_plus - g_minus) / (2 * epsilon * delta).
double gradient_estimate(double g_plus, double g_minus, int epsilon, double delta);

// Clamp x into [a, b].
double project(double x, double a, double b);

// One ascent step on the estimated gradient, projected into the shrunk box;
// advances the iteration counter and re-arms the probe stage.
void ascend_update(KwState& state, double g_tilde, const KwConfig& config);

// CW -> log-odds. cw must lie in [1, 1023]; cw = 1 maps to +infinity.
double cw_to_logy(double cw);

// log-odds -> integer CW, ceiling-discretized and clamped to [cw_min, cw_max].
int logy_to_cw(double y, int cw_min = 15, int cw_max = 1023);

}  // namespace cwlearn

#endif
