#include "cwlearn/kw.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwlearn {

void KwConfig::validate() const {
    if (delta <= 0.0) throw std::invalid_argument("KwConfig: delta must be positive");
    if (eta <= 0.0) throw std::invalid_argument("KwConfig: eta must be positive");
    if (tau <= 0.0) throw std::invalid_argument("KwConfig: tau must be positive");
    if (phase < 0.0 || phase > tau) {
        throw std::invalid_argument("KwConfig: phase must lie in [0, tau]");
    }
    if (!(lower < upper)) throw std::invalid_argument("KwConfig: lower must be below upper");
    if (alpha < 0.0 || alpha > (upper - lower) / 2.0) {
        throw std::invalid_argument("KwConfig: alpha must lie in [0, (upper-lower)/2]");
    }
}

void draw_perturbation(KwState& state, std::mt19937_64& rng) {
    state.epsilon = (rng() & 1u) ? 1 : -1;
}

std::pair<double, double> probe_points(const KwState& state, const KwConfig& config) {
    const double offset = state.epsilon * config.delta;
    return {state.y + offset, state.y - offset};
}

double gradient_estimate(double g_plus, double g_minus, int epsilon, double delta) {
    if (delta <= 0.0) throw std::invalid_argument("gradient_estimate: delta must be positive");
    if (epsilon != 1 && epsilon != -1) {
        throw std::invalid_argument("gradient_estimate: epsilon must be +1 or -1");
    }
    return (g_plus - g_minus) / (2.0 * epsilon * delta);
}

double project(double x, double a, double b) {
    if (a > b) throw std::invalid_argument("project: empty interval");
    return std::max(std::min(b, x), a);
}

void ascend_update(KwState& state, double g_tilde, const KwConfig& config) {
    state.y = project(state.y + config.eta * g_tilde,
                      config.lower + config.alpha, config.upper - config.alpha);
    state.iteration += 1;
    state.stage = KwStage::AwaitPlus;
    state.g_plus = 0.0;
    state.g_minus = 0.0;
}

double cw_to_logy(double cw) {
    if (cw < 1.0 || cw > 1023.0) {
        throw std::invalid_argument("cw_to_logy: cw must lie in [1, 1023]");
    }
    const double lambda = 2.0 / (cw + 1.0);
    return std::log(lambda / (1.0 - lambda));
}

int logy_to_cw(double y, int cw_min, int cw_max) {
    // 2/lambda - 1 with lambda = e^y/(1+e^y) simplifies to 1 + 2*e^{-y}.
    // The 1e-9 nudge keeps ceil() from bumping exact integer preimages up by
    // one when the exp/log round trip lands epsilon above the true value.
    const double cw_real = 1.0 + 2.0 * std::exp(-y);
    double cw = std::ceil(cw_real - 1e-9);
    return static_cast<int>(project(cw, cw_min, cw_max));
}

}  // namespace cwlearn
