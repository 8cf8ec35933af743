#include "screenlab/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace screenlab {

MoralHazardContract::MoralHazardContract(double b_, double w_) : b(b_), w(w_) {
    if (!(b >= 0.0)) throw std::invalid_argument("b >= 0 violated");
    if (!(w >= 0.0)) throw std::invalid_argument("w >= 0 violated");
}

NoiseCaps::NoiseCaps(double q1_bar_, double q0_bar_) : q1_bar(q1_bar_), q0_bar(q0_bar_) {
    if (!(q1_bar > 0.0 && q0_bar > 0.0)) {
        throw std::invalid_argument("noise caps must be positive");
    }
    if (!(std::min(q1_bar, q0_bar) < 0.5)) {
        throw std::invalid_argument("min(q1_bar, q0_bar) < 1/2 violated");
    }
}

OutsideOption::OutsideOption(double r_min_, NoiseCaps caps_) : r_min(r_min_), caps(caps_) {
    if (!(r_min >= 0.0)) throw std::invalid_argument("r_min >= 0 violated");
}

bool effort_ic_satisfied(const ModelParams& params, const SignalNoise& noise,
                         const MoralHazardContract& contract, const Equilibrium& eq) {
    const double uncond_floor = params.c / eq.theta0;
    const double cond_floor =
        (1.0 + (1.0 - eq.theta1) * noise.q0 / (eq.theta1 * (1.0 - noise.q1))) * params.c;
    // The equilibrium wage sits exactly on the binding floor, so allow the
    // comparison a few ulps of slack.
    return contract.w >= std::max(uncond_floor, cond_floor) * (1.0 - 1e-12);
}

std::pair<MoralHazardContract, Equilibrium> mh_equilibrium(const ModelParams& params,
                                                           const SignalNoise& noise) {
    // Any b > 0 compresses the success premium below the effort floor, so the
    // equilibrium pays on success only. Boundaries depend on k + c, which b
    // leaves unchanged.
    return {MoralHazardContract(0.0, equilibrium_wage(params)),
            solve_equilibrium(params, noise)};
}

double delta_bound(const ModelParams& params, const NoiseCaps& caps) {
    const double m = params.total_cost();
    const double span = 1.0 - caps.q1_bar - caps.q0_bar;
    return span * (1.0 - m) / (m * span + caps.q1_bar);
}

double theta_min(const ModelParams& params, const SignalNoise& noise,
                 const OutsideOption& option) {
    if (noise.q1 > option.caps.q1_bar || noise.q0 > option.caps.q0_bar) {
        throw std::invalid_argument("noise exceeds the caps the outside option assumes");
    }
    const double bound = params.c * delta_bound(params, option.caps);
    if (!(option.r_min < bound)) {
        throw std::invalid_argument("outside option too high: r_min < c*delta violated");
    }
    const double m = params.total_cost();
    const double denom = (1.0 - noise.q1) * (1.0 - m) + noise.q0 * m;
    return (option.r_min + noise.q0 * params.c) * m / (denom * params.c);
}

double theta_min_linear_option(const ModelParams& params, const SignalNoise& noise,
                               double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("rho > 0 violated");
    const auto eq = solve_equilibrium(params, noise);
    const auto gap = [&](double theta) { return managerial_rent(theta, eq) - rho * theta; };
    // The rent is convex piecewise-linear and zero at theta1, so gap starts
    // negative there; the first crossing in (theta1, 1) is unique when the
    // upper end is nonnegative.
    double lo = eq.theta1;
    double hi = 1.0 - 1e-12;
    if (gap(hi) < 0.0) {
        throw std::runtime_error("no type clears the linear outside option: pool empty");
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace screenlab
