// Model variants: moral hazard in the investment effort (bonus-only pay),
// positive outside options shifting the pool cutoff, and the matching
// reweighting handled by firm_value_weighted.
#pragma once

#include <utility>

#include "screenlab/model.hpp"

namespace screenlab {

// Pay b >= 0 on investment plus an extra w >= 0 on success.
struct MoralHazardContract {
    double b;
    double w;

    MoralHazardContract(double b_, double w_);
};

struct NoiseCaps {
    double q1_bar;
    double q0_bar;

    NoiseCaps(double q1_bar_, double q0_bar_);
};

// Constant reservation utility with the noise caps it is measured against.
struct OutsideOption {
    double r_min;
    NoiseCaps caps;

    OutsideOption(double r_min_, NoiseCaps caps_);
};

// Whether the contract makes working incentive compatible in both investment
// zones: w >= max{ c/theta0, (1 + (1-theta1) q0 / (theta1 (1-q1))) c }.
bool effort_ic_satisfied(const ModelParams& params, const SignalNoise& noise,
                         const MoralHazardContract& contract, const Equilibrium& eq);

// The contract inducing both truthful reporting and effort: b = 0,
// w = c/(k+c), with zone boundaries unchanged from the baseline.
std::pair<MoralHazardContract, Equilibrium> mh_equilibrium(const ModelParams& params,
                                                           const SignalNoise& noise);

// Upper bound factor: outside options below c * delta keep the pool cutoff
// inside the conditional zone for all noise within the caps.
double delta_bound(const ModelParams& params, const NoiseCaps& caps);

// Lowest pool type under a constant outside option: the type whose rent
// equals r_min. Requires r_min < c * delta_bound(caps) and noise within the
// caps; collapses to theta1 at r_min = 0.
double theta_min(const ModelParams& params, const SignalNoise& noise,
                 const OutsideOption& option);

// Lowest pool type when the outside option is rho * theta: smallest theta
// with R(theta) >= rho * theta, found by bisection on the piecewise-linear
// rent. Throws when no crossing exists (pool empty).
double theta_min_linear_option(const ModelParams& params, const SignalNoise& noise,
                               double rho);

}  // namespace screenlab
