// Closed-form equilibrium of the screening contract under a noisy binary
// signal: posterior success probabilities, the flat success wage, the
// investment-zone boundaries, the managerial rent schedule, and the
// noise/conservatism reparameterization.
#pragma once

#include <utility>

namespace screenlab {

// Investment cost environment. k is the firm's cost of continuing the
// project, c is the manager's private cost; both are fractions of the unit
// output, and k + c < 1 keeps the project's net surplus positive.
struct ModelParams {
    double k;
    double c;

    ModelParams(double k_, double c_);

    double total_cost() const { return k + c; }
};

// Error rates of the internal signal. q1 = Pr(bad signal | success),
// q0 = Pr(good signal | failure). Both live in (0, 1/2]; 1/2 means the
// signal carries no information. Rates below 1e-9 are rejected: the
// perfect-information limit is outside the model.
struct SignalNoise {
    double q1;
    double q0;

    SignalNoise(double q1_, double q0_);

    bool uninformative() const { return q1 >= 0.5 && q0 >= 0.5; }
};

// (q, lambda) coordinates: q is the symmetric noise level, lambda >= 0 a
// downward reporting bias that makes bad signals more likely. Maps onto
// SignalNoise via q1 = q + lambda, q0 = q - lambda.
struct ConservatismCoords {
    double q;
    double lambda;

    ConservatismCoords(double q_, double lambda_);
};

enum class Signal : int { bad = 0, good = 1 };

enum class InvestmentZone { no_investment, conditional, unconditional };

const char* zone_name(InvestmentZone zone);

// Solved screening contract: flat success wage w* and the boundaries of the
// conditional-investment zone. theta1 is also the lowest type in the
// managerial pool; theta1 == theta0 only at the uninformative corner.
struct Equilibrium {
    ModelParams params;
    SignalNoise noise;
    double w_star;
    double theta1;
    double theta0;
};

Equilibrium solve_equilibrium(const ModelParams& params, const SignalNoise& noise);

// Pr(success | signal, type). Throws std::domain_error unless theta is in
// the open interval (0, 1); callers clamp to [1e-12, 1 - 1e-12].
double posterior_success(double theta, const SignalNoise& noise, Signal signal);

// w* = c / (k + c).
double equilibrium_wage(const ModelParams& params);

// Closed-form (theta1, theta0). theta_s is the type at which the firm is
// indifferent about investing after signal s, i.e. p_s(theta_s)(1 - w*) = k.
std::pair<double, double> zone_boundaries(const ModelParams& params,
                                          const SignalNoise& noise);

// Equilibrium rent: 0 below theta1, the conditional-zone schedule on
// (theta1, theta0], and theta*w* - c above. Continuous at both kinks.
double managerial_rent(double theta, const Equilibrium& eq);

// Half-open convention: theta <= theta1 -> no investment, theta <= theta0 ->
// conditional, else unconditional.
InvestmentZone classify_zone(double theta, const Equilibrium& eq);

// Ex-post optimal investment given the reported type and the realized
// signal. Ties break against investing. Evaluated through the closed-form
// boundaries so it agrees exactly with classify_zone.
bool investment_decision(double theta_report, Signal signal, const Equilibrium& eq);

// Pool cutoff if the firm could commit to a type-threshold policy:
// c / w* = k + c. Strictly above theta1 for any informative noise.
double theta_commit(const ModelParams& params);

SignalNoise noise_from_conservatism(const ConservatismCoords& coords);

// Inverse map; requires q1 >= q0 (non-negative bias).
ConservatismCoords conservatism_from_noise(const SignalNoise& noise);

// Zone boundaries written directly in (q, lambda); identical model, new
// coordinates.
std::pair<double, double> boundaries_conservatism(const ModelParams& params,
                                                  const ConservatismCoords& coords);

struct NoiseGradient {
    double d_q1;
    double d_q0;
};

// Analytic gradient of theta1 in (q1, q0); both components are strictly
// positive: noisier signals raise the pool cutoff.
NoiseGradient theta1_gradient(const ModelParams& params, const SignalNoise& noise);

struct ConservatismSensitivity {
    double d_q;    // > 0: symmetric noise screens
    double d_lambda;  // < 0: bias un-screens
};

ConservatismSensitivity conservatism_sensitivities(const ModelParams& params,
                                                   const ConservatismCoords& coords);

}  // namespace screenlab
