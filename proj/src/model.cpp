#include "screenlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace screenlab {

namespace {

constexpr double kMinNoise = 1e-9;

void require_open_unit(double theta, const char* what) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw std::domain_error(std::string(what) + " must lie in (0, 1), got " +
                                std::to_string(theta));
    }
}

void check_noise_rate(double q, const char* name) {
    if (!(q >= kMinNoise)) {
        throw std::invalid_argument(std::string(name) +
                                    " >= 1e-9 violated (perfect information excluded)");
    }
    if (!(q <= 0.5)) {
        throw std::invalid_argument(std::string(name) + " <= 1/2 violated");
    }
}

}  // namespace

ModelParams::ModelParams(double k_, double c_) : k(k_), c(c_) {
    if (!(k > 0.0)) throw std::invalid_argument("k > 0 violated");
    if (!(c > 0.0)) throw std::invalid_argument("c > 0 violated");
    if (!(k + c < 1.0)) throw std::invalid_argument("k + c < 1 violated");
}

SignalNoise::SignalNoise(double q1_, double q0_) : q1(q1_), q0(q0_) {
    check_noise_rate(q1, "q1");
    check_noise_rate(q0, "q0");
}

ConservatismCoords::ConservatismCoords(double q_, double lambda_) : q(q_), lambda(lambda_) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda >= 0 violated");
    if (!(lambda < q)) throw std::invalid_argument("lambda < q violated");
    // The implied noise pair must itself be admissible.
    check_noise_rate(q + lambda, "q + lambda (implied q1)");
    check_noise_rate(q - lambda, "q - lambda (implied q0)");
}

const char* zone_name(InvestmentZone zone) {
    switch (zone) {
        case InvestmentZone::no_investment: return "no_investment";
        case InvestmentZone::conditional: return "conditional";
        case InvestmentZone::unconditional: return "unconditional";
    }
    return "unknown";
}

double posterior_success(double theta, const SignalNoise& noise, Signal signal) {
    require_open_unit(theta, "theta");
    if (signal == Signal::good) {
        const double hit = theta * (1.0 - noise.q1);
        return hit / (hit + (1.0 - theta) * noise.q0);
    }
    const double miss = theta * noise.q1;
    return miss / (miss + (1.0 - theta) * (1.0 - noise.q0));
}

double equilibrium_wage(const ModelParams& params) {
    return params.c / (params.k + params.c);
}

std::pair<double, double> zone_boundaries(const ModelParams& params,
                                          const SignalNoise& noise) {
    const double m = params.total_cost();
    const double theta0 =
        (1.0 - noise.q0) * m / (noise.q1 + (1.0 - noise.q1 - noise.q0) * m);
    double theta1 =
        noise.q0 * m / ((1.0 - noise.q1) * (1.0 - m) + noise.q0 * m);
    // theta1 <= theta0 holds analytically for all admissible noise (equality
    // only at q1 = q0 = 1/2); clamp away the last-ulp reversal at the corner.
    theta1 = std::min(theta1, theta0);
    return {theta1, theta0};
}

Equilibrium solve_equilibrium(const ModelParams& params, const SignalNoise& noise) {
    const auto [theta1, theta0] = zone_boundaries(params, noise);
    return Equilibrium{params, noise, equilibrium_wage(params), theta1, theta0};
}

double managerial_rent(double theta, const Equilibrium& eq) {
    require_open_unit(theta, "theta");
    if (theta <= eq.theta1) return 0.0;
    if (theta <= eq.theta0) {
        return theta * (1.0 - eq.noise.q1) * (eq.w_star - eq.params.c) -
               (1.0 - theta) * eq.noise.q0 * eq.params.c;
    }
    return theta * eq.w_star - eq.params.c;
}

InvestmentZone classify_zone(double theta, const Equilibrium& eq) {
    require_open_unit(theta, "theta");
    if (theta <= eq.theta1) return InvestmentZone::no_investment;
    if (theta <= eq.theta0) return InvestmentZone::conditional;
    return InvestmentZone::unconditional;
}

bool investment_decision(double theta_report, Signal signal, const Equilibrium& eq) {
    require_open_unit(theta_report, "theta_report");
    // p_s(report)(1 - w*) > k, strict. p_s is increasing in the report, so the
    // condition is report > theta_s for the boundary theta_s of signal s.
    return signal == Signal::good ? theta_report > eq.theta1
                                  : theta_report > eq.theta0;
}

double theta_commit(const ModelParams& params) {
    return params.k + params.c;  // c / w*
}

SignalNoise noise_from_conservatism(const ConservatismCoords& coords) {
    return SignalNoise(coords.q + coords.lambda, coords.q - coords.lambda);
}

ConservatismCoords conservatism_from_noise(const SignalNoise& noise) {
    if (noise.q1 < noise.q0) {
        throw std::invalid_argument(
            "conservatism decomposition requires q1 >= q0 (lambda >= 0)");
    }
    return ConservatismCoords(0.5 * (noise.q1 + noise.q0), 0.5 * (noise.q1 - noise.q0));
}

std::pair<double, double> boundaries_conservatism(const ModelParams& params,
                                                  const ConservatismCoords& coords) {
    const double m = params.total_cost();
    const double q = coords.q;
    const double lam = coords.lambda;
    const double theta1 =
        (q - lam) * m / ((1.0 - q - lam) * (1.0 - m) + (q - lam) * m);
    const double theta0 =
        (1.0 - q + lam) * m / (q + lam + (1.0 - 2.0 * q) * m);
    return {std::min(theta1, theta0), theta0};
}

NoiseGradient theta1_gradient(const ModelParams& params, const SignalNoise& noise) {
    const double m = params.total_cost();
    const double denom = (1.0 - noise.q1) * (1.0 - m) + noise.q0 * m;
    const double d2 = denom * denom;
    return NoiseGradient{noise.q0 * m * (1.0 - m) / d2,
                         m * (1.0 - noise.q1) * (1.0 - m) / d2};
}

ConservatismSensitivity conservatism_sensitivities(const ModelParams& params,
                                                   const ConservatismCoords& coords) {
    const double m = params.total_cost();
    const double denom =
        (1.0 - coords.q - coords.lambda) * (1.0 - m) + (coords.q - coords.lambda) * m;
    const double d2 = denom * denom;
    return ConservatismSensitivity{
        m * (1.0 - m) * (1.0 - 2.0 * coords.lambda) / d2,
        -m * (1.0 - m) * (1.0 - 2.0 * coords.q) / d2};
}

}  // namespace screenlab
