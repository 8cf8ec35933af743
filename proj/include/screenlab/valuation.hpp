// Ex-ante firm value over a type distribution: per-zone profit functions,
// the pool-conditional value V, its analytic gradient in the two noise
// rates split into screening and investment-profit terms, sign maps over
// the noise square, matching-weighted value, and the interior cost level
// k* at which the value-in-k slope flips.
#pragma once

#include <functional>
#include <vector>

#include "screenlab/distribution.hpp"
#include "screenlab/model.hpp"
#include "screenlab/parallel.hpp"

namespace screenlab {

struct Grad2 {
    double q1 = 0.0;
    double q0 = 0.0;
};

// Value, gradient, and the gradient's decomposition. The screening term is
// componentwise >= 0, the profit term <= 0, and their sum equals the
// gradient exactly. corner_* flag coordinates sitting at q = 1/2, where the
// reported derivative is the inward one-sided one.
struct ValueReport {
    double value = 0.0;
    double grad_q1 = 0.0;
    double grad_q0 = 0.0;
    Grad2 screening_term;
    Grad2 profit_term;
    bool corner_q1 = false;
    bool corner_q0 = false;
};

struct SignMapCell {
    double q1 = 0.0;
    double q0 = 0.0;
    double d_q1 = 0.0;
    double d_q0 = 0.0;
    int sign1 = 0;
    int sign0 = 0;
};

// Positive matching weight over the pool; firm_value_weighted normalizes it
// against the pool measure, so any positive scaling represents the same
// matching technology.
class MatchingWeight {
  public:
    explicit MatchingWeight(std::function<double(double)> g) : g_(std::move(g)) {}
    static MatchingWeight constant() {
        return MatchingWeight([](double) { return 1.0; });
    }
    double operator()(double theta) const { return g_(theta); }

  private:
    std::function<double(double)> g_;
};

// Firm's expected payoff from a theta-type manager in the given zone
// (conditional or unconditional); zero in the no-investment zone.
double zone_profit(double theta, const Equilibrium& eq, InvestmentZone zone);

// V = [ int_{theta1}^{theta0} v_c dF + int_{theta0}^{1} v_u dF ] / (1 - F(theta1)).
// Throws std::runtime_error when the pool is degenerate (F(theta1) ~ 1).
double firm_value(const Equilibrium& eq, const TypeDistribution& dist);

// Analytic gradient of V in (q1, q0) with its screening/profit split.
// Defined for continuous distributions only (the screening term needs a
// density at theta1).
ValueReport value_gradient(const Equilibrium& eq, const TypeDistribution& dist);

// Signs of both partials on a grid_n x grid_n lattice over (0, 1/2]^2,
// cells at (i+1)/(2n). Row-major in q1.
std::vector<SignMapCell> sign_map(const ModelParams& params, const TypeDistribution& dist,
                                  int grid_n, Exec exec = Exec::parallel);

// Value when the matching probability over the pool is proportional to
// weight(theta) instead of uniform; the constant weight reproduces
// firm_value exactly.
double firm_value_weighted(const Equilibrium& eq, const TypeDistribution& dist,
                           const MatchingWeight& weight);

// d/dk of log[k (1-k-c)/(k+c)], the slope of the corner-value envelope in k.
double kstar_slope(double k, double c);

// Root of kstar_slope on (0, 1-c): the firm-cost level that maximizes the
// corner values V(q -> 0) and V(q = 1/2) under a uniform prior.
double find_kstar(double c);

}  // namespace screenlab
