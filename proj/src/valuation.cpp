#include "screenlab/valuation.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace screenlab {

namespace {

constexpr double kPoolEps = 1e-12;

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

double adaptive_gk(const std::function<double(double)>& f, double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    return GK::integrate(f, lo, hi, /*max_depth=*/12, /*tol=*/1e-12);
}

// int_{(lo, hi]} fn dF. Each zone segment is integrated on its own, so the
// integrand seen here is smooth. Beta shapes below one are integrated in the
// CDF-transformed variable u = F(theta), which absorbs the endpoint
// singularity of the density.
double expect_over(const TypeDistribution& dist, double lo, double hi,
                   const std::function<double(double)>& fn) {
    switch (dist.kind()) {
        case TypeDistribution::Kind::uniform:
            return adaptive_gk(fn, lo, hi);
        case TypeDistribution::Kind::beta: {
            if (dist.beta_a() >= 1.0 && dist.beta_b() >= 1.0) {
                return adaptive_gk([&](double t) { return fn(t) * dist.pdf(t); }, lo, hi);
            }
            return adaptive_gk([&](double u) { return fn(dist.quantile(u)); },
                               dist.cdf(lo), dist.cdf(hi));
        }
        case TypeDistribution::Kind::discrete: {
            double acc = 0.0;
            for (const auto& [theta, weight] : dist.points()) {
                if (theta > lo && theta <= hi) acc += weight * fn(theta);
            }
            return acc;
        }
    }
    return 0.0;
}

double pool_mass_or_throw(const Equilibrium& eq, const TypeDistribution& dist) {
    const double mass = 1.0 - dist.cdf(eq.theta1);
    if (mass <= kPoolEps) {
        throw std::runtime_error("managerial pool is empty: no type above theta1 = " +
                                 std::to_string(eq.theta1));
    }
    return mass;
}

}  // namespace

double zone_profit(double theta, const Equilibrium& eq, InvestmentZone zone) {
    switch (zone) {
        case InvestmentZone::no_investment:
            return 0.0;
        case InvestmentZone::conditional:
            return theta * (1.0 - eq.noise.q1) * (1.0 - eq.w_star - eq.params.k) -
                   (1.0 - theta) * eq.noise.q0 * eq.params.k;
        case InvestmentZone::unconditional:
            return theta * (1.0 - eq.w_star) - eq.params.k;
    }
    return 0.0;
}

double firm_value(const Equilibrium& eq, const TypeDistribution& dist) {
    const double mass = pool_mass_or_throw(eq, dist);
    const double cond = expect_over(dist, eq.theta1, eq.theta0, [&](double t) {
        return zone_profit(t, eq, InvestmentZone::conditional);
    });
    const double uncond = expect_over(dist, eq.theta0, 1.0, [&](double t) {
        return zone_profit(t, eq, InvestmentZone::unconditional);
    });
    return (cond + uncond) / mass;
}

ValueReport value_gradient(const Equilibrium& eq, const TypeDistribution& dist) {
    if (!dist.continuous()) {
        throw std::invalid_argument(
            "value_gradient needs a continuous type distribution (density at theta1)");
    }
    const double mass = pool_mass_or_throw(eq, dist);
    const double value = firm_value(eq, dist);
    const NoiseGradient dtheta1 = theta1_gradient(eq.params, eq.noise);
    const double hazard = dist.pdf(eq.theta1) / mass;

    ValueReport report;
    report.value = value;
    report.corner_q1 = eq.noise.q1 >= 0.5;
    report.corner_q0 = eq.noise.q0 >= 0.5;
    report.screening_term = {value * hazard * dtheta1.d_q1, value * hazard * dtheta1.d_q0};

    // d v_c / d q1 = -theta (1 - w* - k); d v_c / d q0 = -(1 - theta) k.
    // v_u carries no noise dependence, and the theta0 boundary terms cancel
    // because v_c and v_u agree there.
    const double slope1 = 1.0 - eq.w_star - eq.params.k;
    const double dq1 = expect_over(dist, eq.theta1, eq.theta0,
                                   [&](double t) { return -t * slope1; });
    const double dq0 = expect_over(dist, eq.theta1, eq.theta0,
                                   [&](double t) { return -(1.0 - t) * eq.params.k; });
    report.profit_term = {dq1 / mass, dq0 / mass};

    report.grad_q1 = report.screening_term.q1 + report.profit_term.q1;
    report.grad_q0 = report.screening_term.q0 + report.profit_term.q0;
    return report;
}

std::vector<SignMapCell> sign_map(const ModelParams& params, const TypeDistribution& dist,
                                  int grid_n, Exec exec) {
    if (grid_n < 2) throw std::invalid_argument("grid_n >= 2 violated");
    const std::size_t n = static_cast<std::size_t>(grid_n);
    std::vector<SignMapCell> cells(n * n);
    for_each_index(n * n, exec, [&](std::size_t idx) {
        const std::size_t i = idx / n;
        const std::size_t j = idx % n;
        const double q1 = 0.5 * static_cast<double>(i + 1) / static_cast<double>(n);
        const double q0 = 0.5 * static_cast<double>(j + 1) / static_cast<double>(n);
        const auto eq = solve_equilibrium(params, SignalNoise(q1, q0));
        const auto rep = value_gradient(eq, dist);
        SignMapCell& cell = cells[idx];
        cell.q1 = q1;
        cell.q0 = q0;
        cell.d_q1 = rep.grad_q1;
        cell.d_q0 = rep.grad_q0;
        cell.sign1 = (rep.grad_q1 > 0.0) - (rep.grad_q1 < 0.0);
        cell.sign0 = (rep.grad_q0 > 0.0) - (rep.grad_q0 < 0.0);
    });
    return cells;
}

double firm_value_weighted(const Equilibrium& eq, const TypeDistribution& dist,
                           const MatchingWeight& weight) {
    pool_mass_or_throw(eq, dist);
    // Reject nonpositive weights anywhere on the pool before integrating.
    const int probes = 1024;
    for (int i = 0; i <= probes; ++i) {
        const double t =
            eq.theta1 + (1.0 - eq.theta1) * static_cast<double>(i) / probes;
        const double th = std::min(std::max(t, 1e-12), 1.0 - 1e-12);
        if (!(weight(th) > 0.0)) {
            throw std::invalid_argument("matching weight must be positive on the pool");
        }
    }
    const double norm = expect_over(dist, eq.theta1, 1.0, [&](double t) { return weight(t); });
    if (!(norm > 0.0)) {
        throw std::invalid_argument("matching weight has zero mass on the pool");
    }
    const double cond = expect_over(dist, eq.theta1, eq.theta0, [&](double t) {
        return weight(t) * zone_profit(t, eq, InvestmentZone::conditional);
    });
    const double uncond = expect_over(dist, eq.theta0, 1.0, [&](double t) {
        return weight(t) * zone_profit(t, eq, InvestmentZone::unconditional);
    });
    return (cond + uncond) / norm;
}

double kstar_slope(double k, double c) {
    return 1.0 / k - 1.0 / (1.0 - k - c) - 1.0 / (k + c);
}

double find_kstar(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("0 < c < 1 violated");
    double lo = 1e-12;
    double hi = 1.0 - c - 1e-12;
    // slope -> +inf at 0 and -inf at 1-c, and is strictly decreasing.
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (kstar_slope(mid, c) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace screenlab
