#include "screenlab/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "screenlab/valuation.hpp"

namespace screenlab {

namespace {

constexpr int kScanPoints = 256;
constexpr double kCornerTol = 1e-4;
constexpr double kGoldenTol = 1e-6;

double net_value_at(const DesignProblem& problem, double q) {
    const auto eq = solve_equilibrium(problem.params, SignalNoise(q, q));
    return firm_value(eq, problem.dist) - info_cost(q, problem.zeta);
}

}  // namespace

DesignProblem::DesignProblem(ModelParams p, TypeDistribution d, double z)
    : params(p), dist(std::move(d)), zeta(z) {
    if (!(zeta > 0.0)) throw std::invalid_argument("zeta > 0 violated");
}

double info_cost(double q, double zeta) {
    if (!(q > 0.0)) throw std::domain_error("info_cost needs q > 0");
    return zeta / q;
}

std::vector<ProfilePoint> value_profile(const DesignProblem& problem, int grid_n, Exec exec) {
    if (grid_n < 10) throw std::invalid_argument("grid_n >= 10 violated");
    std::vector<ProfilePoint> rows(static_cast<std::size_t>(grid_n));
    const double lo = design_q_min;
    const double hi = 0.5;
    for_each_index(rows.size(), exec, [&](std::size_t i) {
        const double q = lo + (hi - lo) * static_cast<double>(i) / (grid_n - 1);
        const auto eq = solve_equilibrium(problem.params, SignalNoise(q, q));
        ProfilePoint& row = rows[i];
        row.q = q;
        row.value = firm_value(eq, problem.dist);
        row.cost = info_cost(q, problem.zeta);
        row.net = row.value - row.cost;
    });
    return rows;
}

DesignResult optimize_quality(const DesignProblem& problem, Exec exec) {
    DesignResult result;
    result.profile = value_profile(problem, kScanPoints, exec);

    std::size_t best = 0;
    for (std::size_t i = 1; i < result.profile.size(); ++i) {
        if (result.profile[i].net > result.profile[best].net) best = i;
    }
    double best_q = result.profile[best].q;
    double best_net = result.profile[best].net;

    // Golden-section refinement inside the bracket around the scan winner.
    double a = result.profile[best == 0 ? 0 : best - 1].q;
    double b = result.profile[std::min(best + 1, result.profile.size() - 1)].q;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = net_value_at(problem, x1);
    double f2 = net_value_at(problem, x2);
    while (b - a > kGoldenTol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = net_value_at(problem, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = net_value_at(problem, x1);
        }
    }
    const double refined_q = f1 > f2 ? x1 : x2;
    const double refined_net = std::max(f1, f2);
    if (refined_net > best_net) {
        best_q = refined_q;
        best_net = refined_net;
    }

    if (0.5 - best_q < kCornerTol) {
        result.is_corner = true;
        result.q_star = 0.5;
        result.net_value = net_value_at(problem, 0.5);
    } else {
        result.q_star = best_q;
        result.net_value = best_net;
    }
    return result;
}

}  // namespace screenlab
