#include "screenlab/propcheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "screenlab/extensions.hpp"
#include "screenlab/valuation.hpp"

namespace screenlab {

namespace {

std::vector<double> noise_grid(int n) {
    std::vector<double> g;
    g.reserve(n);
    for (int i = 0; i < n; ++i) g.push_back(0.05 + (0.5 - 0.05) * i / (n - 1));
    return g;
}

// Root of p_s(theta)(1 - w*) = k by bisection; the independent route the
// closed-form boundaries are checked against.
double boundary_by_bisection(const ModelParams& params, const SignalNoise& noise,
                             Signal signal) {
    const double w = equilibrium_wage(params);
    const auto gap = [&](double theta) {
        return posterior_success(theta, noise, signal) * (1.0 - w) - params.k;
    };
    double lo = 1e-12;
    double hi = 1.0 - 1e-12;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double fd_value_dk(double k, double c, double q, double h = 1e-6) {
    const auto v = [&](double kk) {
        const ModelParams p(kk, c);
        const auto eq = solve_equilibrium(p, SignalNoise(q, q));
        return firm_value(eq, TypeDistribution::uniform());
    };
    return (v(k + h) - v(k - h)) / (2.0 * h);
}

double fd_value_dc(double k, double c, double q, double h = 1e-6) {
    const auto v = [&](double cc) {
        const ModelParams p(k, cc);
        const auto eq = solve_equilibrium(p, SignalNoise(q, q));
        return firm_value(eq, TypeDistribution::uniform());
    };
    return (v(c + h) - v(c - h)) / (2.0 * h);
}

CheckResult check_contract(const ModelParams& params, int grid_n) {
    CheckResult result{"prop1 contract closed forms", true, 0.0, ""};
    double worst = 0.0;
    for (const double q1 : noise_grid(grid_n)) {
        for (const double q0 : noise_grid(grid_n)) {
            const SignalNoise noise(q1, q0);
            const auto [t1, t0] = zone_boundaries(params, noise);
            const double b1 = boundary_by_bisection(params, noise, Signal::good);
            const double b0 = boundary_by_bisection(params, noise, Signal::bad);
            worst = std::max({worst, std::abs(t1 - b1), std::abs(t0 - b0)});
            const auto eq = solve_equilibrium(params, noise);
            // rent continuity at both kinks
            const double kink1 = std::abs(managerial_rent(std::nextafter(t1, 1.0), eq));
            const double r_lo = managerial_rent(t0, eq);
            const double r_hi = managerial_rent(std::nextafter(t0, 1.0), eq);
            worst = std::max({worst, kink1, std::abs(r_hi - r_lo)});
        }
    }
    result.margin = 1e-10 - worst;
    result.pass = worst <= 1e-10;
    std::ostringstream os;
    os << "max boundary/kink gap " << worst << " (tol 1e-10)";
    result.detail = os.str();
    return result;
}

CheckResult check_screening_gradient(const ModelParams& params, int grid_n) {
    CheckResult result{"prop2 screening gradient", true, 0.0, ""};
    double worst_rel = 0.0;
    bool signs_ok = true;
    const double h = 1e-6;
    for (const double q1 : noise_grid(grid_n)) {
        for (const double q0 : noise_grid(grid_n)) {
            const auto grad = theta1_gradient(params, SignalNoise(q1, q0));
            signs_ok = signs_ok && grad.d_q1 > 0.0 && grad.d_q0 > 0.0;
            if (q1 + h < 0.5 && q1 - h > 0.0 && q0 + h < 0.5 && q0 - h > 0.0) {
                const double fd1 = (zone_boundaries(params, SignalNoise(q1 + h, q0)).first -
                                    zone_boundaries(params, SignalNoise(q1 - h, q0)).first) /
                                   (2.0 * h);
                const double fd0 = (zone_boundaries(params, SignalNoise(q1, q0 + h)).first -
                                    zone_boundaries(params, SignalNoise(q1, q0 - h)).first) /
                                   (2.0 * h);
                worst_rel = std::max({worst_rel, std::abs(fd1 - grad.d_q1) / grad.d_q1,
                                      std::abs(fd0 - grad.d_q0) / grad.d_q0});
            }
        }
    }
    result.pass = signs_ok && worst_rel <= 1e-6;
    result.margin = 1e-6 - worst_rel;
    std::ostringstream os;
    os << "components positive: " << (signs_ok ? "yes" : "NO") << ", max FD rel err "
       << worst_rel;
    result.detail = os.str();
    return result;
}

CheckResult check_conservatism(const ModelParams& params, int grid_n) {
    CheckResult result{"prop3 conservatism sensitivities", true, 0.0, ""};
    double worst_rel = 0.0;
    bool signs_ok = true;
    const double h = 1e-7;
    for (int i = 0; i < grid_n; ++i) {
        const double q = 0.1 + (0.45 - 0.1) * i / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            const double lam = (q - 2e-3) * j / grid_n;  // lambda < q
            if (q + lam >= 0.5 - 1e-6) continue;         // keep FD steps admissible
            const ConservatismCoords coords(q, lam);
            const auto sens = conservatism_sensitivities(params, coords);
            signs_ok = signs_ok && sens.d_q > 0.0 && sens.d_lambda < 0.0;
            const double fd_q =
                (boundaries_conservatism(params, ConservatismCoords(q + h, lam)).first -
                 boundaries_conservatism(params, ConservatismCoords(q - h, lam)).first) /
                (2.0 * h);
            worst_rel = std::max(worst_rel, std::abs(fd_q - sens.d_q) / sens.d_q);
            if (lam - h >= 0.0) {
                const double fd_l =
                    (boundaries_conservatism(params, ConservatismCoords(q, lam + h)).first -
                     boundaries_conservatism(params, ConservatismCoords(q, lam - h)).first) /
                    (2.0 * h);
                worst_rel =
                    std::max(worst_rel, std::abs(fd_l - sens.d_lambda) / -sens.d_lambda);
            }
        }
    }
    result.pass = signs_ok && worst_rel <= 1e-6;
    result.margin = 1e-6 - worst_rel;
    std::ostringstream os;
    os << "signs (d_q>0, d_lambda<0): " << (signs_ok ? "yes" : "NO") << ", max FD rel err "
       << worst_rel;
    result.detail = os.str();
    return result;
}

CheckResult check_value_tradeoff(const ModelParams& params) {
    CheckResult result{"prop4 value trade-off", true, 0.0, ""};
    const auto dist = TypeDistribution::uniform();
    const auto low = value_gradient(solve_equilibrium(params, SignalNoise(0.05, 0.05)), dist);
    const auto high = value_gradient(solve_equilibrium(params, SignalNoise(0.45, 0.45)), dist);
    // Informed investment dominates at precise signals (value falls in q1
    // noise), screening dominates at noisy ones (both partials positive).
    const bool ok = low.grad_q1 < 0.0 && high.grad_q1 > 0.0 && high.grad_q0 > 0.0;
    result.pass = ok;
    result.margin = std::min({-low.grad_q1, high.grad_q1, high.grad_q0});
    std::ostringstream os;
    os << "dV/dq1(0.05) = " << low.grad_q1 << ", grad V(0.45) = (" << high.grad_q1 << ", "
       << high.grad_q0 << ")";
    result.detail = os.str();
    return result;
}

CheckResult check_cost_statics(const ModelParams& params, int grid_n) {
    CheckResult result{"prop5 cost comparative statics", true, 0.0, ""};
    const double h = 1e-7;
    bool theta_ok = true;
    for (const double q1 : noise_grid(grid_n)) {
        for (const double q0 : noise_grid(grid_n)) {
            const SignalNoise noise(q1, q0);
            const double dk = (zone_boundaries(ModelParams(params.k + h, params.c), noise).first -
                               zone_boundaries(ModelParams(params.k - h, params.c), noise).first) /
                              (2.0 * h);
            const double dc = (zone_boundaries(ModelParams(params.k, params.c + h), noise).first -
                               zone_boundaries(ModelParams(params.k, params.c - h), noise).first) /
                              (2.0 * h);
            theta_ok = theta_ok && dk > 0.0 && dc > 0.0;
        }
    }

    const double kstar = find_kstar(params.c);
    const double below = kstar_slope(0.5 * kstar, params.c);
    const double above = kstar_slope(0.5 * (kstar + 1.0 - params.c), params.c);
    bool kstar_ok = below > 0.0 && above < 0.0;
    bool corner_ok = true;
    for (const double q : {1e-4, 0.5}) {
        corner_ok = corner_ok && fd_value_dc(params.k, params.c, q) < 0.0;
        // dV/dk flips from positive to negative across k*
        kstar_ok = kstar_ok && fd_value_dk(std::max(0.02, kstar - 0.05), params.c, q) > 0.0 &&
                   fd_value_dk(std::min(1.0 - params.c - 0.02, kstar + 0.05), params.c, q) < 0.0;
    }
    result.pass = theta_ok && kstar_ok && corner_ok;
    result.margin = result.pass ? 1.0 : -1.0;
    std::ostringstream os;
    os << "d theta1/d{k,c} > 0: " << (theta_ok ? "yes" : "NO") << "; k* = " << kstar
       << "; corner dV/dc < 0 and dV/dk flips at k*: "
       << (kstar_ok && corner_ok ? "yes" : "NO");
    result.detail = os.str();
    return result;
}

CheckResult check_moral_hazard(const ModelParams& params, int grid_n) {
    CheckResult result{"prop6 moral hazard variant", true, 0.0, ""};
    double worst = 0.0;
    bool infeasible_ok = true;
    for (const double q1 : noise_grid(grid_n)) {
        for (const double q0 : noise_grid(grid_n)) {
            const SignalNoise noise(q1, q0);
            const auto [contract, eq] = mh_equilibrium(params, noise);
            const auto [t1, t0] = zone_boundaries(params, noise);
            worst = std::max({worst, std::abs(eq.theta1 - t1), std::abs(eq.theta0 - t0),
                              std::abs(contract.w - equilibrium_wage(params))});
            if (!effort_ic_satisfied(params, noise, contract, eq)) infeasible_ok = false;
            // Any positive investment payment starves the success premium.
            for (double b = 0.01; b < std::min(params.c, 0.2); b += 0.02) {
                const MoralHazardContract bad(b, (params.c - b) / params.total_cost());
                if (effort_ic_satisfied(params, noise, bad, eq)) infeasible_ok = false;
            }
        }
    }
    result.pass = worst <= 1e-14 && infeasible_ok;
    result.margin = 1e-14 - worst;
    std::ostringstream os;
    os << "max boundary gap " << worst << " (tol 1e-14); b > 0 infeasible: "
       << (infeasible_ok ? "yes" : "NO");
    result.detail = os.str();
    return result;
}

CheckResult check_outside_options(const ModelParams& params, int grid_n) {
    CheckResult result{"prop7 outside options", true, 0.0, ""};
    const NoiseCaps caps(0.45, 0.45);
    const double rmax = params.c * delta_bound(params, caps);
    double worst = 0.0;
    bool order_ok = true;
    bool grad_ok = true;
    const double h = 1e-6;
    for (int i = 0; i < grid_n; ++i) {
        const double q = 0.05 + (0.44 - 0.05) * i / (grid_n - 1);
        for (const double frac : {0.0, 0.25, 0.75}) {
            const SignalNoise noise(q, q);
            const OutsideOption option(frac * rmax, caps);
            const double tmin = theta_min(params, noise, option);
            const auto eq = solve_equilibrium(params, noise);
            worst = std::max(worst, std::abs(managerial_rent(tmin, eq) - option.r_min));
            order_ok = order_ok && tmin < eq.theta0;
            const double up = theta_min(params, SignalNoise(q + h, q + h), option);
            const double dn = theta_min(params, SignalNoise(q - h, q - h), option);
            grad_ok = grad_ok && up > dn;
        }
    }
    result.pass = worst <= 1e-10 && order_ok && grad_ok;
    result.margin = 1e-10 - worst;
    std::ostringstream os;
    os << "max |R(theta_min) - r_min| " << worst << " (tol 1e-10); theta_min < theta0: "
       << (order_ok ? "yes" : "NO") << "; increasing in noise: " << (grad_ok ? "yes" : "NO");
    result.detail = os.str();
    return result;
}

}  // namespace

std::vector<CheckResult> run_proposition_suite(const ModelParams& params, bool quick) {
    const int grid_n = quick ? 6 : 20;
    const int small_grid = quick ? 4 : 10;
    std::vector<CheckResult> results;
    results.push_back(check_contract(params, grid_n));
    results.push_back(check_screening_gradient(params, grid_n));
    results.push_back(check_conservatism(params, small_grid));
    results.push_back(check_value_tradeoff(params));
    results.push_back(check_cost_statics(params, small_grid));
    results.push_back(check_moral_hazard(params, small_grid));
    results.push_back(check_outside_options(params, small_grid));
    return results;
}

}  // namespace screenlab
