#include "screenlab/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "screenlab/rng.hpp"

namespace screenlab {

namespace {

constexpr double kThetaClamp = 1e-12;
// Trials are grouped into fixed-size chunks; chunk partials merge in index
// order, so sums do not depend on the thread count.
constexpr std::int64_t kChunkTrials = 1 << 14;

double clamp_theta(double theta) {
    return std::min(std::max(theta, kThetaClamp), 1.0 - kThetaClamp);
}

// Expected manager payoff of a report, which depends on the report only
// through its zone: never invest, invest on the good signal, always invest.
double expected_payoff(double theta, InvestmentZone zone, const Equilibrium& eq) {
    const double w = eq.w_star;
    const double c = eq.params.c;
    switch (zone) {
        case InvestmentZone::no_investment:
            return 0.0;
        case InvestmentZone::conditional:
            return theta * (1.0 - eq.noise.q1) * (w - c) - (1.0 - theta) * eq.noise.q0 * c;
        case InvestmentZone::unconditional:
            return theta * w - c;
    }
    return 0.0;
}

struct Accum {
    double sum = 0.0;
    double sumsq = 0.0;
    std::int64_t n = 0;

    void add(double x) {
        sum += x;
        sumsq += x * x;
        ++n;
    }
    void merge(const Accum& other) {
        sum += other.sum;
        sumsq += other.sumsq;
        n += other.n;
    }
    double mean() const { return n > 0 ? sum / static_cast<double>(n) : 0.0; }
    double se() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = std::max(0.0, (sumsq - static_cast<double>(n) * m * m) /
                                             static_cast<double>(n - 1));
        return std::sqrt(var / static_cast<double>(n));
    }
};

}  // namespace

void SimConfig::validate() const {
    if (theta_grid_n < 2) throw std::invalid_argument("theta_grid_n >= 2 violated");
    if (report_grid_n < 2) throw std::invalid_argument("report_grid_n >= 2 violated");
    if (trials < 1) throw std::invalid_argument("trials >= 1 violated");
}

PlayResult play_once(double theta, double report, const Equilibrium& eq,
                     const PlayDraw& draw) {
    const bool success = draw.u_outcome < theta;
    const Signal signal = success ? (draw.u_signal < eq.noise.q1 ? Signal::bad : Signal::good)
                                  : (draw.u_signal < eq.noise.q0 ? Signal::good : Signal::bad);
    const bool invest = investment_decision(report, signal, eq);
    PlayResult result{0.0, 0.0, invest, success, signal};
    if (invest) {
        result.manager_payoff = (success ? eq.w_star : 0.0) - eq.params.c;
        result.firm_payoff = (success ? 1.0 - eq.w_star : 0.0) - eq.params.k;
    }
    return result;
}

SimOutcome best_response_check(const Equilibrium& eq, const SimConfig& config, Exec exec) {
    config.validate();
    const int n = config.theta_grid_n;

    std::vector<double> reports;
    reports.reserve(static_cast<std::size_t>(config.report_grid_n) + 2);
    for (int j = 0; j < config.report_grid_n; ++j) {
        reports.push_back((j + 0.5) / config.report_grid_n);
    }
    reports.push_back(eq.theta1);
    reports.push_back(eq.theta0);
    std::sort(reports.begin(), reports.end());
    reports.erase(std::unique(reports.begin(), reports.end()), reports.end());

    SimOutcome out;
    out.seed = config.seed;
    out.bin_centers.resize(n);
    out.empirical_rent.resize(n);
    out.rent_se.assign(n, 0.0);
    out.bin_counts.assign(n, 0);  // expectations are exact, nothing sampled
    out.best_report.resize(n);
    out.exact_rent.resize(n);
    std::vector<double> violation(n);

    for_each_index(static_cast<std::size_t>(n), exec, [&](std::size_t i) {
        const double theta = clamp_theta((static_cast<double>(i) + 0.5) / n);
        // Zone payoffs are constant across a zone, so scan reports and keep
        // the maximizer nearest the type (the tie-break an indifferent
        // manager would use).
        const auto nearest = std::min_element(
            reports.begin(), reports.end(), [&](double a, double b) {
                return std::abs(a - theta) < std::abs(b - theta);
            });
        const double truthful = expected_payoff(theta, classify_zone(*nearest, eq), eq);
        double best_pay = truthful;
        double best_rep = *nearest;
        for (const double r : reports) {
            const double pay = expected_payoff(theta, classify_zone(r, eq), eq);
            if (pay > best_pay ||
                (pay == best_pay && std::abs(r - theta) < std::abs(best_rep - theta))) {
                best_pay = pay;
                best_rep = r;
            }
        }
        out.bin_centers[i] = theta;
        out.empirical_rent[i] = best_pay;
        out.best_report[i] = best_rep;
        out.exact_rent[i] = managerial_rent(theta, eq);
        violation[i] = best_pay - truthful;
    });

    out.ic_violation = *std::max_element(violation.begin(), violation.end());
    return out;
}

SimOutcome simulate_rents(const Equilibrium& eq, const TypeDistribution& dist,
                          const SimConfig& config, Exec exec) {
    config.validate();
    const int n = config.theta_grid_n;
    const std::int64_t chunks = (config.trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<std::vector<Accum>> partial(static_cast<std::size_t>(chunks),
                                            std::vector<Accum>(n));

    for_each_index(static_cast<std::size_t>(chunks), exec, [&](std::size_t chunk) {
        auto& bins = partial[chunk];
        const std::int64_t lo = static_cast<std::int64_t>(chunk) * kChunkTrials;
        const std::int64_t hi = std::min(lo + kChunkTrials, config.trials);
        for (std::int64_t t = lo; t < hi; ++t) {
            const rng::Stream stream(config.seed, static_cast<std::uint64_t>(t));
            const double theta = clamp_theta(dist.quantile(stream.uniform(0)));
            const auto play =
                play_once(theta, theta, eq, PlayDraw{stream.uniform(1), stream.uniform(2)});
            const int bin = std::min(n - 1, static_cast<int>(theta * n));
            bins[bin].add(play.manager_payoff);
        }
    });

    std::vector<Accum> bins(n);
    for (const auto& chunk : partial) {
        for (int i = 0; i < n; ++i) bins[i].merge(chunk[i]);
    }

    SimOutcome out;
    out.seed = config.seed;
    out.trials = config.trials;
    out.bin_centers.resize(n);
    out.empirical_rent.resize(n);
    out.rent_se.resize(n);
    out.bin_counts.resize(n);
    out.exact_rent.resize(n);
    for (int i = 0; i < n; ++i) {
        const double center = clamp_theta((i + 0.5) / static_cast<double>(n));
        out.bin_centers[i] = center;
        out.empirical_rent[i] = bins[i].mean();
        out.rent_se[i] = bins[i].se();
        out.bin_counts[i] = bins[i].n;
        out.exact_rent[i] = managerial_rent(center, eq);
    }
    return out;
}

SimOutcome simulate_value(const Equilibrium& eq, const TypeDistribution& dist,
                          const SimConfig& config, Exec exec) {
    config.validate();
    const double pool_lo = dist.cdf(eq.theta1);
    if (pool_lo >= 1.0 - 1e-12) {
        throw std::runtime_error("managerial pool is empty: no type above theta1");
    }
    const std::int64_t chunks = (config.trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<Accum> partial(static_cast<std::size_t>(chunks));

    for_each_index(static_cast<std::size_t>(chunks), exec, [&](std::size_t chunk) {
        Accum acc;
        const std::int64_t lo = static_cast<std::int64_t>(chunk) * kChunkTrials;
        const std::int64_t hi = std::min(lo + kChunkTrials, config.trials);
        for (std::int64_t t = lo; t < hi; ++t) {
            const rng::Stream stream(config.seed, static_cast<std::uint64_t>(t));
            // Inverse-CDF sample from the pool-truncated distribution.
            const double u = pool_lo + (1.0 - pool_lo) * stream.uniform(0);
            const double theta = clamp_theta(dist.quantile(u));
            const auto play =
                play_once(theta, theta, eq, PlayDraw{stream.uniform(1), stream.uniform(2)});
            acc.add(play.firm_payoff);
        }
        partial[chunk] = acc;
    });

    Accum total;
    for (const auto& acc : partial) total.merge(acc);

    SimOutcome out;
    out.seed = config.seed;
    out.trials = config.trials;
    out.empirical_value = total.mean();
    out.value_se = total.se();
    return out;
}

}  // namespace screenlab
