// Brute-force verification of the equilibrium: an exact best-response scan
// over a discretized reporting game, and seeded Monte Carlo of the play
// itself. None of it uses the closed-form rent or value other than to
// compare against.
#pragma once

#include <cstdint>
#include <vector>

#include "screenlab/distribution.hpp"
#include "screenlab/model.hpp"
#include "screenlab/parallel.hpp"

namespace screenlab {

struct SimConfig {
    int theta_grid_n = 128;    // type grid points / rent histogram bins
    int report_grid_n = 128;   // admissible reports (boundaries are added)
    std::int64_t trials = 100000;  // total Monte Carlo draws
    std::uint64_t seed = 0;

    void validate() const;
};

struct SimOutcome {
    // Per-type-bin statistics (best_response_check and simulate_rents).
    std::vector<double> bin_centers;
    std::vector<double> empirical_rent;  // mean payoff (best response / sampled play)
    std::vector<double> rent_se;
    std::vector<std::int64_t> bin_counts;
    std::vector<double> best_report;     // best_response_check only
    std::vector<double> exact_rent;      // closed-form R at the bin center

    double ic_violation = 0.0;  // max over types: best deviation payoff - truthful payoff
    double empirical_value = 0.0;  // simulate_value only
    double value_se = 0.0;

    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

// One pair of uniforms drives one play: outcome first, then the signal.
struct PlayDraw {
    double u_outcome;
    double u_signal;
};

struct PlayResult {
    double manager_payoff;
    double firm_payoff;
    bool invested;
    bool success;
    Signal signal;
};

// Samples the outcome from the true type, the signal from the outcome, and
// invests ex post based on the reported type.
PlayResult play_once(double theta, double report, const Equilibrium& eq,
                     const PlayDraw& draw);

// Exact expected payoff of every admissible report for every grid type (no
// sampling: the event table gives expectations in closed form). The report
// grid is the even grid plus the exact zone boundaries. best_report is the
// payoff-maximizing report nearest the type; ic_violation measures the gain
// of the best report over the nearest-to-truthful one and shrinks linearly
// with the grid.
SimOutcome best_response_check(const Equilibrium& eq, const SimConfig& config,
                               Exec exec = Exec::parallel);

// Monte Carlo of truthful play: types sampled from dist by inverse CDF,
// payoffs binned by type into theta_grid_n bins over (0, 1).
SimOutcome simulate_rents(const Equilibrium& eq, const TypeDistribution& dist,
                          const SimConfig& config, Exec exec = Exec::parallel);

// Monte Carlo of the firm's payoff with types sampled from the
// pool-truncated distribution. Throws when the pool is empty.
SimOutcome simulate_value(const Equilibrium& eq, const TypeDistribution& dist,
                          const SimConfig& config, Exec exec = Exec::parallel);

}  // namespace screenlab
