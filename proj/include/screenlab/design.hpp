// Ex-ante information-quality choice under symmetric noise: maximize
// V(q) - zeta/q over q in [q_min, 1/2].
#pragma once

#include <vector>

#include "screenlab/distribution.hpp"
#include "screenlab/model.hpp"
#include "screenlab/parallel.hpp"

namespace screenlab {

struct DesignProblem {
    ModelParams params;
    TypeDistribution dist;
    double zeta;  // > 0, scale of the information production cost zeta/q

    DesignProblem(ModelParams p, TypeDistribution d, double z);
};

struct ProfilePoint {
    double q = 0.0;
    double value = 0.0;  // V(q)
    double cost = 0.0;   // zeta / q
    double net = 0.0;    // value - cost
};

struct DesignResult {
    double q_star = 0.0;
    double net_value = 0.0;
    bool is_corner = false;  // q_star at the uninformative corner q = 1/2
    std::vector<ProfilePoint> profile;  // the scan the optimizer worked from
};

// Production cost zeta/q of running the information system at noise q;
// decreasing and convex.
double info_cost(double q, double zeta);

// Lower end of the search interval. The cost blows up as q -> 0, so tiny q
// is never optimal for any positive zeta and the truncation is harmless.
inline constexpr double design_q_min = 1e-3;

// Net value is not concave in general (V itself is U- or V-shaped), so the
// optimizer scans a dense grid first and only then refines the best bracket
// by golden section to 1e-6 in q. q_star within 1e-4 of 1/2 is reported as
// the corner solution.
DesignResult optimize_quality(const DesignProblem& problem, Exec exec = Exec::parallel);

// (q, V, h, net) rows over an even grid_n-point grid on [q_min, 1/2].
std::vector<ProfilePoint> value_profile(const DesignProblem& problem, int grid_n,
                                        Exec exec = Exec::parallel);

}  // namespace screenlab
