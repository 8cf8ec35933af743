// Prior over managerial ability on (0, 1): uniform, Beta(a, b), or a
// discrete grid of weighted atoms.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace screenlab {

class TypeDistribution {
  public:
    enum class Kind { uniform, beta, discrete };

    static TypeDistribution uniform();
    static TypeDistribution beta(double a, double b);
    // Atoms must lie strictly inside (0, 1) with nonnegative weights summing
    // to 1 within 1e-10; the stored weights are renormalized exactly.
    static TypeDistribution discrete(std::vector<std::pair<double, double>> points);

    Kind kind() const { return kind_; }
    bool continuous() const { return kind_ != Kind::discrete; }

    // Density. Beta densities are evaluated through logarithms so shapes
    // below one stay finite arbitrarily close to the endpoints. Throws for
    // discrete distributions.
    double pdf(double theta) const;
    double cdf(double theta) const;
    // Generalized inverse CDF; u in [0, 1]. For discrete distributions this
    // is the usual right-continuous step inverse.
    double quantile(double u) const;

    double beta_a() const { return a_; }
    double beta_b() const { return b_; }
    const std::vector<std::pair<double, double>>& points() const { return points_; }

    // Short human-readable tag ("uniform", "beta:3,1", "discrete:17").
    std::string label() const;

  private:
    TypeDistribution() = default;

    Kind kind_ = Kind::uniform;
    double a_ = 0.0;
    double b_ = 0.0;
    std::vector<std::pair<double, double>> points_;   // sorted by theta
    std::vector<double> cum_;                         // cumulative weights
};

}  // namespace screenlab
