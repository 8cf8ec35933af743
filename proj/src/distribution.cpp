#include "screenlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace screenlab {

TypeDistribution TypeDistribution::uniform() {
    TypeDistribution d;
    d.kind_ = Kind::uniform;
    return d;
}

TypeDistribution TypeDistribution::beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("beta shapes must be positive");
    }
    TypeDistribution d;
    d.kind_ = Kind::beta;
    d.a_ = a;
    d.b_ = b;
    return d;
}

TypeDistribution TypeDistribution::discrete(std::vector<std::pair<double, double>> points) {
    if (points.empty()) throw std::invalid_argument("discrete distribution needs atoms");
    std::sort(points.begin(), points.end());
    double mass = 0.0;
    for (const auto& [theta, weight] : points) {
        if (!(theta > 0.0 && theta < 1.0)) {
            throw std::invalid_argument("discrete atoms must lie in (0, 1)");
        }
        if (!(weight >= 0.0)) throw std::invalid_argument("atom weights must be >= 0");
        mass += weight;
    }
    if (std::abs(mass - 1.0) > 1e-10) {
        throw std::invalid_argument("atom weights must sum to 1 within 1e-10");
    }
    TypeDistribution d;
    d.kind_ = Kind::discrete;
    d.points_ = std::move(points);
    d.cum_.reserve(d.points_.size());
    double acc = 0.0;
    for (auto& [theta, weight] : d.points_) {
        weight /= mass;
        acc += weight;
        d.cum_.push_back(acc);
    }
    d.cum_.back() = 1.0;
    return d;
}

double TypeDistribution::pdf(double theta) const {
    switch (kind_) {
        case Kind::uniform:
            return (theta > 0.0 && theta < 1.0) ? 1.0 : 0.0;
        case Kind::beta: {
            if (!(theta > 0.0 && theta < 1.0)) return 0.0;
            const double log_norm = std::lgamma(a_) + std::lgamma(b_) - std::lgamma(a_ + b_);
            return std::exp((a_ - 1.0) * std::log(theta) +
                            (b_ - 1.0) * std::log1p(-theta) - log_norm);
        }
        case Kind::discrete:
            throw std::logic_error("discrete distribution has no density");
    }
    return 0.0;
}

double TypeDistribution::cdf(double theta) const {
    switch (kind_) {
        case Kind::uniform:
            return std::clamp(theta, 0.0, 1.0);
        case Kind::beta:
            if (theta <= 0.0) return 0.0;
            if (theta >= 1.0) return 1.0;
            return boost::math::ibeta(a_, b_, theta);
        case Kind::discrete: {
            double acc = 0.0;
            for (std::size_t i = 0; i < points_.size(); ++i) {
                if (points_[i].first <= theta) acc = cum_[i];
                else break;
            }
            return acc;
        }
    }
    return 0.0;
}

double TypeDistribution::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile needs u in [0, 1]");
    switch (kind_) {
        case Kind::uniform:
            return u;
        case Kind::beta:
            if (u <= 0.0) return 0.0;
            if (u >= 1.0) return 1.0;
            return boost::math::ibeta_inv(a_, b_, u);
        case Kind::discrete: {
            const auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
            const std::size_t i = std::min<std::size_t>(it - cum_.begin(), points_.size() - 1);
            return points_[i].first;
        }
    }
    return u;
}

std::string TypeDistribution::label() const {
    switch (kind_) {
        case Kind::uniform:
            return "uniform";
        case Kind::beta: {
            std::ostringstream os;
            os << "beta:" << a_ << "," << b_;
            return os.str();
        }
        case Kind::discrete:
            return "discrete:" + std::to_string(points_.size());
    }
    return "?";
}

}  // namespace screenlab
