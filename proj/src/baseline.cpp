#include "ctrans/baseline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ctrans {

Pareto::Pareto(double scale, double shape) : scale_(scale), shape_(shape) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::domain_error("Pareto: scale must be a positive finite real");
    }
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw std::domain_error("Pareto: shape must be a positive finite real");
    }
}

double Pareto::cdf(double x) const {
    if (x <= scale_) return 0.0;
    // 1 - (x0/x)^a, evaluated as -expm1(a*log(x0/x)) to avoid cancellation
    // near the lower support bound.
    return -std::expm1(shape_ * std::log(scale_ / x));
}

double Pareto::pdf(double x) const {
    if (x < scale_) return 0.0;
    return (shape_ / x) * std::exp(shape_ * std::log(scale_ / x));
}

double Pareto::log_pdf(double x) const {
    if (x < scale_) return -std::numeric_limits<double>::infinity();
    return std::log(shape_) + shape_ * std::log(scale_) - (shape_ + 1.0) * std::log(x);
}

double Pareto::quantile(double u) const {
    if (!(u >= 0.0) || u >= 1.0) {
        throw std::domain_error("Pareto::quantile: u must lie in [0,1)");
    }
    // x0 * (1-u)^(-1/a)
    return scale_ * std::exp(-std::log1p(-u) / shape_);
}

double Pareto::support_upper() const { return std::numeric_limits<double>::infinity(); }

std::shared_ptr<const BaselineDistribution> make_baseline(const std::string& name,
                                                          const std::vector<double>& params) {
    if (name == "pareto") {
        if (params.size() != 2) {
            throw std::invalid_argument("baseline pareto takes exactly 2 parameters (scale, shape)");
        }
        return std::make_shared<Pareto>(params[0], params[1]);
    }
    throw std::invalid_argument("unknown baseline distribution: " + name);
}

}  // namespace ctrans
