#include "ctrans/likelihood.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ctrans {

double log_likelihood(Family family, const Dataset& data, double alpha,
                      std::span<const double> params) {
    if (!(alpha > 0.0)) throw std::domain_error("log_likelihood: alpha must be positive");
    const TransmutationKernel kernel = kernel_of(family, params);
    const auto n = static_cast<double>(data.size());
    double ll = n * std::log(alpha) + n * alpha * std::log(data.x0()) -
                (alpha + 1.0) * data.sum_log();
    for (double lr : data.log_ratios()) {
        const double g = -std::expm1(alpha * lr);  // Pareto cdf at the observation
        const double r = kernel.density(g);
        if (!(r > 0.0)) return -std::numeric_limits<double>::infinity();
        ll += std::log(r);
    }
    return ll;
}

double pareto_alpha_mle(const Dataset& data) {
    double sum = 0.0;
    for (double lr : data.log_ratios()) sum -= lr;  // sum ln(x_i/x0)
    if (!(sum > 0.0)) {
        throw std::domain_error("pareto_alpha_mle: degenerate sample (all values equal)");
    }
    return static_cast<double>(data.size()) / sum;
}

}  // namespace ctrans
