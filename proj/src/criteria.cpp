#include "ctrans/criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace ctrans {

InformationCriteria information_criteria(double neg_log_lik, int k, std::size_t n) {
    if (k < 0) throw std::domain_error("information_criteria: k must be nonnegative");
    if (static_cast<double>(n) <= static_cast<double>(k) + 1.0) {
        throw std::domain_error("information_criteria: need n > k+1 (AICC undefined)");
    }
    const double kk = static_cast<double>(k);
    const double nn = static_cast<double>(n);
    const double aic = 2.0 * neg_log_lik + 2.0 * kk;
    const double aicc = aic + 2.0 * kk * (kk + 1.0) / (nn - (kk + 1.0));
    const double bic = 2.0 * neg_log_lik + kk * std::log(nn);
    return {aic, aicc, bic};
}

}  // namespace ctrans
