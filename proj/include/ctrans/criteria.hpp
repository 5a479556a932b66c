#pragma once

#include <cstddef>

namespace ctrans {

struct InformationCriteria {
    double aic;
    double aicc;
    double bic;
};

/// AIC  = 2*neg_log_lik + 2k
/// AICC = AIC + 2k(k+1) / (n - (k+1))
/// BIC  = 2*neg_log_lik + k*ln(n)
/// Throws std::domain_error when n <= k+1 (AICC undefined).
InformationCriteria information_criteria(double neg_log_lik, int k, std::size_t n);

}  // namespace ctrans
