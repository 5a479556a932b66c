#pragma once

#include <span>

#include "ctrans/dataset.hpp"
#include "ctrans/family.hpp"

namespace ctrans {

/// Log-likelihood of a transmuted-Pareto model with the scale fixed at the
/// sample minimum:
///
///   n ln a + n a ln x0 - (a+1) sum ln x_i + sum ln r(G(x_i)),
///
/// where G is the Pareto cdf at (x0, alpha) and r the family kernel. Returns
/// -infinity when any r(G(x_i)) <= 0 (the trial parameters give some
/// observation a non-positive density). Throws std::domain_error when
/// alpha <= 0 and std::invalid_argument on arity mismatch.
double log_likelihood(Family family, const Dataset& data, double alpha,
                      std::span<const double> params);

/// Closed-form Pareto MLE of the shape: n / sum ln(x_i/x0). Throws
/// std::domain_error for degenerate samples (all values equal).
double pareto_alpha_mle(const Dataset& data);

}  // namespace ctrans
