#pragma once

#include <cstddef>
#include <vector>

#include "ctrans/dataset.hpp"
#include "ctrans/family.hpp"
#include "ctrans/nelder_mead.hpp"

namespace ctrans {

/// Constrained maximum-likelihood settings. The defaults implement an outer
/// logarithmic-barrier loop (mu decreasing x0.1 from 1e-4) around a
/// derivative-free simplex search, with multiple deterministic starts.
struct FitConfig {
    /// Cap on the number of (theta, alpha) starting points. Starts are the
    /// constraint-set centroid plus points 60% of the way from the centroid
    /// to each vertex, each paired with alpha in {0.5, 1, 2} x the closed-form
    /// Pareto MLE.
    int max_starts = 16;

    double barrier_mu0 = 1e-4;
    double barrier_shrink = 0.1;
    /// Outer loop stops when successive barrier-free optima differ by less
    /// than this, relative.
    double outer_rel_tol = 1e-8;
    int max_outer_iterations = 10;

    /// Box constraint on the Pareto shape: alpha >= alpha_floor.
    double alpha_floor = 1e-8;

    /// A parameter within snap_distance of a constraint boundary is snapped
    /// onto it after convergence; the snapped point is kept iff its
    /// log-likelihood is not worse by more than snap_accept.
    double snap_distance = 1e-3;
    double snap_accept = 1e-6;

    SimplexOptions simplex;
};

struct FitResult {
    Family family;
    double x0 = 0.0;
    double alpha = 0.0;
    std::vector<double> params;
    double neg_log_lik = 0.0;
    double aic = 0.0;
    double aicc = 0.0;
    double bic = 0.0;
    /// Estimated parameter count: alpha plus the transmutation parameters
    /// (x0 is excluded; its MLE is the sample minimum).
    int k = 0;
    std::size_t n = 0;
    bool converged = false;
    /// Per transmutation parameter: true when some constraint involving it is
    /// within snap_distance of binding at the estimate.
    std::vector<bool> boundary;
};

/// Maximizes the log-likelihood over alpha > 0 and params in the family's
/// constraint set, with x0 fixed at the sample minimum. Deterministic: the
/// best likelihood wins, ties broken by the earliest start. Throws
/// std::domain_error when n < k+2 (AICC undefined).
FitResult fit(Family family, const Dataset& data, const FitConfig& config = {});

}  // namespace ctrans
