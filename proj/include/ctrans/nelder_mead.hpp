#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ctrans {

/// Downhill simplex search (reflection 1, expansion 2, contraction 0.5,
/// shrink 0.5).
struct SimplexOptions {
    int max_iterations = 600;
    /// Stop when the spread of simplex values drops below
    /// f_tolerance * (1 + |f_best|).
    double f_tolerance = 1e-13;
};

struct SimplexResult {
    std::vector<double> point;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Minimizes f from `start`, building the initial simplex by stepping
/// `scale[j]` along each coordinate. f may return large finite penalty values
/// for out-of-domain points.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> start, std::span<const double> scale,
                          const SimplexOptions& options = {});

}  // namespace ctrans
