#include "ctrans/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace ctrans {

namespace {
constexpr double kInverseTolerance = 1e-12;
constexpr int kInverseMaxIterations = 200;
}  // namespace

double TransmutationKernel::inverse_cdf(double u) const {
    // Bracket [lo, hi] always satisfies R(lo) <= u <= R(hi). Newton steps are
    // taken only when they stay inside the bracket; otherwise bisect. This
    // stays safe when r vanishes at isolated points (boundary-valid kernels).
    double lo = 0.0;
    double hi = 1.0;
    double t = std::clamp(u, 0.0, 1.0);  // R is near the identity for gentle kernels
    for (int iter = 0; iter < kInverseMaxIterations; ++iter) {
        const double f = cdf(t) - u;
        if (std::abs(f) <= kInverseTolerance) return t;
        if (f > 0.0) {
            hi = t;
        } else {
            lo = t;
        }
        const double d = density(t);
        double next = (d > 0.0) ? t - f / d : lo;
        if (!(next > lo) || !(next < hi)) {
            next = 0.5 * (lo + hi);
        }
        t = next;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ctrans
