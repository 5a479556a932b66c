#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ctrans/baseline.hpp"
#include "ctrans/family.hpp"

namespace ctrans {

/// A baseline distribution composed with a family kernel: F(x) = R(G(x)),
/// f(x) = g(x) * r(G(x)). Immutable; all const member functions are pure and
/// safe to call concurrently (sample owns its generator state per call).
class TransmutedDistribution {
public:
    /// Checked construction: throws std::domain_error when params lie outside
    /// the family's parameter range.
    TransmutedDistribution(std::shared_ptr<const BaselineDistribution> baseline,
                           Family family, std::vector<double> params);

    /// Bypasses the range check. Needed to evaluate deliberately invalid
    /// members (the resulting F may fail to be a cdf).
    static TransmutedDistribution unchecked(std::shared_ptr<const BaselineDistribution> baseline,
                                            Family family, std::vector<double> params);

    double cdf(double x) const;
    double pdf(double x) const;

    /// x = G^{-1}(t*) with R(t*) = u, for u in [0,1); throws std::domain_error
    /// otherwise. Requires a valid (possibly boundary-valid) kernel.
    double quantile(double u) const;

    /// n inverse-transform draws from a seeded uniform stream (mt19937_64,
    /// top 53 bits). Deterministic given the seed; throws std::domain_error
    /// when n == 0.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    Family family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    const TransmutationKernel& kernel() const { return kernel_; }
    const BaselineDistribution& baseline() const { return *baseline_; }
    std::shared_ptr<const BaselineDistribution> baseline_ptr() const { return baseline_; }

private:
    struct unchecked_tag {};
    TransmutedDistribution(unchecked_tag, std::shared_ptr<const BaselineDistribution> baseline,
                           Family family, std::vector<double> params);

    std::shared_ptr<const BaselineDistribution> baseline_;
    Family family_;
    std::vector<double> params_;
    TransmutationKernel kernel_;
};

}  // namespace ctrans
