#include "ctrans/transmuted.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctrans {

TransmutedDistribution::TransmutedDistribution(
    std::shared_ptr<const BaselineDistribution> baseline, Family family,
    std::vector<double> params)
    : TransmutedDistribution(unchecked_tag{}, std::move(baseline), family, std::move(params)) {
    if (!in_range(family_, params_)) {
        throw std::domain_error("TransmutedDistribution: parameters outside the range of family " +
                                std::string(family_name(family_)) +
                                " (use unchecked() to evaluate anyway)");
    }
}

TransmutedDistribution::TransmutedDistribution(
    unchecked_tag, std::shared_ptr<const BaselineDistribution> baseline, Family family,
    std::vector<double> params)
    : baseline_(std::move(baseline)),
      family_(family),
      params_(std::move(params)),
      kernel_(kernel_of(family_, params_)) {
    if (!baseline_) throw std::invalid_argument("TransmutedDistribution: null baseline");
}

TransmutedDistribution TransmutedDistribution::unchecked(
    std::shared_ptr<const BaselineDistribution> baseline, Family family,
    std::vector<double> params) {
    return TransmutedDistribution(unchecked_tag{}, std::move(baseline), family,
                                  std::move(params));
}

double TransmutedDistribution::cdf(double x) const { return kernel_.cdf(baseline_->cdf(x)); }

double TransmutedDistribution::pdf(double x) const {
    return baseline_->pdf(x) * kernel_.density(baseline_->cdf(x));
}

double TransmutedDistribution::quantile(double u) const {
    if (!(u >= 0.0) || u >= 1.0) {
        throw std::domain_error("TransmutedDistribution::quantile: u must lie in [0,1)");
    }
    return baseline_->quantile(kernel_.inverse_cdf(u));
}

std::vector<double> TransmutedDistribution::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) throw std::domain_error("TransmutedDistribution::sample: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // top 53 bits -> uniform on [0, 1), never exactly 1
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        out.push_back(quantile(u));
    }
    return out;
}

}  // namespace ctrans
