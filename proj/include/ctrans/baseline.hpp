#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ctrans {

/// Continuous baseline distribution G. The cdf maps the support onto [0,1]
/// and quantile() inverts it on the interior. Implementations are immutable
/// after construction and safe to share across threads.
class BaselineDistribution {
public:
    virtual ~BaselineDistribution() = default;

    virtual double cdf(double x) const = 0;
    virtual double pdf(double x) const = 0;
    virtual double log_pdf(double x) const = 0;

    /// Inverse cdf for u in [0,1); throws std::domain_error otherwise.
    virtual double quantile(double u) const = 0;

    virtual double support_lower() const = 0;
    virtual double support_upper() const = 0;
    virtual std::string name() const = 0;
};

/// Pareto(x0, alpha): cdf(x) = 1 - (x0/x)^alpha for x >= x0, 0 below.
/// cdf and pdf are total functions (0 below the scale) so that fitting code
/// can probe arbitrary x.
class Pareto final : public BaselineDistribution {
public:
    /// Throws std::domain_error unless scale > 0 and shape > 0.
    Pareto(double scale, double shape);

    double cdf(double x) const override;
    double pdf(double x) const override;
    double log_pdf(double x) const override;
    double quantile(double u) const override;

    double support_lower() const override { return scale_; }
    double support_upper() const override;
    std::string name() const override { return "pareto"; }

    double scale() const { return scale_; }
    double shape() const { return shape_; }

private:
    double scale_;
    double shape_;
};

/// Baseline factory used by the CLI, e.g. make_baseline("pareto", {318, 0.412}).
/// Throws std::invalid_argument for unknown names or wrong parameter counts.
std::shared_ptr<const BaselineDistribution> make_baseline(const std::string& name,
                                                          const std::vector<double>& params);

}  // namespace ctrans
