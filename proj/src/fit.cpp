#include "ctrans/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ctrans/criteria.hpp"
#include "ctrans/likelihood.hpp"

namespace ctrans {

namespace {

// Finite stand-in for -infinity inside the simplex: keeps the search
// well-defined when a trial point makes some r(G(x_i)) <= 0.
constexpr double kSentinel = 1e15;

// x = [alpha, theta...]
struct Objective {
    Family family;
    const Dataset* data;
    const ConstraintSet* constraints;
    double alpha_floor;

    double neg_log_lik(std::span<const double> x) const {
        const double alpha = x[0];
        if (!(alpha > 0.0)) return kSentinel;
        const double ll = log_likelihood(family, *data, alpha, x.subspan(1));
        return std::isfinite(ll) ? -ll : kSentinel;
    }

    // neg_log_lik minus mu * sum(log slack); large penalties outside the
    // feasible region steer reflections back inside.
    double barrier(std::span<const double> x, double mu) const {
        const double alpha_slack = x[0] - alpha_floor;
        if (alpha_slack <= 0.0) return kSentinel * (1.0 + std::min(-alpha_slack, 1.0));
        double log_slacks = std::log(alpha_slack);
        const auto theta = x.subspan(1);
        for (const auto& ineq : constraints->inequalities()) {
            const double s = ineq.slack(theta);
            if (s <= 0.0) return kSentinel * (1.0 + std::min(-s, 1.0));
            log_slacks += std::log(s);
        }
        const double nll = neg_log_lik(x);
        if (nll >= kSentinel) return kSentinel;
        return nll - mu * log_slacks;
    }
};

struct BarrierSolution {
    std::vector<double> x;
    double neg_log_lik = kSentinel;
    bool converged = false;
};

BarrierSolution solve_from_start(const Objective& objective, std::vector<double> x,
                                 std::vector<double> scale, const FitConfig& config) {
    BarrierSolution solution;
    double prev = std::numeric_limits<double>::infinity();
    for (int outer = 0; outer < config.max_outer_iterations; ++outer) {
        const double mu = config.barrier_mu0 * std::pow(config.barrier_shrink, outer);
        const auto inner = nelder_mead(
            [&](std::span<const double> p) { return objective.barrier(p, mu); }, x, scale,
            config.simplex);
        x = inner.point;
        const double current = objective.neg_log_lik(x);
        if (outer > 0 &&
            std::abs(current - prev) <= config.outer_rel_tol * (1.0 + std::abs(current))) {
            solution.converged = true;
            prev = current;
            break;
        }
        prev = current;
        // The optimum barely moves between mu levels; tighten the simplex.
        for (double& s : scale) s = std::max(0.3 * s, 1e-7);
    }
    solution.x = std::move(x);
    solution.neg_log_lik = prev;
    return solution;
}

// Intersection of the boundary hyperplanes of `active` (indices into the
// constraint list), reached from theta by orthogonal projection. Supports the
// shipped dimensions (1 and 2) with one or two active constraints.
std::optional<std::vector<double>> project_onto(const ConstraintSet& constraints,
                                                std::span<const double> theta,
                                                std::span<const std::size_t> active) {
    const auto& ineqs = constraints.inequalities();
    std::vector<double> out(theta.begin(), theta.end());
    if (active.size() == 1) {
        const auto& ineq = ineqs[active[0]];
        double aa = 0.0, residual = -ineq.bound;
        for (std::size_t j = 0; j < out.size(); ++j) {
            aa += ineq.coeffs[j] * ineq.coeffs[j];
            residual += ineq.coeffs[j] * out[j];
        }
        if (aa <= 0.0) return std::nullopt;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= ineq.coeffs[j] * residual / aa;
        return out;
    }
    if (active.size() == 2 && out.size() == 2) {
        const auto& a = ineqs[active[0]];
        const auto& b = ineqs[active[1]];
        const double det = a.coeffs[0] * b.coeffs[1] - a.coeffs[1] * b.coeffs[0];
        if (std::abs(det) < 1e-12) return std::nullopt;
        out[0] = (a.bound * b.coeffs[1] - a.coeffs[1] * b.bound) / det;
        out[1] = (a.coeffs[0] * b.bound - a.bound * b.coeffs[0]) / det;
        return out;
    }
    return std::nullopt;
}

}  // namespace

FitResult fit(Family family, const Dataset& data, const FitConfig& config) {
    const FamilySpec& spec = family_spec(family);
    const int k = 1 + spec.arity;
    if (data.size() < static_cast<std::size_t>(k) + 2) {
        throw std::domain_error("fit: need n >= k+2 observations for family " +
                                std::string(spec.name));
    }

    const Objective objective{family, &data, &spec.constraints, config.alpha_floor};
    const double alpha_p = pareto_alpha_mle(data);

    // Starting points: constraint-set centroid plus points 60% of the way to
    // each vertex, crossed with three alpha multipliers, capped at max_starts.
    std::vector<std::vector<double>> theta_starts;
    if (spec.arity == 0) {
        theta_starts.push_back({});
    } else {
        const auto centroid = spec.constraints.centroid();
        theta_starts.push_back(centroid);
        for (const auto& vertex : spec.constraints.vertices()) {
            std::vector<double> point(centroid.size());
            for (std::size_t j = 0; j < point.size(); ++j) {
                point[j] = centroid[j] + 0.6 * (vertex[j] - centroid[j]);
            }
            const bool duplicate =
                std::any_of(theta_starts.begin(), theta_starts.end(), [&](const auto& q) {
                    for (std::size_t j = 0; j < point.size(); ++j) {
                        if (std::abs(point[j] - q[j]) > 1e-12) return false;
                    }
                    return true;
                });
            if (!duplicate) theta_starts.push_back(point);
        }
    }

    std::vector<double> theta_scale(spec.arity, 0.2);
    if (spec.arity > 0) {
        const auto [lo, hi] = spec.constraints.bounding_box();
        for (int j = 0; j < spec.arity; ++j) {
            theta_scale[j] = std::max(0.15 * (hi[j] - lo[j]), 1e-3);
        }
    }

    BarrierSolution best;
    int used_starts = 0;
    for (const auto& theta : theta_starts) {
        for (const double mult : {0.5, 1.0, 2.0}) {
            if (used_starts >= config.max_starts) break;
            ++used_starts;
            std::vector<double> x;
            x.reserve(1 + theta.size());
            x.push_back(mult * alpha_p);
            x.insert(x.end(), theta.begin(), theta.end());
            std::vector<double> scale;
            scale.push_back(std::max(0.3 * x[0], 1e-4));
            scale.insert(scale.end(), theta_scale.begin(), theta_scale.end());
            auto candidate = solve_from_start(objective, std::move(x), std::move(scale), config);
            // Strictly-better keeps the earliest start on ties.
            if (candidate.neg_log_lik < best.neg_log_lik) best = std::move(candidate);
        }
    }

    if (best.x.empty() || best.neg_log_lik >= kSentinel) {
        throw std::runtime_error("fit: no start produced a finite likelihood for family " +
                                 std::string(spec.name));
    }

    double alpha_hat = best.x[0];
    std::vector<double> theta_hat(best.x.begin() + 1, best.x.end());
    double nll_hat = best.neg_log_lik;

    // The barrier cannot reach the boundary, but boundary optima are real;
    // snap nearby estimates onto the active constraints and keep the snapped
    // point unless it costs more than snap_accept in log-likelihood.
    if (spec.arity > 0) {
        const auto& ineqs = spec.constraints.inequalities();
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < ineqs.size(); ++i) {
            if (ineqs[i].slack(theta_hat) < config.snap_distance) active.push_back(i);
        }
        if (!active.empty()) {
            std::vector<std::vector<std::size_t>> subsets;
            if (active.size() >= 2) {
                for (std::size_t i = 0; i < active.size(); ++i) {
                    for (std::size_t j = i + 1; j < active.size(); ++j) {
                        subsets.push_back({active[i], active[j]});
                    }
                }
            }
            for (std::size_t i = 0; i < active.size(); ++i) subsets.push_back({active[i]});

            for (const auto& subset : subsets) {
                auto snapped = project_onto(spec.constraints, theta_hat, subset);
                if (!snapped || !spec.constraints.contains(*snapped, 1e-9)) continue;
                const double ll = log_likelihood(family, data, alpha_hat, *snapped);
                if (std::isfinite(ll) && -ll <= nll_hat + config.snap_accept) {
                    theta_hat = *snapped;
                    nll_hat = -ll;
                    break;
                }
            }
        }
    }

    FitResult result;
    result.family = family;
    result.x0 = data.x0();
    result.alpha = alpha_hat;
    result.params = theta_hat;
    result.neg_log_lik = nll_hat;
    result.k = k;
    result.n = data.size();
    result.converged = best.converged;
    const auto criteria = information_criteria(nll_hat, k, data.size());
    result.aic = criteria.aic;
    result.aicc = criteria.aicc;
    result.bic = criteria.bic;

    result.boundary.assign(spec.arity, false);
    for (const auto& ineq : spec.constraints.inequalities()) {
        if (ineq.slack(result.params) > config.snap_distance) continue;
        for (int j = 0; j < spec.arity; ++j) {
            if (ineq.coeffs[j] != 0.0) result.boundary[j] = true;
        }
    }
    return result;
}

}  // namespace ctrans
