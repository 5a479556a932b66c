#include "ctrans/equivalence.hpp"

#include <cmath>
#include <stdexcept>

#include "ctrans/family.hpp"

namespace ctrans {

MixtureWeights::MixtureWeights(double p1, double p2, double p3) : pi1(p1), pi2(p2), pi3(p3) {
    const auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(p1) || !in_unit(p2) || !in_unit(p3)) {
        throw std::domain_error("MixtureWeights: each weight must lie in [0,1]");
    }
    if (std::abs(p1 + p2 + p3 - 1.0) > 1e-12) {
        throw std::domain_error("MixtureWeights: weights must sum to 1");
    }
}

namespace {

void require_unit(double g) {
    if (!(g >= 0.0 && g <= 1.0)) {
        throw std::domain_error("order_stat_mixture_cdf: baseline cdf value outside [0,1]");
    }
}

void require_source(Family family, std::span<const double> params, const char* op) {
    if (!in_range(family, params)) {
        throw std::domain_error(std::string(op) + ": parameters outside " +
                                std::string(family_name(family)) + " range");
    }
}

}  // namespace

double order_stat_mixture_cdf(double g, const MixtureWeights& w) {
    require_unit(g);
    const double q = 1.0 - g;
    // P(X_{i:3} <= x) = sum_{r=i..3} C(3,r) g^r (1-g)^{3-r}
    const double p3 = g * g * g;
    const double p2 = 3.0 * g * g * q + p3;
    const double p1 = 3.0 * g * q * q + p2;
    return w.pi1 * p1 + w.pi2 * p2 + w.pi3 * p3;
}

std::vector<double> order_stat_mixture_cdf(std::span<const double> g_values,
                                           const MixtureWeights& w) {
    std::vector<double> out;
    out.reserve(g_values.size());
    for (double g : g_values) out.push_back(order_stat_mixture_cdf(g, w));
    return out;
}

double pair_mixture_cdf(double g, double pi) {
    require_unit(g);
    if (!(pi >= 0.0 && pi <= 1.0)) {
        throw std::domain_error("pair_mixture_cdf: pi must lie in [0,1]");
    }
    const double min_cdf = 1.0 - (1.0 - g) * (1.0 - g);
    const double max_cdf = g * g;
    return pi * min_cdf + (1.0 - pi) * max_cdf;
}

std::vector<double> weights_to_mg(const MixtureWeights& w) {
    return {3.0 * w.pi1, 3.0 * w.pi2};
}

std::vector<double> map_mr18a_to_mg(std::span<const double> params) {
    require_source(Family::MR18a, params, "map_mr18a_to_mg");
    return {params[0] + 1.0, params[1] + 1.0};
}

std::vector<double> map_mg_to_mr18a(std::span<const double> params) {
    require_source(Family::MG, params, "map_mg_to_mr18a");
    return {params[0] - 1.0, params[1] - 1.0};
}

std::vector<double> map_mr18b_to_mg(std::span<const double> params) {
    require_source(Family::MR18b, params, "map_mr18b_to_mg");
    return {1.0 + params[0] + params[1], 1.0 - params[1]};
}

std::vector<double> map_mg_to_mr18b(std::span<const double> params) {
    require_source(Family::MG, params, "map_mg_to_mr18b");
    return {params[0] + params[1] - 2.0, 1.0 - params[1]};
}

std::vector<double> embed_a_in_mg(double lambda) {
    // The embedding is established on [-1,1] only; the A-family's extended
    // range (-1,3] is a different statement and is not extrapolated here.
    if (!(lambda >= -1.0 && lambda <= 1.0)) {
        throw std::domain_error("embed_a_in_mg: lambda must lie in [-1,1]");
    }
    return {1.0 + lambda, 1.0 - lambda};
}

std::vector<double> embed_r19_in_mg(double lambda) {
    if (!(lambda >= -0.5 && lambda <= 1.0)) {
        throw std::domain_error("embed_r19_in_mg: lambda must lie in [-1/2,1]");
    }
    return {1.0 - lambda, 1.0 + 2.0 * lambda};
}

}  // namespace ctrans
