#pragma once

#include <span>
#include <vector>

namespace ctrans {

/// Mixture weights over the order statistics of three i.i.d. draws.
/// Each weight lies in [0,1] and they sum to 1 within 1e-12 (enforced).
struct MixtureWeights {
    double pi1;
    double pi2;
    double pi3;

    MixtureWeights(double p1, double p2, double p3);
};

/// Order-statistics mixture cdf at a baseline cdf value g in [0,1]:
/// sum_i w_i * P(X_{i:3} <= x) with P(X_{i:3} <= x) given by the binomial
/// tail sum. This is the generative construction behind the MG family and
/// serves as its independent oracle.
double order_stat_mixture_cdf(double g, const MixtureWeights& w);
std::vector<double> order_stat_mixture_cdf(std::span<const double> g_values,
                                           const MixtureWeights& w);

/// The two-draw analogue: F = pi * P(X_{1:2} <= x) + (1-pi) * P(X_{2:2} <= x),
/// which equals the quadratic transmutation with lambda = 2*pi - 1. Oracle
/// for the QT family.
double pair_mixture_cdf(double g, double pi);

/// (pi1, pi2, pi3) -> (3*pi1, 3*pi2), always inside S_MG.
std::vector<double> weights_to_mg(const MixtureWeights& w);

/// Reparameterization maps between the equivalent two-parameter families.
/// Each throws std::domain_error when the input lies outside the source
/// range, and lands inside the target range; the cdfs agree pointwise.
std::vector<double> map_mr18a_to_mg(std::span<const double> params);  // (l1+1, l2+1)
std::vector<double> map_mg_to_mr18a(std::span<const double> params);  // (l1-1, l2-1)
std::vector<double> map_mr18b_to_mg(std::span<const double> params);  // (1+l1+l2, 1-l2)
std::vector<double> map_mg_to_mr18b(std::span<const double> params);  // (l1+l2-2, 1-l2)

/// Sub-family embeddings into MG. The domains are exactly the intervals on
/// which the embedding is established; out-of-domain inputs are rejected
/// rather than extrapolated.
std::vector<double> embed_a_in_mg(double lambda);    // [-1,1] -> (1+l, 1-l)
std::vector<double> embed_r19_in_mg(double lambda);  // [-1/2,1] -> (1-l, 1+2l)

}  // namespace ctrans
