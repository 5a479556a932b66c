#pragma once

#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ctrans/kernel.hpp"

namespace ctrans {

/// The shipped families. Plain names carry the ranges published with each
/// formula; the M-prefixed entries reuse the same cdf formula under the
/// corrected or extended range. QT is the quadratic transmutation, Pareto the
/// untransmuted baseline row used by the fitting front end.
enum class Family {
    QT,
    G,
    MG,
    A,
    MA,
    R18a,
    MR18a,
    R18b,
    MR18b,
    R19,
    MR19,
    R23,
    Pareto,
};

/// One linear inequality coeffs . theta <= bound on the transmutation
/// parameter vector.
struct LinearInequality {
    std::vector<double> coeffs;
    double bound = 0.0;

    double slack(std::span<const double> theta) const;
};

/// Conjunction of linear inequalities (boxes plus sum constraints). All the
/// shipped sets are bounded convex polytopes in dimension 0, 1 or 2.
class ConstraintSet {
public:
    ConstraintSet() = default;
    ConstraintSet(std::size_t dimension, std::vector<LinearInequality> inequalities);

    std::size_t dimension() const { return dimension_; }
    const std::vector<LinearInequality>& inequalities() const { return inequalities_; }

    /// Non-strict membership: every inequality holds up to `tol` of slack.
    bool contains(std::span<const double> theta, double tol = 0.0) const;

    /// Smallest slack over all inequalities (+inf when there are none).
    double min_slack(std::span<const double> theta) const;

    /// Vertices of the feasible polytope, deduplicated, in a fixed order.
    std::vector<std::vector<double>> vertices() const;

    /// Mean of the vertices; interior for all the shipped sets.
    std::vector<double> centroid() const;

    /// Axis-aligned bounding box of the vertices: (lower, upper).
    std::pair<std::vector<double>, std::vector<double>> bounding_box() const;

    /// Uniform draw from the polytope by rejection from the bounding box.
    std::vector<double> sample(std::mt19937_64& rng) const;

private:
    std::size_t dimension_ = 0;
    std::vector<LinearInequality> inequalities_;
};

struct FamilySpec {
    Family id;
    std::string_view name;  // canonical lower-case CLI name
    int arity;              // number of transmutation parameters (0 for Pareto)
    ConstraintSet constraints;
};

const FamilySpec& family_spec(Family family);
std::string_view family_name(Family family);

/// Case-insensitive lookup of the CLI names (qt, g, mg, a, ma, r18a, mr18a,
/// r18b, mr18b, r19, mr19, r23, pareto).
std::optional<Family> family_from_name(std::string_view name);

std::span<const Family> all_families();
/// Fitting sets used by `compare`: the families as originally published, and
/// the corrected/extended versions.
std::span<const Family> unmodified_family_set();
std::span<const Family> modified_family_set();

/// The family whose constraint set is the corrected/extended range for the
/// same cdf formula (identity when none exists, e.g. QT, R23, Pareto).
Family modified_counterpart(Family family);

/// Coefficient map from family parameters to the kernel. Throws
/// std::invalid_argument when params.size() does not match the family arity.
TransmutationKernel kernel_of(Family family, std::span<const double> params);

/// Non-strict membership of params in the family's parameter range.
/// Throws std::invalid_argument on arity mismatch.
bool in_range(Family family, std::span<const double> params);

}  // namespace ctrans
