#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ctrans/family.hpp"
#include "ctrans/kernel.hpp"

namespace ctrans {

struct ValidityCertificate {
    bool valid = false;
    double min_value = 0.0;  // min of r over [0,1]
    double argmin = 0.0;     // a t attaining it
};

/// Decides analytically whether the kernel is a density on [0,1]: the minimum
/// of the quadratic r is attained at an endpoint or, when c2 > 0, at the
/// parabola vertex -c1/(2*c2) if that lies inside (0,1). Valid means
/// min >= -1e-12; the slack keeps boundary kernels (min exactly 0, e.g. the
/// extended-range endpoints) valid under floating-point rounding.
ValidityCertificate kernel_is_valid(const TransmutationKernel& kernel);

/// Evenly spaced closed grid lo, lo+step, ..., hi. Points are computed as
/// lo + i*step, never by accumulation.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;

    /// Number of grid points; throws std::invalid_argument when step <= 0 or
    /// hi < lo.
    std::size_t size() const;
    double point(std::size_t i) const { return lo + static_cast<double>(i) * step; }
};

/// Kernel-validity grid over parameter space. Cells are computed from the
/// kernel itself, not from range membership, so the scan shows the true
/// validity region against any published range.
struct RegionScan {
    Family family = Family::MG;
    GridSpec axis1;
    std::optional<GridSpec> axis2;
    std::vector<bool> cells;  // row-major: axis1 outer, axis2 inner

    std::size_t rows() const { return axis1.size(); }
    std::size_t cols() const { return axis2 ? axis2->size() : 1; }
    bool cell(std::size_t i, std::size_t j) const { return cells[i * cols() + j]; }
};

/// Evaluates kernel_is_valid(kernel_of(family, params)) over the grid.
/// For arity-2 families either axis2 or fixed_param2 must be provided; for
/// arity-1 families both must be absent. Deterministic, row-major.
RegionScan region_scan(Family family, const GridSpec& axis1,
                       std::optional<GridSpec> axis2 = std::nullopt,
                       std::optional<double> fixed_param2 = std::nullopt);

/// CSV with header `param1,param2,valid` (`param1,valid` for 1-D scans),
/// valid in {0,1}, rows in row-major order, coordinates at 6 significant
/// digits.
void write_region_csv(const RegionScan& scan, std::ostream& out);

}  // namespace ctrans
