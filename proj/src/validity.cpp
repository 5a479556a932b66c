#include "ctrans/validity.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ctrans/format.hpp"

namespace ctrans {

namespace {
// Boundary kernels (min exactly 0 at the extended-range endpoints) must stay
// valid despite rounding in the vertex evaluation.
constexpr double kValidityTolerance = -1e-12;
}  // namespace

ValidityCertificate kernel_is_valid(const TransmutationKernel& kernel) {
    double min_value = kernel.density(0.0);
    double argmin = 0.0;
    const double at_one = kernel.density(1.0);
    if (at_one < min_value) {
        min_value = at_one;
        argmin = 1.0;
    }
    if (kernel.c2 > 0.0) {
        const double vertex = -kernel.c1 / (2.0 * kernel.c2);
        if (vertex > 0.0 && vertex < 1.0) {
            const double at_vertex = kernel.density(vertex);
            if (at_vertex < min_value) {
                min_value = at_vertex;
                argmin = vertex;
            }
        }
    }
    return {min_value >= kValidityTolerance, min_value, argmin};
}

std::size_t GridSpec::size() const {
    if (!(step > 0.0)) throw std::invalid_argument("GridSpec: step must be positive");
    if (hi < lo) throw std::invalid_argument("GridSpec: hi must be >= lo");
    // Half-ulp-ish slack so that hi itself lands on the grid despite rounding.
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

RegionScan region_scan(Family family, const GridSpec& axis1, std::optional<GridSpec> axis2,
                       std::optional<double> fixed_param2) {
    const auto& spec = family_spec(family);
    if (spec.arity == 1) {
        if (axis2 || fixed_param2) {
            throw std::invalid_argument("region_scan: family " + std::string(spec.name) +
                                        " has one parameter; axis2 must be absent");
        }
    } else if (spec.arity == 2) {
        if (!axis2 && !fixed_param2) {
            throw std::invalid_argument("region_scan: family " + std::string(spec.name) +
                                        " has two parameters; provide axis2 or a fixed value");
        }
    } else {
        throw std::invalid_argument("region_scan: family " + std::string(spec.name) +
                                    " has no scan parameters");
    }

    RegionScan scan;
    scan.family = family;
    scan.axis1 = axis1;
    scan.axis2 = axis2;
    const std::size_t rows = axis1.size();
    const std::size_t cols = axis2 ? axis2->size() : 1;
    scan.cells.resize(rows * cols);

    std::vector<double> params(spec.arity);
    for (std::size_t i = 0; i < rows; ++i) {
        params[0] = axis1.point(i);
        for (std::size_t j = 0; j < cols; ++j) {
            if (axis2) {
                params[1] = axis2->point(j);
            } else if (fixed_param2) {
                params[1] = *fixed_param2;
            }
            scan.cells[i * cols + j] = kernel_is_valid(kernel_of(family, params)).valid;
        }
    }
    return scan;
}

void write_region_csv(const RegionScan& scan, std::ostream& out) {
    const bool two_d = scan.axis2.has_value();
    out << (two_d ? "param1,param2,valid\n" : "param1,valid\n");
    const std::size_t rows = scan.rows();
    const std::size_t cols = scan.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out << format_sig(scan.axis1.point(i), 6);
            if (two_d) out << ',' << format_sig(scan.axis2->point(j), 6);
            out << ',' << (scan.cell(i, j) ? '1' : '0') << '\n';
        }
    }
}

}  // namespace ctrans
