#include "ctrans/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ctrans {

namespace {
constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
}  // namespace

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> start, std::span<const double> scale,
                          const SimplexOptions& options) {
    const std::size_t dim = start.size();
    std::vector<std::vector<double>> x(dim + 1, std::vector<double>(start.begin(), start.end()));
    for (std::size_t j = 0; j < dim; ++j) x[j + 1][j] += scale[j];
    std::vector<double> fx(dim + 1);
    for (std::size_t v = 0; v <= dim; ++v) fx[v] = f(x[v]);

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim);
    int iter = 0;
    bool converged = false;

    for (; iter < options.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[dim > 0 ? dim - 1 : 0];

        if (fx[worst] - fx[best] <= options.f_tolerance * (1.0 + std::abs(fx[best]))) {
            converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v <= dim; ++v) {
            if (v == worst) continue;
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += x[v][j];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        for (std::size_t j = 0; j < dim; ++j) {
            trial[j] = centroid[j] + kReflect * (centroid[j] - x[worst][j]);
        }
        const double f_reflect = f(trial);

        if (f_reflect < fx[best]) {
            std::vector<double> expanded(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                expanded[j] = centroid[j] + kExpand * (trial[j] - centroid[j]);
            }
            const double f_expand = f(expanded);
            if (f_expand < f_reflect) {
                x[worst] = std::move(expanded);
                fx[worst] = f_expand;
            } else {
                x[worst] = trial;
                fx[worst] = f_reflect;
            }
        } else if (f_reflect < fx[second_worst]) {
            x[worst] = trial;
            fx[worst] = f_reflect;
        } else {
            const bool outside = f_reflect < fx[worst];
            std::vector<double> contracted(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                const double target = outside ? trial[j] : x[worst][j];
                contracted[j] = centroid[j] + kContract * (target - centroid[j]);
            }
            const double f_contract = f(contracted);
            if (f_contract < (outside ? f_reflect : fx[worst])) {
                x[worst] = std::move(contracted);
                fx[worst] = f_contract;
            } else {
                for (std::size_t v = 0; v <= dim; ++v) {
                    if (v == best) continue;
                    for (std::size_t j = 0; j < dim; ++j) {
                        x[v][j] = x[best][j] + kShrink * (x[v][j] - x[best][j]);
                    }
                    fx[v] = f(x[v]);
                }
            }
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
    return {x[best], fx[best], iter, converged};
}

}  // namespace ctrans
