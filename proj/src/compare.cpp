#include "ctrans/compare.hpp"

#include <algorithm>
#include <numeric>

namespace ctrans {

std::vector<int> min_tie_ranks(std::span<const double> values, double tol) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> ranks(values.size(), 0);
    double group_leader = 0.0;
    int group_rank = 1;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const double v = values[order[pos]];
        if (pos == 0 || v - group_leader > tol) {
            group_leader = v;
            group_rank = static_cast<int>(pos) + 1;
        }
        ranks[order[pos]] = group_rank;
    }
    return ranks;
}

ComparisonTable compare(const Dataset& data, std::span<const Family> families,
                        const FitConfig& config) {
    ComparisonTable table;
    table.rows.reserve(families.size());
    for (Family family : families) {
        table.rows.push_back({fit(family, data, config), 0, 0, 0, 0});
    }
    std::stable_sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
        return a.fit.neg_log_lik < b.fit.neg_log_lik;
    });

    std::vector<double> nll, aic, aicc, bic;
    for (const auto& row : table.rows) {
        nll.push_back(row.fit.neg_log_lik);
        aic.push_back(row.fit.aic);
        aicc.push_back(row.fit.aicc);
        bic.push_back(row.fit.bic);
    }
    const auto r_nll = min_tie_ranks(nll);
    const auto r_aic = min_tie_ranks(aic);
    const auto r_aicc = min_tie_ranks(aicc);
    const auto r_bic = min_tie_ranks(bic);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        table.rows[i].rank_neg_log_lik = r_nll[i];
        table.rows[i].rank_aic = r_aic[i];
        table.rows[i].rank_aicc = r_aicc[i];
        table.rows[i].rank_bic = r_bic[i];
    }
    return table;
}

}  // namespace ctrans
