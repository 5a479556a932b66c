#pragma once

#include <span>
#include <vector>

#include "ctrans/fit.hpp"

namespace ctrans {

/// Absolute tolerance within which two criterion values count as tied when
/// ranking. Reparameterized families that share an optimum agree to ~1e-6
/// after fitting, while distinct models differ by ~0.2 or more; 5e-3 sits
/// safely between.
inline constexpr double kRankTolerance = 5e-3;

struct ComparisonRow {
    FitResult fit;
    int rank_neg_log_lik = 0;
    int rank_aic = 0;
    int rank_aicc = 0;
    int rank_bic = 0;
};

/// Rows sorted by neg_log_lik ascending, each criterion ranked independently.
struct ComparisonTable {
    std::vector<ComparisonRow> rows;
};

/// Minimum-rank ("1,1,1,4") competition ranks of `values`, grouping values
/// that differ from their group leader by at most `tol`.
std::vector<int> min_tie_ranks(std::span<const double> values, double tol = kRankTolerance);

/// Fits every family on the dataset and ranks the results.
ComparisonTable compare(const Dataset& data, std::span<const Family> families,
                        const FitConfig& config = {});

}  // namespace ctrans
