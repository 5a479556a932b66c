#pragma once

#include <iosfwd>
#include <string>

#include "ctrans/compare.hpp"
#include "ctrans/fit.hpp"

namespace ctrans {

/// printf-style %. <digits> g formatting.
std::string format_sig(double value, int digits);

/// JSON object with fields family, x0, alpha, params, neg_log_lik, aic, aicc,
/// bic, k, n, converged, boundary (in that order).
std::string fit_result_json(const FitResult& result);

/// TSV with columns family, negloglik, aic, aicc, bic, rank_negloglik,
/// rank_aic, rank_aicc, rank_bic; numeric values at 6 significant digits.
void write_comparison_tsv(const ComparisonTable& table, std::ostream& out);

}  // namespace ctrans
