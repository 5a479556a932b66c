#include "ctrans/format.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace ctrans {

std::string format_sig(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
}

std::string fit_result_json(const FitResult& result) {
    nlohmann::ordered_json j;
    j["family"] = std::string(family_name(result.family));
    j["x0"] = result.x0;
    j["alpha"] = result.alpha;
    j["params"] = result.params;
    j["neg_log_lik"] = result.neg_log_lik;
    j["aic"] = result.aic;
    j["aicc"] = result.aicc;
    j["bic"] = result.bic;
    j["k"] = result.k;
    j["n"] = result.n;
    j["converged"] = result.converged;
    j["boundary"] = result.boundary;
    return j.dump(2);
}

void write_comparison_tsv(const ComparisonTable& table, std::ostream& out) {
    out << "family\tnegloglik\taic\taicc\tbic\trank_negloglik\trank_aic\trank_aicc\trank_bic\n";
    for (const auto& row : table.rows) {
        out << family_name(row.fit.family) << '\t' << format_sig(row.fit.neg_log_lik, 6) << '\t'
            << format_sig(row.fit.aic, 6) << '\t' << format_sig(row.fit.aicc, 6) << '\t'
            << format_sig(row.fit.bic, 6) << '\t' << row.rank_neg_log_lik << '\t' << row.rank_aic
            << '\t' << row.rank_aicc << '\t' << row.rank_bic << '\n';
    }
}

}  // namespace ctrans
