#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "ctrans/dataset.hpp"
#include "ctrans/format.hpp"
#include "test_support.hpp"

TEST_CASE("significant-digit formatting") {
    CHECK(ctrans::format_sig(380.66521236, 6) == "380.665");
    CHECK(ctrans::format_sig(-0.908, 6) == "-0.908");
    CHECK(ctrans::format_sig(3.0, 6) == "3");
    CHECK(ctrans::format_sig(0.09178269205148015, 12) == "0.0917826920515");
}

TEST_CASE("fit result JSON carries the full contract") {
    ctrans::FitResult result;
    result.family = ctrans::Family::MG;
    result.x0 = 318.0;
    result.alpha = 0.719;
    result.params = {0.092, 0.0};
    result.neg_log_lik = 380.665;
    result.aic = 767.33;
    result.aicc = 768.016;
    result.bic = 772.321;
    result.k = 3;
    result.n = 39;
    result.converged = true;
    result.boundary = {false, true};

    const auto parsed = nlohmann::json::parse(ctrans::fit_result_json(result));
    CHECK(parsed["family"] == "mg");
    CHECK(parsed["x0"] == 318.0);
    CHECK(parsed["alpha"] == 0.719);
    CHECK(parsed["params"] == nlohmann::json::array({0.092, 0.0}));
    CHECK(parsed["neg_log_lik"] == 380.665);
    CHECK(parsed["k"] == 3);
    CHECK(parsed["n"] == 39);
    CHECK(parsed["converged"] == true);
    CHECK(parsed["boundary"] == nlohmann::json::array({false, true}));
}

TEST_CASE("comparison TSV layout") {
    ctrans::ComparisonTable table;
    ctrans::ComparisonRow row;
    row.fit.family = ctrans::Family::MG;
    row.fit.neg_log_lik = 380.665;
    row.fit.aic = 767.33;
    row.fit.aicc = 768.016;
    row.fit.bic = 772.321;
    row.rank_neg_log_lik = row.rank_aic = row.rank_aicc = row.rank_bic = 1;
    table.rows.push_back(row);

    std::ostringstream out;
    ctrans::write_comparison_tsv(table, out);
    CHECK(out.str() ==
          "family\tnegloglik\taic\taicc\tbic\trank_negloglik\trank_aic\trank_aicc\trank_bic\n"
          "mg\t380.665\t767.33\t768.016\t772.321\t1\t1\t1\t1\n");
}

TEST_CASE("data parsing accepts mixed separators and comments") {
    std::istringstream in(
        "# flood rates\n"
        "318, 726 829\n"
        "\n"
        "  970\t1300\n"
        "1.46e3\n");
    const auto values = ctrans::parse_values(in);
    CHECK(values == std::vector{318.0, 726.0, 829.0, 970.0, 1300.0, 1460.0});
}

TEST_CASE("data parsing reports the offending line") {
    std::istringstream in("318\n726\noops\n829\n");
    try {
        ctrans::parse_values(in);
        FAIL("expected ParseError");
    } catch (const ctrans::ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("dataset validation") {
    CHECK_THROWS_AS(ctrans::Dataset({}), std::domain_error);
    CHECK_THROWS_AS(ctrans::Dataset({1.0, -2.0}), std::domain_error);
    CHECK_THROWS_AS(ctrans::Dataset({1.0, 0.0}), std::domain_error);
    const ctrans::Dataset data({3.0, 1.0, 2.0});
    CHECK(data.x0() == 1.0);
    CHECK(data.size() == 3);
}

TEST_CASE("summary statistics use interpolated quartiles") {
    const std::vector values{4.0, 1.0, 3.0, 2.0};
    const auto stats = ctrans::summarize(values);
    CHECK(stats.n == 4);
    CHECK(stats.q1 == doctest::Approx(1.75));
    CHECK(stats.median == doctest::Approx(2.5));
    CHECK(stats.q3 == doctest::Approx(3.25));
    CHECK(stats.mean == doctest::Approx(2.5));

    const auto floyd =
        ctrans::read_data_file(testsupport::data_path("floyd.txt"));
    const auto fs = ctrans::summarize(floyd.values());
    CHECK(fs.n == 39);
    CHECK(fs.min == 318.0);
    CHECK(fs.q1 == doctest::Approx(1590.0));
    CHECK(fs.median == doctest::Approx(3570.0));
    CHECK(fs.mean == doctest::Approx(6771.0).epsilon(1e-4));
    CHECK(fs.q3 == doctest::Approx(6725.0));
    CHECK(fs.max == 71500.0);
}
