#include "ctrans/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace ctrans {

Dataset::Dataset(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::domain_error("Dataset: no observations");
    for (double v : values_) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw std::domain_error("Dataset: observations must be positive finite reals");
        }
    }
    x0_ = *std::min_element(values_.begin(), values_.end());
    log_ratios_.reserve(values_.size());
    for (double v : values_) {
        sum_log_ += std::log(v);
        log_ratios_.push_back(std::log(x0_ / v));
    }
}

std::vector<double> parse_values(std::istream& in) {
    std::vector<double> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // full-line comments only
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string token;
        for (std::size_t pos = first; pos <= line.size(); ++pos) {
            const char c = pos < line.size() ? line[pos] : '\n';
            if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                if (!token.empty()) {
                    double value = 0.0;
                    const char* begin = token.data();
                    const char* end = begin + token.size();
                    auto [ptr, ec] = std::from_chars(begin, end, value);
                    if (ec != std::errc{} || ptr != end) {
                        throw ParseError("invalid numeric token '" + token + "'", line_no);
                    }
                    out.push_back(value);
                    token.clear();
                }
            } else {
                token.push_back(c);
            }
        }
    }
    return out;
}

Dataset read_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open data file '" + path + "'", 0);
    auto values = parse_values(in);
    if (values.empty()) throw ParseError("data file '" + path + "' contains no values", 0);
    return Dataset(std::move(values));
}

namespace {

// R type-7 quantile: linear interpolation of order statistics.
double interpolated_quantile(const std::vector<double>& sorted, double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

SummaryStats summarize(std::span<const double> values) {
    if (values.empty()) throw std::domain_error("summarize: no observations");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    SummaryStats stats;
    stats.n = sorted.size();
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.q1 = interpolated_quantile(sorted, 0.25);
    stats.median = interpolated_quantile(sorted, 0.5);
    stats.q3 = interpolated_quantile(sorted, 0.75);
    stats.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
                 static_cast<double>(sorted.size());
    return stats;
}

}  // namespace ctrans
