#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctrans {

/// Input error carrying the 1-based line number of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line)
        : std::runtime_error(std::move(message)), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A sample of positive observations. Order is preserved as read; x0 is the
/// sample minimum (the MLE of the Pareto scale). Caches the log terms used by
/// the likelihoods.
class Dataset {
public:
    /// Throws std::domain_error when empty or when any value is not a
    /// positive finite real.
    explicit Dataset(std::vector<double> values);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double x0() const { return x0_; }

    /// sum_i ln(x_i)
    double sum_log() const { return sum_log_; }
    /// ln(x0 / x_i), one per observation (all <= 0)
    std::span<const double> log_ratios() const { return log_ratios_; }

private:
    std::vector<double> values_;
    std::vector<double> log_ratios_;
    double x0_ = 0.0;
    double sum_log_ = 0.0;
};

/// Parses numeric text: one number per line or comma/whitespace separated,
/// lines starting with '#' skipped. Non-numeric tokens raise ParseError with
/// the line number; they are never silently dropped.
std::vector<double> parse_values(std::istream& in);

/// parse_values over a file; throws ParseError (line 0) when the file cannot
/// be opened.
Dataset read_data_file(const std::string& path);

/// Quartiles by linear interpolation of order statistics.
struct SummaryStats {
    std::size_t n = 0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

SummaryStats summarize(std::span<const double> values);

}  // namespace ctrans
