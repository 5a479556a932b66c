#include "ctrans/family.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ctrans {

double LinearInequality::slack(std::span<const double> theta) const {
    double dot = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) dot += coeffs[j] * theta[j];
    return bound - dot;
}

ConstraintSet::ConstraintSet(std::size_t dimension, std::vector<LinearInequality> inequalities)
    : dimension_(dimension), inequalities_(std::move(inequalities)) {}

bool ConstraintSet::contains(std::span<const double> theta, double tol) const {
    if (theta.size() != dimension_) {
        throw std::invalid_argument("ConstraintSet::contains: wrong parameter count");
    }
    for (const auto& ineq : inequalities_) {
        if (ineq.slack(theta) < -tol) return false;
    }
    return true;
}

double ConstraintSet::min_slack(std::span<const double> theta) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& ineq : inequalities_) m = std::min(m, ineq.slack(theta));
    return m;
}

std::vector<std::vector<double>> ConstraintSet::vertices() const {
    std::vector<std::vector<double>> out;
    const double feas_tol = 1e-9;
    if (dimension_ == 0) {
        out.push_back({});
        return out;
    }
    if (dimension_ == 1) {
        for (const auto& ineq : inequalities_) {
            if (ineq.coeffs[0] == 0.0) continue;
            const double t = ineq.bound / ineq.coeffs[0];
            std::array<double, 1> point{t};
            if (contains(point, feas_tol)) out.push_back({t});
        }
    } else if (dimension_ == 2) {
        // Intersect every pair of boundary lines and keep the feasible points.
        for (std::size_t i = 0; i < inequalities_.size(); ++i) {
            for (std::size_t j = i + 1; j < inequalities_.size(); ++j) {
                const auto& a = inequalities_[i];
                const auto& b = inequalities_[j];
                const double det = a.coeffs[0] * b.coeffs[1] - a.coeffs[1] * b.coeffs[0];
                if (std::abs(det) < 1e-12) continue;
                const double x = (a.bound * b.coeffs[1] - a.coeffs[1] * b.bound) / det;
                const double y = (a.coeffs[0] * b.bound - a.bound * b.coeffs[0]) / det;
                std::array<double, 2> point{x, y};
                if (contains(point, feas_tol)) out.push_back({x, y});
            }
        }
    } else {
        throw std::logic_error("ConstraintSet::vertices: only dimensions 0..2 are supported");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& p, const auto& q) {
                              for (std::size_t j = 0; j < p.size(); ++j) {
                                  if (std::abs(p[j] - q[j]) > 1e-9) return false;
                              }
                              return true;
                          }),
              out.end());
    return out;
}

std::vector<double> ConstraintSet::centroid() const {
    const auto verts = vertices();
    std::vector<double> c(dimension_, 0.0);
    if (verts.empty()) return c;
    for (const auto& v : verts) {
        for (std::size_t j = 0; j < dimension_; ++j) c[j] += v[j];
    }
    for (auto& x : c) x /= static_cast<double>(verts.size());
    return c;
}

std::pair<std::vector<double>, std::vector<double>> ConstraintSet::bounding_box() const {
    const auto verts = vertices();
    std::vector<double> lo(dimension_, std::numeric_limits<double>::infinity());
    std::vector<double> hi(dimension_, -std::numeric_limits<double>::infinity());
    for (const auto& v : verts) {
        for (std::size_t j = 0; j < dimension_; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    }
    return {lo, hi};
}

std::vector<double> ConstraintSet::sample(std::mt19937_64& rng) const {
    if (dimension_ == 0) return {};
    const auto [lo, hi] = bounding_box();
    std::vector<double> point(dimension_);
    for (;;) {
        for (std::size_t j = 0; j < dimension_; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            point[j] = lo[j] + u * (hi[j] - lo[j]);
        }
        if (contains(point)) return point;
    }
}

namespace {

ConstraintSet interval(double lo, double hi) {
    return ConstraintSet(1, {{{-1.0}, -lo}, {{1.0}, hi}});
}

ConstraintSet box2(double lo1, double hi1, double lo2, double hi2) {
    return ConstraintSet(2, {{{-1.0, 0.0}, -lo1},
                             {{1.0, 0.0}, hi1},
                             {{0.0, -1.0}, -lo2},
                             {{0.0, 1.0}, hi2}});
}

ConstraintSet box2_with_sum(double lo1, double hi1, double lo2, double hi2, double sum_lo,
                            double sum_hi) {
    return ConstraintSet(2, {{{-1.0, 0.0}, -lo1},
                             {{1.0, 0.0}, hi1},
                             {{0.0, -1.0}, -lo2},
                             {{0.0, 1.0}, hi2},
                             {{-1.0, -1.0}, -sum_lo},
                             {{1.0, 1.0}, sum_hi}});
}

const std::vector<FamilySpec>& registry() {
    static const std::vector<FamilySpec> specs = [] {
        std::vector<FamilySpec> v;
        v.push_back({Family::QT, "qt", 1, interval(-1.0, 1.0)});
        v.push_back({Family::G, "g", 2, box2(0.0, 1.0, -1.0, 1.0)});
        v.push_back({Family::MG, "mg", 2, box2_with_sum(0.0, 3.0, 0.0, 3.0, 0.0, 3.0)});
        v.push_back({Family::A, "a", 1, interval(-1.0, 1.0)});
        v.push_back({Family::MA, "ma", 1, interval(-1.0, 3.0)});
        v.push_back({Family::R18a, "r18a", 2,
                     box2_with_sum(-1.0, 1.0, -1.0, 1.0, -2.0, 1.0)});
        v.push_back({Family::MR18a, "mr18a", 2,
                     box2_with_sum(-1.0, 2.0, -1.0, 2.0, -2.0, 1.0)});
        v.push_back({Family::R18b, "r18b", 2, box2(-1.0, 1.0, 0.0, 1.0)});
        v.push_back({Family::MR18b, "mr18b", 2,
                     box2_with_sum(-2.0, 1.0, -2.0, 1.0, -1.0, 2.0)});
        v.push_back({Family::R19, "r19", 1, interval(-1.0, 1.0)});
        v.push_back({Family::MR19, "mr19", 1, interval(-2.0, 1.0)});
        v.push_back({Family::R23, "r23", 2, box2(-1.0, 1.0, 0.0, 2.0)});
        v.push_back({Family::Pareto, "pareto", 0, ConstraintSet(0, {})});
        return v;
    }();
    return specs;
}

constexpr std::array<Family, 13> kAllFamilies = {
    Family::QT,   Family::G,     Family::MG,   Family::A,     Family::MA,
    Family::R18a, Family::MR18a, Family::R18b, Family::MR18b, Family::R19,
    Family::MR19, Family::R23,   Family::Pareto};

constexpr std::array<Family, 8> kUnmodifiedSet = {Family::G,   Family::A,   Family::R18a,
                                                  Family::R18b, Family::R19, Family::R23,
                                                  Family::QT,  Family::Pareto};

constexpr std::array<Family, 8> kModifiedSet = {Family::MG,    Family::MA,  Family::MR18a,
                                                Family::MR18b, Family::MR19, Family::R23,
                                                Family::QT,   Family::Pareto};

}  // namespace

const FamilySpec& family_spec(Family family) {
    for (const auto& spec : registry()) {
        if (spec.id == family) return spec;
    }
    throw std::logic_error("family_spec: unknown family");
}

std::string_view family_name(Family family) { return family_spec(family).name; }

std::optional<Family> family_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto& spec : registry()) {
        if (spec.name == lower) return spec.id;
    }
    return std::nullopt;
}

std::span<const Family> all_families() { return kAllFamilies; }
std::span<const Family> unmodified_family_set() { return kUnmodifiedSet; }
std::span<const Family> modified_family_set() { return kModifiedSet; }

Family modified_counterpart(Family family) {
    switch (family) {
        case Family::G: return Family::MG;
        case Family::A: return Family::MA;
        case Family::R18a: return Family::MR18a;
        case Family::R18b: return Family::MR18b;
        case Family::R19: return Family::MR19;
        default: return family;
    }
}

TransmutationKernel kernel_of(Family family, std::span<const double> params) {
    const auto& spec = family_spec(family);
    if (params.size() != static_cast<std::size_t>(spec.arity)) {
        throw std::invalid_argument("kernel_of: expected " + std::to_string(spec.arity) +
                                    " parameter(s) for family " + std::string(spec.name));
    }
    switch (family) {
        case Family::QT: {
            const double l = params[0];
            return {1.0 + l, -2.0 * l, 0.0};
        }
        case Family::G:
        case Family::MG: {
            const double l1 = params[0], l2 = params[1];
            return {l1, 2.0 * (l2 - l1), 3.0 * (1.0 - l2)};
        }
        case Family::A:
        case Family::MA: {
            const double l = params[0];
            return {1.0 + l, -4.0 * l, 3.0 * l};
        }
        case Family::R18a:
        case Family::MR18a: {
            const double l1 = params[0], l2 = params[1];
            return {1.0 + l1, 2.0 * (l2 - l1), -3.0 * l2};
        }
        case Family::R18b:
        case Family::MR18b: {
            const double l1 = params[0], l2 = params[1];
            return {1.0 + l1 + l2, -2.0 * (l1 + 2.0 * l2), 3.0 * l2};
        }
        case Family::R19:
        case Family::MR19: {
            const double l = params[0];
            return {1.0 - l, 6.0 * l, -6.0 * l};
        }
        case Family::R23: {
            const double l = params[0], eta = params[1];
            return {1.0 - l * (eta - 1.0), 2.0 * l * (2.0 * eta - 1.0), -3.0 * l * eta};
        }
        case Family::Pareto:
            return {1.0, 0.0, 0.0};
    }
    throw std::logic_error("kernel_of: unreachable");
}

bool in_range(Family family, std::span<const double> params) {
    const auto& spec = family_spec(family);
    if (params.size() != static_cast<std::size_t>(spec.arity)) {
        throw std::invalid_argument("in_range: wrong parameter count for family " +
                                    std::string(spec.name));
    }
    return spec.constraints.contains(params);
}

}  // namespace ctrans
