#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ctrans/validity.hpp"
#include "test_support.hpp"

using ctrans::Family;
using ctrans::GridSpec;
using ctrans::kernel_is_valid;
using ctrans::TransmutationKernel;

TEST_CASE("validity certificate at reference kernels") {
    const auto uniform = kernel_is_valid({1.0, 0.0, 0.0});
    CHECK(uniform.valid);
    CHECK(uniform.min_value == doctest::Approx(1.0));

    // A-family kernel at the extended-range endpoint lambda = 3
    const auto boundary = kernel_is_valid({4.0, -12.0, 9.0});
    CHECK(boundary.valid);
    CHECK(std::abs(boundary.min_value) < 1e-12);
    CHECK(boundary.argmin == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // just past the endpoint: min (3 - 3.5)/3 = -1/6 at t = 2/3
    const auto invalid = kernel_is_valid({4.5, -14.0, 10.5});
    CHECK(!invalid.valid);
    CHECK(invalid.min_value == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
    CHECK(invalid.argmin == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(testsupport::kernel_grid_min(TransmutationKernel{4.5, -14.0, 10.5}, 10001) ==
          doctest::Approx(-1.0 / 6.0).epsilon(1e-6));
}

TEST_CASE("analytic certificate agrees with a brute-force grid minimum") {
    std::mt19937_64 rng(8080);
    for (int rep = 0; rep < 2000; ++rep) {
        const double c1 = 20.0 * testsupport::uniform01(rng) - 10.0;
        const double c2 = 20.0 * testsupport::uniform01(rng) - 10.0;
        const TransmutationKernel kernel{1.0 - c1 / 2.0 - c2 / 3.0, c1, c2};
        const auto cert = kernel_is_valid(kernel);
        const double grid_min = testsupport::kernel_grid_min(kernel, 10001);
        CHECK(grid_min >= cert.min_value - 1e-12);
        CHECK(grid_min - cert.min_value < 1e-6);  // grid resolution bound
        if (cert.valid != (grid_min >= -1e-12)) {
            CHECK(std::abs(grid_min) < 1e-9);
        }
    }
}

TEST_CASE("modified ranges produce only valid kernels") {
    std::mt19937_64 rng(2718);
    for (const Family family :
         {Family::MG, Family::MA, Family::MR18a, Family::MR18b, Family::MR19, Family::R23}) {
        const auto& constraints = ctrans::family_spec(family).constraints;
        for (int rep = 0; rep < 1000; ++rep) {
            const auto params = constraints.sample(rng);
            CHECK(kernel_is_valid(ctrans::kernel_of(family, params)).valid);
        }
    }
}

TEST_CASE("the published G range admits an invalid member") {
    const std::vector params{0.0, -0.5};
    REQUIRE(ctrans::in_range(Family::G, params));
    const auto cert = kernel_is_valid(ctrans::kernel_of(Family::G, params));
    CHECK(!cert.valid);
    CHECK(cert.min_value < 0.0);
}

TEST_CASE("grid spec sizing") {
    CHECK(GridSpec{-0.5, 4.5, 0.1}.size() == 51);
    CHECK(GridSpec{-3.5, 3.5, 0.1}.size() == 71);
    CHECK(GridSpec{0.0, 1.0, 0.3}.size() == 4);
    CHECK(GridSpec{2.0, 2.0, 0.1}.size() == 1);
    const GridSpec zero_step{0.0, 1.0, 0.0};
    const GridSpec negative_step{0.0, 1.0, -0.5};
    const GridSpec reversed{1.0, 0.0, 0.1};
    CHECK_THROWS_AS(zero_step.size(), std::invalid_argument);
    CHECK_THROWS_AS(negative_step.size(), std::invalid_argument);
    CHECK_THROWS_AS(reversed.size(), std::invalid_argument);
}

TEST_CASE("region scan over the G-kernel parameter plane") {
    const auto scan = ctrans::region_scan(Family::G, GridSpec{-0.5, 4.5, 0.1},
                                          GridSpec{-3.5, 3.5, 0.1});
    REQUIRE(scan.rows() == 51);
    REQUIRE(scan.cols() == 71);
    const auto& mg = ctrans::family_spec(Family::MG).constraints;
    std::size_t inside = 0;
    std::size_t valid_outside = 0;
    for (std::size_t i = 0; i < scan.rows(); ++i) {
        for (std::size_t j = 0; j < scan.cols(); ++j) {
            const std::vector cell{scan.axis1.point(i), scan.axis2->point(j)};
            if (mg.contains(cell, 1e-9)) {
                ++inside;
                CHECK(scan.cell(i, j));
            } else if (scan.cell(i, j)) {
                ++valid_outside;
            }
        }
    }
    CHECK(inside > 400);
    CHECK(valid_outside > 0);  // the modified range is sound but not maximal
}

TEST_CASE("one-dimensional scan matches the extended A range exactly") {
    const auto scan = ctrans::region_scan(Family::MA, GridSpec{-1.5, 3.5, 0.1});
    REQUIRE(scan.rows() == 51);
    for (std::size_t i = 0; i < scan.rows(); ++i) {
        const double lambda = scan.axis1.point(i);
        const bool expected = lambda >= -1.0 - 1e-9 && lambda <= 3.0 + 1e-9;
        CHECK(scan.cell(i, 0) == expected);
    }
}

TEST_CASE("scan axis arity validation") {
    CHECK_THROWS_AS(ctrans::region_scan(Family::MA, GridSpec{-1.0, 1.0, 0.1},
                                        GridSpec{-1.0, 1.0, 0.1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ctrans::region_scan(Family::MG, GridSpec{0.0, 3.0, 0.1}),
                    std::invalid_argument);
    CHECK_NOTHROW(ctrans::region_scan(Family::MG, GridSpec{0.0, 3.0, 0.5}, std::nullopt, 1.0));
    CHECK_THROWS_AS(ctrans::region_scan(Family::Pareto, GridSpec{0.0, 1.0, 0.1}),
                    std::invalid_argument);
}

TEST_CASE("scan CSV serialization") {
    std::ostringstream out;
    ctrans::write_region_csv(
        ctrans::region_scan(Family::MG, GridSpec{-0.1, 0.1, 0.1}, GridSpec{0.0, 0.1, 0.1}), out);
    CHECK(out.str() ==
          "param1,param2,valid\n"
          "-0.1,0,0\n"
          "-0.1,0.1,0\n"
          "0,0,1\n"
          "0,0.1,1\n"
          "0.1,0,1\n"
          "0.1,0.1,1\n");

    std::ostringstream strip;
    ctrans::write_region_csv(ctrans::region_scan(Family::MA, GridSpec{2.9, 3.1, 0.1}), strip);
    CHECK(strip.str() ==
          "param1,valid\n"
          "2.9,1\n"
          "3,1\n"
          "3.1,0\n");
}
