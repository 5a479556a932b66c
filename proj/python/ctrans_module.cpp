// Python bindings for the transmutation library. Families are addressed by
// their CLI names ("mg", "r18a", ...); fits come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctrans/baseline.hpp"
#include "ctrans/compare.hpp"
#include "ctrans/criteria.hpp"
#include "ctrans/dataset.hpp"
#include "ctrans/equivalence.hpp"
#include "ctrans/fit.hpp"
#include "ctrans/likelihood.hpp"
#include "ctrans/transmuted.hpp"
#include "ctrans/validity.hpp"

namespace py = pybind11;

namespace {

ctrans::Family family_arg(const std::string& name) {
    const auto family = ctrans::family_from_name(name);
    if (!family) throw std::invalid_argument("unknown family '" + name + "'");
    return *family;
}

py::dict fit_result_dict(const ctrans::FitResult& r) {
    py::dict d;
    d["family"] = std::string(ctrans::family_name(r.family));
    d["x0"] = r.x0;
    d["alpha"] = r.alpha;
    d["params"] = r.params;
    d["neg_log_lik"] = r.neg_log_lik;
    d["aic"] = r.aic;
    d["aicc"] = r.aicc;
    d["bic"] = r.bic;
    d["k"] = r.k;
    d["n"] = r.n;
    d["converged"] = r.converged;
    d["boundary"] = r.boundary;
    return d;
}

}  // namespace

PYBIND11_MODULE(ctrans, m) {
    m.doc() = "quadratic and cubic transmutation of probability distributions";

    py::class_<ctrans::Pareto, std::shared_ptr<ctrans::Pareto>>(m, "Pareto")
        .def(py::init<double, double>(), py::arg("scale"), py::arg("shape"))
        .def("cdf", &ctrans::Pareto::cdf, py::arg("x"))
        .def("pdf", &ctrans::Pareto::pdf, py::arg("x"))
        .def("log_pdf", &ctrans::Pareto::log_pdf, py::arg("x"))
        .def("quantile", &ctrans::Pareto::quantile, py::arg("u"))
        .def_property_readonly("scale", &ctrans::Pareto::scale)
        .def_property_readonly("shape", &ctrans::Pareto::shape);

    py::class_<ctrans::TransmutationKernel>(m, "TransmutationKernel")
        .def(py::init<double, double, double>(), py::arg("c0"), py::arg("c1"), py::arg("c2"))
        .def_readonly("c0", &ctrans::TransmutationKernel::c0)
        .def_readonly("c1", &ctrans::TransmutationKernel::c1)
        .def_readonly("c2", &ctrans::TransmutationKernel::c2)
        .def("density", &ctrans::TransmutationKernel::density, py::arg("t"))
        .def("cdf", &ctrans::TransmutationKernel::cdf, py::arg("t"))
        .def("inverse_cdf", &ctrans::TransmutationKernel::inverse_cdf, py::arg("u"));

    py::class_<ctrans::ValidityCertificate>(m, "ValidityCertificate")
        .def_readonly("valid", &ctrans::ValidityCertificate::valid)
        .def_readonly("min_value", &ctrans::ValidityCertificate::min_value)
        .def_readonly("argmin", &ctrans::ValidityCertificate::argmin)
        .def("__bool__", [](const ctrans::ValidityCertificate& c) { return c.valid; });

    py::class_<ctrans::TransmutedDistribution>(m, "TransmutedDistribution")
        .def("cdf", &ctrans::TransmutedDistribution::cdf, py::arg("x"))
        .def("pdf", &ctrans::TransmutedDistribution::pdf, py::arg("x"))
        .def("quantile", &ctrans::TransmutedDistribution::quantile, py::arg("u"))
        .def("sample", &ctrans::TransmutedDistribution::sample, py::arg("n"), py::arg("seed"))
        .def_property_readonly("params", &ctrans::TransmutedDistribution::params)
        .def_property_readonly("kernel", &ctrans::TransmutedDistribution::kernel)
        .def_property_readonly("family", [](const ctrans::TransmutedDistribution& d) {
            return std::string(ctrans::family_name(d.family()));
        });

    m.def(
        "make_distribution",
        [](std::shared_ptr<ctrans::Pareto> baseline, const std::string& family,
           const std::vector<double>& params, bool unchecked) {
            if (unchecked) {
                return ctrans::TransmutedDistribution::unchecked(std::move(baseline),
                                                                 family_arg(family), params);
            }
            return ctrans::TransmutedDistribution(std::move(baseline), family_arg(family), params);
        },
        py::arg("baseline"), py::arg("family"), py::arg("params"),
        py::arg("unchecked") = false);

    m.def("family_names", [] {
        std::vector<std::string> names;
        for (const auto family : ctrans::all_families()) {
            names.emplace_back(ctrans::family_name(family));
        }
        return names;
    });
    m.def("family_arity", [](const std::string& name) {
        return ctrans::family_spec(family_arg(name)).arity;
    });
    m.def(
        "kernel_of",
        [](const std::string& family, const std::vector<double>& params) {
            return ctrans::kernel_of(family_arg(family), params);
        },
        py::arg("family"), py::arg("params"));
    m.def(
        "in_range",
        [](const std::string& family, const std::vector<double>& params) {
            return ctrans::in_range(family_arg(family), params);
        },
        py::arg("family"), py::arg("params"));
    m.def("kernel_is_valid",
          py::overload_cast<const ctrans::TransmutationKernel&>(&ctrans::kernel_is_valid),
          py::arg("kernel"));

    m.def(
        "region_scan",
        [](const std::string& family, std::tuple<double, double, double> x,
           std::optional<std::tuple<double, double, double>> y) {
            const ctrans::GridSpec axis1{std::get<0>(x), std::get<1>(x), std::get<2>(x)};
            std::optional<ctrans::GridSpec> axis2;
            if (y) axis2 = ctrans::GridSpec{std::get<0>(*y), std::get<1>(*y), std::get<2>(*y)};
            const auto scan = ctrans::region_scan(family_arg(family), axis1, axis2);
            std::vector<std::vector<bool>> cells(scan.rows(), std::vector<bool>(scan.cols()));
            for (std::size_t i = 0; i < scan.rows(); ++i) {
                for (std::size_t j = 0; j < scan.cols(); ++j) cells[i][j] = scan.cell(i, j);
            }
            return cells;
        },
        py::arg("family"), py::arg("x"), py::arg("y") = std::nullopt);

    m.def(
        "order_stat_mixture_cdf",
        [](double g, std::tuple<double, double, double> w) {
            return ctrans::order_stat_mixture_cdf(
                g, ctrans::MixtureWeights(std::get<0>(w), std::get<1>(w), std::get<2>(w)));
        },
        py::arg("g"), py::arg("weights"));
    m.def("pair_mixture_cdf", &ctrans::pair_mixture_cdf, py::arg("g"), py::arg("pi"));
    m.def("map_mr18a_to_mg",
          [](const std::vector<double>& p) { return ctrans::map_mr18a_to_mg(p); });
    m.def("map_mg_to_mr18a",
          [](const std::vector<double>& p) { return ctrans::map_mg_to_mr18a(p); });
    m.def("map_mr18b_to_mg",
          [](const std::vector<double>& p) { return ctrans::map_mr18b_to_mg(p); });
    m.def("map_mg_to_mr18b",
          [](const std::vector<double>& p) { return ctrans::map_mg_to_mr18b(p); });
    m.def("embed_a_in_mg", &ctrans::embed_a_in_mg, py::arg("lam"));
    m.def("embed_r19_in_mg", &ctrans::embed_r19_in_mg, py::arg("lam"));

    m.def(
        "log_likelihood",
        [](const std::string& family, const std::vector<double>& values, double alpha,
           const std::vector<double>& params) {
            return ctrans::log_likelihood(family_arg(family), ctrans::Dataset(values), alpha,
                                          params);
        },
        py::arg("family"), py::arg("values"), py::arg("alpha"), py::arg("params"));

    m.def(
        "information_criteria",
        [](double neg_log_lik, int k, std::size_t n) {
            const auto c = ctrans::information_criteria(neg_log_lik, k, n);
            return std::make_tuple(c.aic, c.aicc, c.bic);
        },
        py::arg("neg_log_lik"), py::arg("k"), py::arg("n"));

    m.def(
        "fit",
        [](const std::string& family, const std::vector<double>& values, int starts) {
            ctrans::FitConfig config;
            config.max_starts = starts;
            return fit_result_dict(
                ctrans::fit(family_arg(family), ctrans::Dataset(values), config));
        },
        py::arg("family"), py::arg("values"), py::arg("starts") = 16);

    m.def(
        "compare",
        [](const std::vector<double>& values, const std::string& set_name, int starts) {
            std::span<const ctrans::Family> families;
            if (set_name == "unmodified") {
                families = ctrans::unmodified_family_set();
            } else if (set_name == "modified") {
                families = ctrans::modified_family_set();
            } else if (set_name == "all") {
                families = ctrans::all_families();
            } else {
                throw std::invalid_argument("set must be unmodified|modified|all");
            }
            ctrans::FitConfig config;
            config.max_starts = starts;
            const auto table = ctrans::compare(ctrans::Dataset(values), families, config);
            py::list rows;
            for (const auto& row : table.rows) {
                py::dict d = fit_result_dict(row.fit);
                d["rank_negloglik"] = row.rank_neg_log_lik;
                d["rank_aic"] = row.rank_aic;
                d["rank_aicc"] = row.rank_aicc;
                d["rank_bic"] = row.rank_bic;
                rows.append(d);
            }
            return rows;
        },
        py::arg("values"), py::arg("set_name") = "modified", py::arg("starts") = 16);
}
